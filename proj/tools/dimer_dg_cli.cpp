// dimer-dg: convergence sweeps, single runs, kink runs and the energy audit.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimer_dg/flux.hpp"
#include "dimer_dg/harness.hpp"
#include "dimer_dg/time_integration.hpp"

namespace {

using namespace dimer_dg;

struct RawOptions {
    std::optional<std::string> problem;
    std::vector<std::string> fluxes;
    bool allow_unstable = false;
    std::vector<std::size_t> degrees;
    std::vector<std::size_t> cells;
    std::optional<double> t_final;
    std::optional<double> cfl;
    std::optional<double> dt;
    std::string bc;
    std::optional<std::string> out;
    std::optional<std::string> seed_profile;
    std::optional<std::size_t> energy_every;
    std::optional<std::size_t> snapshot_every;
    std::optional<double> snapshot_interval;
    std::optional<std::size_t> samples;
    std::vector<double> box;
    std::optional<double> box_speed;
    std::optional<double> speed;
    std::optional<double> center;
    bool no_center = false;
    std::vector<double> domain;
    std::size_t states = 100;
    std::uint64_t seed = 20240607;
};

RunConfig build_config(const RawOptions& o, RunConfig c)
{
    if (o.problem) c.problem = *o.problem;
    if (!o.fluxes.empty()) c.fluxes = o.fluxes;
    c.allow_unstable = o.allow_unstable;
    if (!o.degrees.empty()) c.degrees = o.degrees;
    if (!o.cells.empty()) c.cells = o.cells;
    if (o.t_final) c.final_time = *o.t_final;
    if (o.cfl) {
        c.cfl = o.cfl;
        c.dt.reset();
    }
    if (o.dt) c.dt = o.dt;
    if (!o.bc.empty()) c.boundary = o.bc;
    if (o.out) c.out_dir = *o.out;
    if (o.seed_profile) c.seed_profile = *o.seed_profile;
    if (o.energy_every) c.energy_every = *o.energy_every;
    if (o.snapshot_every) c.snapshot_every = *o.snapshot_every;
    if (o.snapshot_interval) c.snapshot_interval = o.snapshot_interval;
    if (o.samples) c.samples_per_element = *o.samples;
    if (o.speed) c.kink_speed = *o.speed;
    if (!o.box.empty()) {
        if (o.box.size() != 2) throw std::invalid_argument("--box expects a0,b0");
        c.box = BoxSpec{o.box[0], o.box[1], o.box_speed.value_or(c.kink_speed)};
    } else if (c.box && o.box_speed) {
        c.box->speed = *o.box_speed;
    } else if (c.box && o.speed) {
        c.box->speed = *o.speed;
    }
    if (o.center) c.center = o.center;
    if (o.no_center) c.center.reset();
    if (!o.domain.empty()) {
        if (o.domain.size() != 2) throw std::invalid_argument("--domain expects x_a,x_b");
        c.domain = std::array<double, 2>{o.domain[0], o.domain[1]};
    }
    return c;
}

void print_files(const std::vector<std::string>& files)
{
    for (const auto& f : files) {
        std::printf("wrote %s\n", f.c_str());
    }
}

int fail(const char* category, const std::string& message)
{
    std::string line = message;
    for (char& ch : line) {
        if (ch == '\n') ch = ' ';
    }
    std::fprintf(stderr, "error:%s:%s\n", category, line.c_str());
    return category[0] == 'u' ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"DG solver for the dimer-lattice characteristic system"};
    app.set_config("--config", "", "key=value file; command-line flags win");
    app.require_subcommand(1);

    RawOptions o;
    app.add_option("--problem", o.problem, "example1 | example2 | kink");
    app.add_option("--flux", o.fluxes, "upwind | central | mixed-upwind | mixed-central | custom:a1,a2,b1,b2 (repeatable)");
    app.add_flag("--allow-unstable", o.allow_unstable, "accept flux parameters outside the stability region");
    app.add_option("--q", o.degrees, "polynomial degree(s)")->delimiter(',');
    app.add_option("--cells", o.cells, "element count(s)")->delimiter(',');
    app.add_option("--tfinal", o.t_final, "final time");
    app.add_option("--cfl", o.cfl, "dt = cfl * h");
    app.add_option("--dt", o.dt, "fixed time step");
    app.add_option("--bc", o.bc, "periodic | dirichlet (zero inflow)");
    app.add_option("--out", o.out, "output directory");
    app.add_option("--seed-profile", o.seed_profile, "kink seed: reference | w1,w2");
    app.add_option("--energy-every", o.energy_every, "energy log cadence in steps");
    app.add_option("--snapshot-every", o.snapshot_every, "snapshot cadence in steps (0: first and last only)");
    app.add_option("--snapshot-interval", o.snapshot_interval, "snapshot cadence in simulated time");
    app.add_option("--samples", o.samples, "snapshot points per element");
    app.add_option("--box", o.box, "moving box a0,b0")->delimiter(',')->expected(2);
    app.add_option("--box-speed", o.box_speed, "moving box speed (kink: wave speed)");
    app.add_option("--speed", o.speed, "kink wave speed c");
    app.add_option("--center", o.center, "place the |w| = 1/2 point of the kink here");
    app.add_flag("--no-center", o.no_center, "keep the kink in ODE coordinates");
    app.add_option("--domain", o.domain, "x_a,x_b")->delimiter(',')->expected(2);
    app.add_option("--states", o.states, "energy-audit: random states per flux");
    app.add_option("--seed", o.seed, "energy-audit: RNG seed");

    auto* converge = app.add_subcommand("converge", "L2 errors and orders over q x N sweeps");
    auto* simulate = app.add_subcommand("simulate", "single run with snapshots and energy log");
    auto* kink = app.add_subcommand("kink", "traveling kink: profile, projection, run");
    auto* audit = app.add_subcommand("energy-audit", "energy identity on random states");
    for (auto* sub : {converge, simulate, kink, audit}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what());
    }

    try {
        if (converge->parsed()) {
            RunConfig base;
            base.degrees = {1, 2, 3};
            base.cells = {40, 80, 160};
            base.out_dir = "out/converge";
            const RunConfig c = build_config(o, base);
            const auto tables = cmd_converge(c);
            for (std::size_t i = 0; i < tables.size(); ++i) {
                std::printf("flux %s\n%s\n", c.fluxes[i].c_str(), tables[i].to_text().c_str());
            }
        } else if (simulate->parsed()) {
            RunConfig base;
            base.out_dir = "out/simulate";
            if (o.problem && *o.problem == "kink") {
                base = RunConfig::kink_defaults();
            }
            const RunConfig c = build_config(o, base);
            const SimulationResult r = cmd_simulate(c);
            if (!r.energy.empty()) {
                std::printf("E_h(0) = %.12e  E_h(T) = %.12e\n", r.energy.front().energy, r.energy.back().energy);
            }
            print_files(r.files);
        } else if (kink->parsed()) {
            const RunConfig c = build_config(o, RunConfig::kink_defaults());
            const KinkRunResult r = cmd_kink(c);
            std::printf("right state (%.6f, %.6f)  Q drift %.3e\n", r.profile.asymptotic_right[0],
                        r.profile.asymptotic_right[1], r.profile.q_drift);
            if (r.midpoint_initial && r.midpoint_final) {
                std::printf("transition %.6f -> %.6f  (displacement %.6f)\n", *r.midpoint_initial, *r.midpoint_final,
                            *r.midpoint_final - *r.midpoint_initial);
            }
            if (!r.run.energy.empty()) {
                const double e0 = r.run.energy.front().box_energy;
                const double e1 = r.run.energy.back().box_energy;
                std::printf("box energy %.12e -> %.12e  relative drift %.3e\n", e0, e1, std::abs(e1 - e0) / e0);
            }
            print_files(r.run.files);
        } else if (audit->parsed()) {
            const std::size_t q = o.degrees.empty() ? 3 : o.degrees.front();
            const std::size_t n = o.cells.empty() ? 20 : o.cells.front();
            const auto rows = cmd_energy_audit(o.states, q, n, o.seed);
            double worst = 0.0;
            for (const auto& row : rows) {
                std::printf("%-14s %-10s states %zu  max relative error %.3e\n", row.flux.c_str(),
                            row.boundary.c_str(), row.n_states, row.max_relative_error);
                worst = std::max(worst, row.max_relative_error);
            }
            if (worst > 1e-11) {
                return fail("audit", "energy identity mismatch " + std::to_string(worst));
            }
        }
    } catch (const NonFiniteStateError& e) {
        return fail("nonfinite", e.what());
    } catch (const std::invalid_argument& e) {
        return fail("config", e.what());
    } catch (const std::domain_error& e) {
        return fail("config", e.what());
    } catch (const std::exception& e) {
        const std::string what = e.what();
        return fail(what.rfind("non-finite", 0) == 0 ? "nonfinite" : "runtime", what);
    }
    return 0;
}
