#include "dimer_dg/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dimer_dg/csv.hpp"
#include "dimer_dg/dg_operator.hpp"
#include "dimer_dg/projection.hpp"

namespace dimer_dg {

namespace {

std::array<double, 2> parse_seed(const std::string& text)
{
    if (text.empty() || text == "reference") {
        return reference_kink_seed();
    }
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("seed profile must be 'reference' or 'w1,w2', got '" + text + "'");
    }
    std::size_t used1 = 0;
    std::size_t used2 = 0;
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    double w1 = 0.0;
    double w2 = 0.0;
    try {
        w1 = std::stod(a, &used1);
        w2 = std::stod(b, &used2);
    } catch (const std::exception&) {
        throw std::invalid_argument("seed profile must be 'reference' or 'w1,w2', got '" + text + "'");
    }
    if (used1 != a.size() || used2 != b.size()) {
        throw std::invalid_argument("seed profile must be 'reference' or 'w1,w2', got '" + text + "'");
    }
    return {w1, w2};
}

std::string join_path(const std::string& dir, const std::string& name)
{
    return (std::filesystem::path(dir) / name).string();
}

void ensure_dir(const std::string& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create directory '" + dir + "': " + ec.message());
    }
}

void write_manifest(const std::string& dir, const std::vector<std::string>& files,
                    const std::vector<std::pair<std::string, std::string>>& entries)
{
    std::ofstream out(join_path(dir, "manifest.txt"));
    if (!out) {
        throw std::runtime_error("cannot write manifest in '" + dir + "'");
    }
    for (const auto& [k, v] : entries) {
        out << k << '=' << v << '\n';
    }
    for (const auto& f : files) {
        out << "file=" << std::filesystem::path(f).filename().string() << '\n';
    }
}

std::string fmt(double v)
{
    return format_scientific(v);
}

std::size_t single(const std::vector<std::size_t>& v, const char* what)
{
    if (v.empty()) {
        throw std::invalid_argument(std::string("missing ") + what);
    }
    return v.front();
}

}  // namespace

RunConfig RunConfig::kink_defaults()
{
    RunConfig c;
    c.problem = "kink";
    c.fluxes = {"upwind"};
    c.degrees = {3};
    c.cells = {600};
    c.final_time = 100.0;
    c.dt = 4e-5;
    c.domain = std::array<double, 2>{-40.0, 200.0};
    c.box = BoxSpec{60.0, 140.0, 0.4};
    c.kink_speed = 0.4;
    c.center = 60.0;
    c.out_dir = "out/kink";
    return c;
}

ProblemSpec configured_problem(const RunConfig& config)
{
    ProblemSpec p = make_problem(config.problem);
    if (config.domain) {
        const auto [a, b] = *config.domain;
        if (!(b > a)) {
            throw std::invalid_argument("domain needs x_a < x_b");
        }
        p.x_a = a;
        p.x_b = b;
    }
    if (config.boundary == "periodic") {
        p.boundary = BoundaryCondition{};
    } else if (config.boundary == "dirichlet" || config.boundary == "inflow") {
        p.boundary = BoundaryCondition{BoundaryKind::dirichlet_inflow, 0.0, 0.0};
    } else if (!config.boundary.empty()) {
        throw std::invalid_argument("unknown boundary '" + config.boundary + "' (periodic|dirichlet)");
    }
    return p;
}

TimeStepPlan configured_plan(const RunConfig& config, const Mesh1D& mesh)
{
    if (!(config.final_time >= 0.0) || !std::isfinite(config.final_time)) {
        throw std::invalid_argument("final time must be finite and non-negative");
    }
    if (config.dt) {
        if (!(*config.dt > 0.0)) {
            throw std::invalid_argument("dt must be positive");
        }
        return TimeStepPlan::fixed(config.final_time, *config.dt);
    }
    const double cfl = config.cfl.value_or(kConvergenceCfl);
    if (!(cfl > 0.0)) {
        throw std::invalid_argument("cfl must be positive");
    }
    return TimeStepPlan::cfl_scaled(config.final_time, mesh.h_min(), cfl);
}

DGState radau_initial_state(const ProblemSpec& problem, std::shared_ptr<const Mesh1D> mesh, std::size_t q)
{
    if (!problem.exact_solution) {
        throw std::invalid_argument("problem '" + problem.name + "' has no exact solution");
    }
    const PairFunction& exact = *problem.exact_solution;
    const ModalField w1 = gauss_radau_project([&](double x) { return exact(x, 0.0)[0]; }, mesh, q, RadauSide::plus);
    const ModalField w2 = gauss_radau_project([&](double x) { return exact(x, 0.0)[1]; }, mesh, q, RadauSide::minus);
    return DGState(w1, w2, 0.0);
}

L2Errors run_convergence_case(const ProblemSpec& problem, const FluxParams& flux, std::size_t q,
                              std::size_t n_elements, double final_time, std::optional<double> cfl)
{
    auto mesh = std::make_shared<const Mesh1D>(build_uniform_mesh(problem.x_a, problem.x_b, n_elements));
    DGState state = radau_initial_state(problem, mesh, q);
    const TimeStepPlan plan = TimeStepPlan::cfl_scaled(final_time, mesh->h_min(), cfl.value_or(kConvergenceCfl));
    state = evolve(std::move(state), plan, problem, flux);
    return l2_error(state, *problem.exact_solution, state.time());
}

ConvergenceTable convergence_sweep(const ProblemSpec& problem, const FluxParams& flux,
                                   const std::vector<std::size_t>& degrees, const std::vector<std::size_t>& cells,
                                   double final_time, std::optional<double> cfl)
{
    if (!problem.exact_solution) {
        throw std::invalid_argument("converge: problem '" + problem.name + "' has no exact solution");
    }
    ConvergenceTable table;
    for (const std::size_t q : degrees) {
        for (const std::size_t n : cells) {
            ConvergenceRow row;
            row.q = q;
            row.n_elements = n;
            row.errors = run_convergence_case(problem, flux, q, n, final_time, cfl);
            table.rows.push_back(row);
        }
    }
    table.compute_orders();
    return table;
}

std::vector<ConvergenceTable> cmd_converge(const RunConfig& config)
{
    const ProblemSpec problem = configured_problem(config);
    if (!problem.exact_solution) {
        throw std::invalid_argument("converge: problem '" + problem.name + "' has no exact solution");
    }
    if (config.dt) {
        throw std::invalid_argument("converge: use --cfl; the step must scale with h");
    }
    std::vector<ConvergenceTable> tables;
    for (const auto& flux_text : config.fluxes) {
        const FluxParams flux = parse_flux(flux_text, config.allow_unstable);
        ConvergenceTable table = convergence_sweep(problem, flux, config.degrees, config.cells, config.final_time,
                                                   config.cfl);
        if (!config.out_dir.empty()) {
            const std::string dir = join_path(config.out_dir, flux_name(flux));
            ensure_dir(dir);
            table.write_csv(join_path(dir, "errors.csv"));
        }
        tables.push_back(std::move(table));
    }
    return tables;
}

SimulationResult run_simulation(const RunConfig& config, const ProblemSpec& problem, DGState initial,
                                const std::string& out_dir)
{
    const FluxParams flux = parse_flux(config.fluxes.empty() ? std::string("upwind") : config.fluxes.front(),
                                       config.allow_unstable);
    const TimeStepPlan plan = configured_plan(config, initial.mesh());

    SimulationResult result{initial, initial, {}, {}};
    const bool write = !out_dir.empty();
    std::optional<CsvWriter> snapshots;
    std::optional<CsvWriter> energy;
    if (write) {
        ensure_dir(out_dir);
        snapshots.emplace(join_path(out_dir, "snapshots.csv"),
                          std::vector<std::string>{"t", "x", "w1", "w2", "b1", "b2", "w1_exact", "w2_exact"});
        energy.emplace(join_path(out_dir, "energy.csv"), std::vector<std::string>{"step", "t", "E_h", "box_E_h"});
    }

    const Mesh1D& mesh = initial.mesh();
    const std::size_t samples = std::max<std::size_t>(config.samples_per_element, 1);
    const auto write_snapshot = [&](const DGState& s) {
        if (!snapshots) {
            return;
        }
        const double t = s.time();
        for (std::size_t j = 0; j < mesh.n_elements(); ++j) {
            for (std::size_t k = 0; k < samples; ++k) {
                // interior equispaced points, midpoints of `samples` sub-cells
                const double r = -1.0 + (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(samples);
                const double x = mesh.from_reference(j, r);
                const double w1 = s.evaluate_reference(0, j, r);
                const double w2 = s.evaluate_reference(1, j, r);
                const auto b = characteristic_transform(w1, w2);
                double e1 = std::nan("");
                double e2 = std::nan("");
                if (problem.exact_solution) {
                    const auto e = (*problem.exact_solution)(x, t);
                    e1 = e[0];
                    e2 = e[1];
                }
                snapshots->row({t, x, w1, w2, b[0], b[1], e1, e2});
            }
        }
    };

    const auto box_energy = [&](const DGState& s) {
        if (!config.box) {
            return discrete_energy(s);
        }
        const double shift = config.box->speed * s.time();
        return moving_box_energy(s, config.box->a0 + shift, config.box->b0 + shift);
    };

    std::size_t last_step = 0;
    std::vector<Observer> observers;
    observers.push_back({1, [&](std::size_t step, const DGState&) { last_step = step; }});
    observers.push_back({std::max<std::size_t>(config.energy_every, 1), [&](std::size_t step, const DGState& s) {
                             const EnergyRecord rec{step, s.time(), discrete_energy(s), box_energy(s)};
                             result.energy.push_back(rec);
                             if (energy) {
                                 energy->row({static_cast<double>(rec.step), rec.t, rec.energy, rec.box_energy});
                             }
                         }});
    std::size_t snapshot_every = config.snapshot_every;
    if (config.snapshot_interval) {
        snapshot_every = steps_per_interval(plan, *config.snapshot_interval);
    }
    if (snapshot_every == 0) {
        // initial and final state only
        observers.push_back({plan.n_steps + 1, [&](std::size_t, const DGState& s) { write_snapshot(s); }});
    } else {
        observers.push_back({snapshot_every, [&](std::size_t, const DGState& s) { write_snapshot(s); }});
    }

    try {
        result.final_state = evolve(std::move(initial), plan, problem, flux, observers);
    } catch (const NonFiniteStateError& e) {
        throw std::runtime_error("non-finite state at step " + std::to_string(last_step + 1) + ": " + e.what());
    }

    if (write) {
        result.files = {snapshots->path(), energy->path(), join_path(out_dir, "manifest.txt")};
    }
    return result;
}

SimulationResult cmd_simulate(const RunConfig& config)
{
    const ProblemSpec problem = configured_problem(config);
    if (problem.name == "kink") {
        return cmd_kink(config).run;
    }
    const std::size_t q = single(config.degrees, "degree");
    const std::size_t n = single(config.cells, "cell count");
    auto mesh = std::make_shared<const Mesh1D>(build_uniform_mesh(problem.x_a, problem.x_b, n));
    DGState initial = radau_initial_state(problem, mesh, q);
    SimulationResult result = run_simulation(config, problem, std::move(initial), config.out_dir);
    if (!config.out_dir.empty()) {
        const FluxParams flux = parse_flux(config.fluxes.front(), config.allow_unstable);
        write_manifest(config.out_dir, {result.files[0], result.files[1]},
                       {{"command", "simulate"},
                        {"problem", problem.name},
                        {"flux", flux_name(flux)},
                        {"q", std::to_string(q)},
                        {"cells", std::to_string(n)},
                        {"t_final", fmt(config.final_time)}});
    }
    return result;
}

KinkProfile kink_profile_on_mesh(const RunConfig& config, const Mesh1D& mesh)
{
    const std::vector<double> z = volume_quadrature_points(mesh);
    KinkOptions options;
    options.center = config.center;
    return generate_kink(config.kink_speed, z, parse_seed(config.seed_profile), options);
}

KinkRunResult cmd_kink(const RunConfig& config)
{
    if (!(std::abs(config.kink_speed) < 1.0)) {
        throw std::invalid_argument("kink speed must satisfy |c| < 1");
    }
    const std::size_t q = single(config.degrees, "degree");
    const std::size_t n = single(config.cells, "cell count");
    const auto [x_a, x_b] = config.domain.value_or(std::array<double, 2>{-40.0, 200.0});
    auto mesh = std::make_shared<const Mesh1D>(build_uniform_mesh(x_a, x_b, n));

    KinkProfile profile = kink_profile_on_mesh(config, *mesh);
    const ProblemSpec problem = make_kink_problem(x_a, x_b, profile.asymptotic_right[0]);

    std::vector<double> w1(profile.samples.size());
    std::vector<double> w2(profile.samples.size());
    for (std::size_t i = 0; i < profile.samples.size(); ++i) {
        w1[i] = profile.samples[i].w1;
        w2[i] = profile.samples[i].w2;
    }
    DGState initial(l2_project_nodal(w1, mesh, q), l2_project_nodal(w2, mesh, q), 0.0);

    KinkRunResult out{std::move(profile), {initial, initial, {}, {}}, std::nullopt, std::nullopt};
    out.midpoint_initial = modulus_crossing(initial);
    out.run = run_simulation(config, problem, std::move(initial), config.out_dir);
    out.midpoint_final = modulus_crossing(out.run.final_state);

    if (!config.out_dir.empty()) {
        const std::string profile_path = join_path(config.out_dir, "profile.csv");
        out.profile.write_csv(profile_path);
        const FluxParams flux = parse_flux(config.fluxes.front(), config.allow_unstable);
        std::vector<std::pair<std::string, std::string>> entries = {
            {"command", "kink"},
            {"flux", flux_name(flux)},
            {"speed", fmt(config.kink_speed)},
            {"q", std::to_string(q)},
            {"cells", std::to_string(n)},
            {"x_a", fmt(x_a)},
            {"x_b", fmt(x_b)},
            {"t_final", fmt(config.final_time)},
            {"w1_right", fmt(out.profile.asymptotic_right[0])},
            {"w2_right", fmt(out.profile.asymptotic_right[1])},
            {"q_drift", fmt(out.profile.q_drift)},
        };
        if (out.midpoint_initial) {
            entries.emplace_back("midpoint_initial", fmt(*out.midpoint_initial));
        }
        if (out.midpoint_final) {
            entries.emplace_back("midpoint_final", fmt(*out.midpoint_final));
        }
        write_manifest(config.out_dir, {profile_path, out.run.files[0], out.run.files[1]}, entries);
        out.run.files.insert(out.run.files.begin(), profile_path);
    }
    return out;
}

DGState random_state(std::shared_ptr<const Mesh1D> mesh, std::size_t q, std::uint64_t seed)
{
    DGState s(std::move(mesh), q, 0.0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double& c : s.coefficients()) {
        c = dist(rng);
    }
    return s;
}

double energy_identity_error(const DGState& state, const ProblemSpec& problem, const FluxParams& flux)
{
    ProblemSpec unforced = problem;
    unforced.forcing.reset();
    const DGState rate = assemble_rhs(state, state.time(), unforced, flux);
    const double pairing = 2.0 * energy_pairing(state, rate);
    const double formula = 2.0 * energy_rate_formula(state, flux, unforced);
    const double scale = std::max(std::abs(formula), 2.0 * discrete_energy(state));
    return std::abs(pairing - formula) / scale;
}

std::vector<EnergyAuditRow> cmd_energy_audit(std::size_t n_states, std::size_t q, std::size_t n_elements,
                                             std::uint64_t seed)
{
    const FluxPreset presets[] = {FluxPreset::upwind, FluxPreset::central, FluxPreset::mixed_upwind,
                                  FluxPreset::mixed_central};
    std::vector<EnergyAuditRow> rows;
    for (const bool periodic : {true, false}) {
        ProblemSpec problem = make_problem("example1");
        problem.forcing.reset();
        if (!periodic) {
            problem.boundary = BoundaryCondition{BoundaryKind::dirichlet_inflow, 0.3, -0.7};
        }
        auto mesh = std::make_shared<const Mesh1D>(build_uniform_mesh(problem.x_a, problem.x_b, n_elements));
        for (const FluxPreset preset : presets) {
            const FluxParams flux = FluxParams::from_preset(preset);
            EnergyAuditRow row{flux_name(flux), periodic ? "periodic" : "dirichlet", n_states, 0.0};
            for (std::size_t i = 0; i < n_states; ++i) {
                const DGState s = random_state(mesh, q, seed + i);
                row.max_relative_error = std::max(row.max_relative_error, energy_identity_error(s, problem, flux));
            }
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace dimer_dg
