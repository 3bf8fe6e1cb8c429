// Acceptance run: one PASS/FAIL line per criterion, then a summary.
//
//   dimer_dg_acceptance [--kink-time T] [--long] [--expect-fail N]... [--only N]...

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dimer_dg/dg_operator.hpp"
#include "dimer_dg/diagnostics.hpp"
#include "dimer_dg/harness.hpp"
#include "dimer_dg/projection.hpp"
#include "dimer_dg/quadrature.hpp"

using namespace dimer_dg;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string printf_string(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string printf_string(const char* fmt, ...)
{
    char buf[1024];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::vector<std::size_t> kCells{40, 80, 160};

// Reference upwind errors for example1 (w1, w2, b1, b2), rows q = 1..3, N = 40, 80, 160.
constexpr double kUpwindTable[3][3][4] = {
    {{2.7426e-03, 2.7172e-03, 4.0346e-03, 3.6786e-03},
     {6.5702e-04, 6.5526e-04, 9.5004e-04, 9.0527e-04},
     {1.6186e-04, 1.6174e-04, 2.3167e-04, 2.2594e-04}},
    {{6.3391e-05, 6.3341e-05, 9.3036e-05, 8.6053e-05},
     {7.8644e-06, 7.8629e-06, 1.1336e-05, 1.0901e-05},
     {9.7931e-07, 9.7926e-07, 1.3984e-06, 1.3713e-06}},
    {{1.1951e-06, 1.1960e-06, 1.7589e-06, 1.6197e-06},
     {7.4395e-08, 7.4413e-08, 1.0684e-07, 1.0358e-07},
     {4.6378e-09, 4.6381e-09, 6.6103e-09, 6.5074e-09}},
};

double component(const L2Errors& e, int i)
{
    return i == 0 ? e.w1 : i == 1 ? e.w2 : i == 2 ? e.b1 : e.b2;
}

// Largest |order - target| over all components and refinements.
double worst_order_gap(const ConvergenceTable& t, std::size_t q, double target)
{
    double gap = 0.0;
    for (const auto& r : t.rows) {
        if (r.q != q) continue;
        for (const auto& o : r.orders) {
            if (o) gap = std::max(gap, std::abs(*o - target));
        }
    }
    return gap;
}

double mean_order(const ConvergenceTable& t, std::size_t q)
{
    double sum = 0.0;
    int n = 0;
    for (const auto& r : t.rows) {
        if (r.q != q) continue;
        for (const auto& o : r.orders) {
            if (o) {
                sum += *o;
                ++n;
            }
        }
    }
    return n ? sum / n : std::nan("");
}

Outcome criterion_upwind()
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto t = convergence_sweep(make_problem("example1"), FluxParams::from_preset(FluxPreset::upwind), {1, 2, 3},
                                     kCells, 1.0);
    const double runtime = seconds_since(t0);
    double gap = 0.0;
    double worst_ratio = 1.0;
    for (std::size_t q = 1; q <= 3; ++q) {
        gap = std::max(gap, worst_order_gap(t, q, q + 1.0));
    }
    for (const auto& r : t.rows) {
        const std::size_t i = r.n_elements == 40 ? 0 : r.n_elements == 80 ? 1 : 2;
        for (int c = 0; c < 4; ++c) {
            const double ratio = component(r.errors, c) / kUpwindTable[r.q - 1][i][c];
            worst_ratio = std::max({worst_ratio, ratio, 1.0 / ratio});
        }
    }
    const auto& q3n80 = t.rows[7];
    return {gap <= 0.15 && worst_ratio <= 2.0 && runtime < 120.0,
            printf_string("max |order-(q+1)| = %.4f (<= 0.15), worst error ratio vs reference = %.3f (<= 2), "
                          "q=3 N=80 e_w1 = %.4e, runtime %.1f s",
                          gap, worst_ratio, q3n80.errors.w1, runtime)};
}

Outcome criterion_mixed_upwind()
{
    const auto t = convergence_sweep(make_problem("example1"), FluxParams::from_preset(FluxPreset::mixed_upwind),
                                     {1, 2, 3}, kCells, 1.0);
    double gap = 0.0;
    for (std::size_t q = 1; q <= 3; ++q) {
        gap = std::max(gap, worst_order_gap(t, q, q + 1.0));
    }
    return {gap <= 0.2, printf_string("max |order-(q+1)| = %.4f (<= 0.2)", gap)};
}

Outcome criterion_central_parity()
{
    const auto central = FluxParams::from_preset(FluxPreset::central);
    const auto e1 = convergence_sweep(make_problem("example1"), central, {1, 2}, kCells, 1.0);
    const auto e2 = convergence_sweep(make_problem("example2"), central, {1, 2}, kCells, 1.0);
    const double gap1 = worst_order_gap(e1, 1, 1.0);
    const double gap1_e2 = worst_order_gap(e2, 1, 1.0);
    const double mean_e1 = mean_order(e1, 2);
    const double mean_e2 = mean_order(e2, 2);
    return {gap1 <= 0.1 && mean_e1 >= 3.5 && mean_e2 >= 3.5,
            printf_string("q=1 max |order-1| = %.4f (<= 0.1; example2 %.4f, not gated); q=2 mean order "
                          "example1 = %.3f, example2 = %.3f (>= 3.5 each)",
                          gap1, gap1_e2, mean_e1, mean_e2)};
}

// Smooth periodic data on (-2, 2): a few random Fourier modes per component.
ScalarFunction random_periodic(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::array<double, 3>> modes;
    for (int k = 1; k <= 3; ++k) {
        modes.push_back({static_cast<double>(k), u(rng), u(rng)});
    }
    const double offset = u(rng);
    return [modes, offset](double x) {
        double v = offset;
        for (const auto& [k, a, b] : modes) {
            v += a * std::cos(k * std::numbers::pi * x / 2.0) + b * std::sin(k * std::numbers::pi * x / 2.0);
        }
        return v;
    };
}

Outcome criterion_energy_conservation()
{
    ProblemSpec p = make_problem("example1");
    p.forcing.reset();
    const auto mesh = std::make_shared<const Mesh1D>(build_uniform_mesh(p.x_a, p.x_b, 40));
    std::mt19937_64 rng(2024);
    const auto f1 = random_periodic(rng);
    const auto f2 = random_periodic(rng);
    const DGState s0(l2_project(f1, mesh, 3), l2_project(f2, mesh, 3));
    const auto plan = TimeStepPlan::cfl_scaled(10.0, mesh->h_min());
    const DGState s1 = evolve(s0, plan, p, FluxParams::from_preset(FluxPreset::central));
    const double e0 = discrete_energy(s0);
    const double rel = std::abs(discrete_energy(s1) - e0) / e0;
    return {rel <= 1e-9, printf_string("|E(10)-E(0)|/E(0) = %.3e (<= 1e-9), %zu steps", rel, plan.n_steps)};
}

Outcome criterion_energy_identity()
{
    const auto rows = cmd_energy_audit(100, 3, 20, 77);
    double worst = 0.0;
    for (const auto& r : rows) {
        worst = std::max(worst, r.max_relative_error);
    }
    return {worst <= 1e-11,
            printf_string("max relative mismatch %.3e over %zu presets x boundaries x 100 states (<= 1e-11)", worst,
                          rows.size())};
}

Outcome criterion_stability_region()
{
    ProblemSpec p = make_problem("example1");
    p.forcing.reset();
    const auto mesh = std::make_shared<const Mesh1D>(build_uniform_mesh(p.x_a, p.x_b, 20));
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_stable = -std::numeric_limits<double>::infinity();
    int stable = 0;
    std::vector<FluxParams> violating;
    while (stable < 200 || violating.size() < 20) {
        const auto f = FluxParams::make(unit(rng), unit(rng), 6.0 * unit(rng) - 3.0, 6.0 * unit(rng) - 3.0, true);
        if (f.is_energy_stable()) {
            if (stable >= 200) continue;
            ++stable;
            for (std::uint64_t s = 0; s < 5; ++s) {
                const DGState st = random_state(mesh, 2, 500 * stable + s);
                worst_stable = std::max(worst_stable, energy_pairing(st, assemble_rhs(st, 0.0, p, f)));
            }
        } else if (violating.size() < 20) {
            violating.push_back(f);
        }
    }
    // Counterexample: one cell carrying (a, b) with the sign of (beta1 - beta2) chosen to make the cross term win.
    int positive = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& f : violating) {
        const double a1 = 1.0 - f.alpha1;
        const double a2 = 1.0 - f.alpha2;
        const double d = f.beta1 - f.beta2;
        // maximise -a1 x^2 - a2 y^2 + d x y over the unit circle
        double peak = -std::numeric_limits<double>::infinity();
        std::array<double, 2> arg{};
        for (int k = 0; k < 720; ++k) {
            const double t = k * std::numbers::pi / 360.0;
            const double v = -a1 * std::cos(t) * std::cos(t) - a2 * std::sin(t) * std::sin(t) +
                             d * std::cos(t) * std::sin(t);
            if (v > peak) {
                peak = v;
                arg = {std::cos(t), std::sin(t)};
            }
        }
        DGState st(std::make_shared<const Mesh1D>(build_uniform_mesh(p.x_a, p.x_b, 20)), 0);
        st.element(0, 7)[0] = std::sqrt(2.0) * arg[0];
        st.element(1, 7)[0] = std::sqrt(2.0) * arg[1];
        const double rate = energy_pairing(st, assemble_rhs(st, 0.0, p, f));
        best = std::max(best, rate);
        positive += rate > 0.0 ? 1 : 0;
    }
    return {worst_stable <= 1e-12 && positive >= 1,
            printf_string("max rate over 200 stable tuples = %.3e (<= 1e-12); counterexample rate > 0 for %d/%zu "
                          "violating tuples (max %.3e)",
                          worst_stable, positive, violating.size(), best)};
}

Outcome criterion_kink(double t_final)
{
    RunConfig c = RunConfig::kink_defaults();
    c.domain = std::array<double, 2>{-40.0, 80.0};
    c.cells = {300};
    c.degrees = {3};
    c.dt = 4e-5;
    c.final_time = t_final;
    c.center = 20.0;
    c.box = BoxSpec{20.0, 60.0, 0.4};
    c.out_dir.clear();
    const auto t0 = std::chrono::steady_clock::now();
    const KinkRunResult r = cmd_kink(c);
    const double runtime = seconds_since(t0);

    const double w1_ref = -std::sqrt(0.3);
    const double w2_ref = -std::sqrt(0.7);
    double d1 = 0.0;
    double d2 = 0.0;
    for (double x = 60.0; x <= 79.0; x += 0.25) {
        d1 = std::max(d1, std::abs(r.run.final_state.evaluate(0, x) - w1_ref));
        d2 = std::max(d2, std::abs(r.run.final_state.evaluate(1, x) - w2_ref));
    }
    const double h = 120.0 / 300.0;
    const double shift = (r.midpoint_final && r.midpoint_initial) ? *r.midpoint_final - *r.midpoint_initial : std::nan("");
    const double expected = 0.4 * t_final;
    const double e0 = r.run.energy.front().box_energy;
    double drift = 0.0;
    for (const auto& e : r.run.energy) {
        drift = std::max(drift, std::abs(e.box_energy - e0) / e0);
    }
    const bool ok = d1 <= 1e-3 && d2 <= 1e-3 && std::abs(shift - expected) <= h && drift <= 1e-6;
    return {ok, printf_string("T=%g: plateau |w1+sqrt0.3| = %.2e, |w2+sqrt0.7| = %.2e (<= 1e-3); displacement %.5f vs "
                              "%.1f (+- %.1f); box energy drift %.3e (<= 1e-6); %zu steps in %.0f s",
                              t_final, d1, d2, shift, expected, h, drift,
                              TimeStepPlan::fixed(t_final, 4e-5).n_steps, runtime)};
}

Outcome criterion_q_invariant()
{
    double worst = 0.0;
    std::size_t n = 0;
    for (double c : {0.4, -0.6, 0.0, 0.2, 0.8}) {
        for (double scale : {1.0, 1e21}) {
            auto seed = reference_kink_seed();
            seed[0] *= scale;
            seed[1] *= scale;
            std::vector<double> z;
            for (double x = -40.0; x <= 200.0; x += 0.1) z.push_back(x);
            KinkOptions opt;
            opt.center = 60.0;
            worst = std::max(worst, generate_kink(c, z, seed, opt).q_drift);
            ++n;
        }
    }
    return {worst <= 1e-8, printf_string("max Q drift %.3e over %zu trajectories (<= 1e-8)", worst, n)};
}

Outcome criterion_finite_speed()
{
    ProblemSpec p = make_problem("example1");
    p.forcing.reset();
    const std::size_t n = 80;
    const auto mesh = std::make_shared<const Mesh1D>(build_uniform_mesh(p.x_a, p.x_b, n));
    const double a = 0.5;
    const auto bump = [a](double x) {
        if (std::abs(x) >= a) return 0.0;
        const double c = std::cos(0.5 * std::numbers::pi * x / a);
        return std::pow(c, 8);
    };
    const DGState s0(l2_project([&](double x) { return 0.8 * bump(x); }, mesh, 3),
                     l2_project([&](double x) { return -0.6 * bump(x); }, mesh, 3));
    const double t = 1.0;
    const DGState s1 = evolve(s0, TimeStepPlan::cfl_scaled(t, mesh->h_min()), p,
                              FluxParams::from_preset(FluxPreset::upwind));
    const double h = mesh->h_min();
    const double lo = -a - t - 2.0 * h;
    const double hi = a + t + 2.0 * h;
    const double total = discrete_energy(s1);
    const double outside = moving_box_energy(s1, p.x_a, lo) + moving_box_energy(s1, hi, p.x_b);
    const double frac = outside / total;
    return {frac <= 1e-10, printf_string("energy fraction outside (%.3f, %.3f) at T=1: %.3e (<= 1e-10)", lo, hi, frac)};
}

Outcome criterion_projection()
{
    double endpoint = 0.0;
    double gap = 0.0;
    const auto u = [](double x) { return std::sin(std::numbers::pi * x) + 0.3 * std::cos(2.0 * x); };
    const auto rule = gauss_legendre(kVolumeQuadratureNodes);
    for (std::size_t q = 0; q <= 4; ++q) {
        double prev = 0.0;
        for (std::size_t n : {10, 20, 40, 80}) {
            const auto mesh = std::make_shared<const Mesh1D>(build_uniform_mesh(-1.0, 1.0, n));
            const auto pp = gauss_radau_project(u, mesh, q, RadauSide::plus);
            const auto pm = gauss_radau_project(u, mesh, q, RadauSide::minus);
            for (std::size_t j = 0; j < n; ++j) {
                endpoint = std::max(endpoint, std::abs(pp.evaluate_reference(j, -1.0) - u(mesh->left(j))));
                endpoint = std::max(endpoint, std::abs(pm.evaluate_reference(j, 1.0) - u(mesh->right(j))));
            }
            const auto l2 = l2_project(u, mesh, q);
            double e = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < rule.size(); ++k) {
                    const double d = l2.evaluate_reference(j, rule.nodes[k]) - u(mesh->from_reference(j, rule.nodes[k]));
                    e += 0.5 * mesh->width(j) * rule.weights[k] * d * d;
                }
            }
            e = std::sqrt(e);
            if (prev > 0.0) gap = std::max(gap, std::abs(std::log2(prev / e) - (q + 1.0)));
            prev = e;
        }
    }
    return {endpoint <= 1e-12 && gap <= 0.1,
            printf_string("Radau endpoint mismatch %.2e (<= 1e-12); L2 projection max |order-(q+1)| = %.4f (<= 0.1), "
                          "q = 0..4",
                          endpoint, gap)};
}

// Full-size kink runs, q = 1, 2, 3, T = 100: soft checks on the number of unchanged digits of the box energy.
void long_runs()
{
    for (std::size_t q : {1, 2, 3}) {
        RunConfig c = RunConfig::kink_defaults();
        c.degrees = {q};
        c.out_dir.clear();
        c.energy_every = 1000;
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = cmd_kink(c);
        const double e0 = r.run.energy.front().box_energy;
        const double rel = std::abs(r.run.energy.back().box_energy - e0) / e0;
        const double digits = -std::log10(rel);
        const double target = q == 1 ? 3.0 : q == 2 ? 5.0 : 8.0;
        std::printf("[%s] long q=%zu: box energy relative drift %.3e (%.1f digits, target ~%.0f), %.0f s\n",
                    std::abs(digits - target) <= 1.5 ? "SOFT-PASS" : "SOFT-MISS", q, rel, digits, target,
                    seconds_since(t0));
        std::fflush(stdout);
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    double kink_time = 20.0;
    bool long_mode = false;
    std::vector<int> expect_fail;
    std::vector<int> only;
    app.add_option("--kink-time", kink_time, "final time of the desk-scale kink run (20, or 5 for a quick run)");
    app.add_flag("--long", long_mode, "also run the T = 100 full-size kink for q = 1, 2, 3");
    app.add_option("--expect-fail", expect_fail, "criteria whose failure does not set the exit code");
    app.add_option("--only", only, "run only these criteria");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"upwind convergence", criterion_upwind},
        {"mixed-upwind convergence", criterion_mixed_upwind},
        {"central flux parity", criterion_central_parity},
        {"energy conservation", criterion_energy_conservation},
        {"energy identity", criterion_energy_identity},
        {"stability region", criterion_stability_region},
        {"desk-scale kink", [&] { return criterion_kink(kink_time); }},
        {"Q invariant", criterion_q_invariant},
        {"finite speed of propagation", criterion_finite_speed},
        {"projection suite", criterion_projection},
    };

    const std::set<int> allowed(expect_fail.begin(), expect_fail.end());
    int failed = 0;
    int unexpected = 0;
    std::vector<int> failing;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) {
            ++failed;
            failing.push_back(id);
            if (!allowed.count(id)) ++unexpected;
        }
    }
    if (long_mode) {
        long_runs();
    }
    std::printf("summary: %d failing", failed);
    for (int id : failing) std::printf(" #%d%s", id, allowed.count(id) ? " (expected)" : "");
    std::printf("\n");
    return unexpected == 0 ? 0 : 1;
}
