#include "dimer_dg/traveling_wave.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "dimer_dg/csv.hpp"
#include "dimer_dg/dormand_prince.hpp"

namespace dimer_dg {

double q_invariant(double w1, double w2, double c)
{
    const double s = w1 + w2;
    const double d = w1 - w2;
    return c * (0.5 * s * s + 0.5 * d * d) + w1 * w1 - w2 * w2;
}

std::array<double, 2> ode_rhs(double w1, double w2, double c, const Nonlinearity& nl)
{
    if (std::abs(c) == 1.0) {
        throw std::invalid_argument("ode_rhs: wave speed |c| = 1 makes the traveling-wave system degenerate");
    }
    const double n = nl(w1, w2);
    return {n * w2 / (c + 1.0), n * w1 / (1.0 - c)};
}

std::array<double, 2> reference_kink_seed()
{
    return {-7.0 * std::numbers::sqrt2 * 1e-51, -3.0 * std::numbers::sqrt2 * 1e-51};
}

std::array<double, 2> kink_asymptote(double c, const std::array<double, 2>& seed)
{
    if (!(std::abs(c) < 1.0)) {
        throw std::invalid_argument("kink_asymptote: need |c| < 1");
    }
    // Unstable direction of the origin is (1, s) with s = sqrt((1+c)/(1-c)).
    const double s = std::sqrt((1.0 + c) / (1.0 - c));
    const double a = 0.5 * (seed[0] + seed[1] / s);
    const double sign = a < 0.0 ? -1.0 : 1.0;
    return {sign * std::sqrt((1.0 - c) / 2.0), sign * std::sqrt((1.0 + c) / 2.0)};
}

void KinkProfile::write_csv(const std::string& path) const
{
    CsvWriter csv(path, {"z", "w1", "w2", "Q"});
    for (const auto& s : samples) {
        csv.row({s.z, s.w1, s.w2, q_invariant(s.w1, s.w2, speed)});
    }
}

KinkProfile generate_kink(double c, std::span<const double> z_grid, const std::array<double, 2>& seed,
                          const KinkOptions& options, const Nonlinearity& nl)
{
    if (!(std::abs(c) < 1.0)) {
        throw std::invalid_argument("generate_kink: kinks need a subsonic speed |c| < 1");
    }
    KinkProfile profile;
    profile.speed = c;
    profile.q_value = q_invariant(seed[0], seed[1], c);
    profile.asymptotic_left = {0.0, 0.0};

    if (seed[0] == 0.0 && seed[1] == 0.0) {
        for (double z : z_grid) {
            profile.samples.push_back({z, 0.0, 0.0});
        }
        return profile;
    }

    DormandPrince45::Options ode_opts;
    ode_opts.rtol = options.rtol;
    ode_opts.atol = options.atol;
    ode_opts.max_step = options.max_step;
    ode_opts.initial_step = std::min(1e-2, options.max_step);
    const DormandPrince45 solver(ode_opts);

    bool crossed = false;
    bool settled = false;
    const auto monitor = [&](double, const DormandPrince45::State& y) {
        const double r = std::hypot(y[0], y[1]);
        if (!(r <= options.escape_radius)) {
            throw std::runtime_error("generate_kink: trajectory escaped radius " +
                                     std::to_string(options.escape_radius) + "; not a kink for this seed/speed");
        }
        crossed = crossed || r >= 0.5;
        settled = crossed && std::abs(r - 1.0) < 1e-14;
        return !settled;
    };
    const auto rhs = [&](const DormandPrince45::State& y) { return ode_rhs(y[0], y[1], c, nl); };
    const auto sol = solver.integrate(rhs, 0.0, seed, options.z_limit, monitor);
    if (!settled) {
        throw std::runtime_error("generate_kink: trajectory did not reach the unit circle by z = " +
                                 std::to_string(options.z_limit));
    }
    profile.asymptotic_right = sol.final_state();
    for (const auto& step : sol.steps()) {
        const auto y = step.evaluate(step.z0 + step.h);
        profile.q_drift = std::max(profile.q_drift, std::abs(q_invariant(y[0], y[1], c) - profile.q_value));
    }

    // Locate |w| = 1/2 on the dense output.
    const auto modulus_at = [&](double z) {
        const auto y = sol(z);
        return std::hypot(y[0], y[1]);
    };
    double z_half = 0.0;
    for (const auto& step : sol.steps()) {
        const double za = step.z0;
        const double zb = step.z0 + step.h;
        if (modulus_at(za) < 0.5 && modulus_at(zb) >= 0.5) {
            double lo = za;
            double hi = zb;
            for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
                const double mid = 0.5 * (lo + hi);
                (modulus_at(mid) < 0.5 ? lo : hi) = mid;
            }
            z_half = 0.5 * (lo + hi);
            break;
        }
    }
    profile.shift = options.center ? *options.center - z_half : 0.0;
    profile.midpoint = z_half + profile.shift;

    // Linear unstable manifold of the origin for z below the seed point.
    const double lambda = 1.0 / std::sqrt(1.0 - c * c);
    const double s = std::sqrt((1.0 + c) / (1.0 - c));
    const double a = 0.5 * (seed[0] + seed[1] / s);

    profile.samples.reserve(z_grid.size());
    for (double z : z_grid) {
        const double zo = z - profile.shift;
        DormandPrince45::State y;
        if (zo < 0.0) {
            const double g = a * std::exp(lambda * zo);
            y = {g, g * s};
        } else if (zo >= sol.z_end()) {
            y = profile.asymptotic_right;
        } else {
            y = sol(zo);
        }
        profile.samples.push_back({z, y[0], y[1]});
        profile.q_drift = std::max(profile.q_drift, std::abs(q_invariant(y[0], y[1], c) - profile.q_value));
    }
    return profile;
}

}  // namespace dimer_dg
