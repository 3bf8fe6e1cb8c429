#include "dimer_dg/dormand_prince.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dimer_dg {

namespace {

using State = DormandPrince45::State;

constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0, a75 = -2187.0 / 6784.0,
                 a76 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// Continuous extension (Hairer, Norsett, Wanner).
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

State combo(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms)
{
    State out = y;
    for (const auto& [a, k] : terms) {
        out[0] += h * a * (*k)[0];
        out[1] += h * a * (*k)[1];
    }
    return out;
}

}  // namespace

State DormandPrince45::Step::evaluate(double z) const
{
    const double theta = (z - z0) / h;
    const double theta1 = 1.0 - theta;
    State out{};
    for (int i = 0; i < 2; ++i) {
        out[i] = coeffs[0][i] +
                 theta * (coeffs[1][i] + theta1 * (coeffs[2][i] + theta * (coeffs[3][i] + theta1 * coeffs[4][i])));
    }
    return out;
}

State DormandPrince45::Solution::operator()(double z) const
{
    if (steps_.empty()) {
        if (z != z_begin_) {
            throw std::domain_error("DormandPrince45::Solution: empty solution queried away from start");
        }
        return initial_;
    }
    const double lo = std::min(z_begin_, z_end_);
    const double hi = std::max(z_begin_, z_end_);
    if (z < lo || z > hi) {
        throw std::domain_error("DormandPrince45::Solution: z outside integrated range");
    }
    const bool forward = z_end_ >= z_begin_;
    // Steps are ordered along the direction of integration.
    auto it = std::upper_bound(steps_.begin(), steps_.end(), z, [forward](double value, const Step& s) {
        return forward ? value < s.z0 : value > s.z0;
    });
    const Step& s = it == steps_.begin() ? *it : *std::prev(it);
    return s.evaluate(z);
}

DormandPrince45::Solution DormandPrince45::integrate(const Rhs& rhs, double z0, const State& y0, double z_end,
                                                     const StepMonitor& monitor) const
{
    Solution sol;
    sol.z_begin_ = z0;
    sol.z_end_ = z0;
    sol.initial_ = y0;
    sol.final_ = y0;
    if (z_end == z0) {
        return sol;
    }
    const double dir = z_end > z0 ? 1.0 : -1.0;
    double h = dir * std::min(std::abs(options_.initial_step), options_.max_step);
    double z = z0;
    State y = y0;
    State k1 = rhs(y);

    for (std::size_t n = 0; n < options_.max_steps; ++n) {
        if (dir * (z + h - z_end) > 0.0) {
            h = z_end - z;
        }
        const State k2 = rhs(combo(y, h, {{a21, &k1}}));
        const State k3 = rhs(combo(y, h, {{a31, &k1}, {a32, &k2}}));
        const State k4 = rhs(combo(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const State k5 = rhs(combo(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const State k6 = rhs(combo(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        const State y1 = combo(y, h, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
        const State k7 = rhs(y1);

        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = options_.atol + options_.rtol * std::max(std::abs(y[i]), std::abs(y1[i]));
            err += (e / sc) * (e / sc);
        }
        err = std::sqrt(err / 2.0);
        if (!std::isfinite(err)) {
            throw std::runtime_error("DormandPrince45: non-finite error estimate");
        }

        if (err <= 1.0) {
            Step step;
            step.z0 = z;
            step.h = h;
            for (int i = 0; i < 2; ++i) {
                const double ydiff = y1[i] - y[i];
                const double bspl = h * k1[i] - ydiff;
                step.coeffs[0][i] = y[i];
                step.coeffs[1][i] = ydiff;
                step.coeffs[2][i] = bspl;
                step.coeffs[3][i] = ydiff - h * k7[i] - bspl;
                step.coeffs[4][i] =
                    h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
            }
            sol.steps_.push_back(step);
            z = (std::abs(z_end - (z + h)) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(z_end))
                    ? z_end
                    : z + h;
            y = y1;
            k1 = k7;
            sol.z_end_ = z;
            sol.final_ = y;
            if (monitor && !monitor(z, y)) {
                return sol;
            }
            if (z == z_end || dir * (z - z_end) >= 0.0) {
                sol.z_end_ = z_end;
                return sol;
            }
        }
        const double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h = dir * std::min(std::abs(h) * (err <= 1.0 ? fac : std::min(fac, 1.0)), options_.max_step);
        if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(z))) {
            throw std::runtime_error("DormandPrince45: step size underflow");
        }
    }
    throw std::runtime_error("DormandPrince45: maximum number of steps exceeded");
}

}  // namespace dimer_dg
