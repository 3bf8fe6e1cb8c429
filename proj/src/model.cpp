#include "dimer_dg/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dimer_dg {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

struct Trajectory {
    double w1, w2, w1_t, w2_t, w1_x, w2_x;
};

// f1 = w1_t - w1_x + N w2,  f2 = w2_t + w2_x - N w1.
std::array<double, 2> forcing_from(const Trajectory& s)
{
    const double n = sech_nonlinearity(s.w1, s.w2);
    return {s.w1_t - s.w1_x + n * s.w2, s.w2_t + s.w2_x - n * s.w1};
}

Trajectory example1_trajectory(double x, double t)
{
    using std::numbers::pi;
    const double c = std::cos(pi * x);
    const double s = std::sin(pi * x);
    const double ct = std::cos(t);
    const double st = std::sin(t);
    return {
        kInvSqrt2 * (c + s) * ct,
        kInvSqrt2 * (c - s) * ct,
        -kInvSqrt2 * (c + s) * st,
        -kInvSqrt2 * (c - s) * st,
        kInvSqrt2 * pi * (c - s) * ct,
        -kInvSqrt2 * pi * (s + c) * ct,
    };
}

Trajectory example2_trajectory(double x, double t)
{
    using std::numbers::pi;
    using std::numbers::sqrt2;
    const double g1 = std::exp(-x * x / 0.01);
    const double g2 = std::exp(-x * x / 0.025);
    const double dg1 = -2.0 * x / 0.01 * g1;
    const double dg2 = -2.0 * x / 0.025 * g2;
    const double a = std::cos(2.0 * pi * t);
    const double b = std::cos(4.0 * pi * t);
    const double da = -2.0 * pi * std::sin(2.0 * pi * t);
    const double db = -4.0 * pi * std::sin(4.0 * pi * t);
    return {
        sqrt2 * (a * g1 + 2.0 * b * g2),
        sqrt2 * (a * g1 - 2.0 * b * g2),
        sqrt2 * (da * g1 + 2.0 * db * g2),
        sqrt2 * (da * g1 - 2.0 * db * g2),
        sqrt2 * (a * dg1 + 2.0 * b * dg2),
        sqrt2 * (a * dg1 - 2.0 * b * dg2),
    };
}

ProblemSpec manufactured(std::string name, Trajectory (*traj)(double, double), BoundaryKind kind)
{
    ProblemSpec p;
    p.name = std::move(name);
    p.nonlinearity = make_sech_nonlinearity();
    p.exact_solution = [traj](double x, double t) {
        const Trajectory s = traj(x, t);
        return std::array<double, 2>{s.w1, s.w2};
    };
    p.forcing = [traj](double x, double t) { return forcing_from(traj(x, t)); };
    p.boundary.kind = kind;
    p.x_a = -2.0;
    p.x_b = 2.0;
    return p;
}

}  // namespace

Nonlinearity make_sech_nonlinearity()
{
    return {"sech", &sech_nonlinearity};
}

Nonlinearity make_zero_nonlinearity()
{
    return {"zero", [](double, double) { return 0.0; }};
}

std::array<double, 2> characteristic_transform(double b1, double b2)
{
    return {kInvSqrt2 * (b1 + b2), kInvSqrt2 * (b1 - b2)};
}

double coupling_z(double w1, double w2, int which, const Nonlinearity& nl)
{
    switch (which) {
    case 1:
        return nl(w1, w2) * w1;
    case 2:
        return nl(w1, w2) * w2;
    default:
        throw std::invalid_argument("coupling_z: which must be 1 or 2");
    }
}

ProblemSpec make_problem(std::string_view name)
{
    if (name == "example1") {
        return manufactured("example1", &example1_trajectory, BoundaryKind::periodic);
    }
    if (name == "example2") {
        return manufactured("example2", &example2_trajectory, BoundaryKind::dirichlet_inflow);
    }
    if (name == "kink") {
        constexpr double c = 0.4;
        return make_kink_problem(-40.0, 200.0, -std::sqrt((1.0 - c) / 2.0));
    }
    throw std::invalid_argument("make_problem: unknown problem '" + std::string(name) + "'");
}

ProblemSpec make_kink_problem(double x_a, double x_b, double w1_right_inflow)
{
    if (!(x_b > x_a)) {
        throw std::invalid_argument("make_kink_problem: invalid interval");
    }
    ProblemSpec p;
    p.name = "kink";
    p.nonlinearity = make_sech_nonlinearity();
    p.boundary.kind = BoundaryKind::dirichlet_inflow;
    p.boundary.w1_at_right = w1_right_inflow;
    p.boundary.w2_at_left = 0.0;
    p.x_a = x_a;
    p.x_b = x_b;
    return p;
}

}  // namespace dimer_dg
