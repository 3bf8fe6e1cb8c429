#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace dimer_dg {

/// Coupling coefficient N(w1, w2) of the semi-linear system.
struct Nonlinearity {
    std::string name;
    std::function<double(double, double)> evaluate;

    double operator()(double w1, double w2) const { return evaluate(w1, w2); }
};

/// arccosh(2) = ln(2 + sqrt 3), the scale that puts the zero of N on the unit circle.
inline constexpr double kSechScale = 1.316957896924816708625046347;
/// Limit of the sech coupling as the modulus grows.
inline constexpr double kSechAsymptote = -1.0;

/// N = 2 sech(arccosh(2) * sqrt(w1^2 + w2^2)) - 1, with sech x = 2 e^-x / (1 + e^-2x).
inline double sech_nonlinearity(double w1, double w2)
{
    const double e = std::exp(-kSechScale * std::sqrt(w1 * w1 + w2 * w2));
    return 4.0 * e / (1.0 + e * e) - 1.0;
}

Nonlinearity make_sech_nonlinearity();
/// N identically zero: the linear transport system.
Nonlinearity make_zero_nonlinearity();

/// (w1, w2) = A (b1, b2) with A = [[1, 1], [1, -1]] / sqrt 2. A is an
/// involution, so the same map also recovers (b1, b2) from (w1, w2).
std::array<double, 2> characteristic_transform(double b1, double b2);

/// z1 = N w1 (which = 1) or z2 = N w2 (which = 2).
double coupling_z(double w1, double w2, int which, const Nonlinearity& nl);

enum class BoundaryKind { periodic, dirichlet_inflow };

/// Boundary data. For dirichlet_inflow the incoming characteristic values
/// are w1 at x_b and w2 at x_a; the outgoing ones come from the interior.
struct BoundaryCondition {
    BoundaryKind kind = BoundaryKind::periodic;
    double w1_at_right = 0.0;
    double w2_at_left = 0.0;
};

using PairFunction = std::function<std::array<double, 2>(double x, double t)>;

/// One experiment: the forced characteristic system
///   w1_t =  w1_x - N w2 + f1,
///   w2_t = -w2_x + N w1 + f2
/// on (x_a, x_b) with the given boundary treatment.
struct ProblemSpec {
    std::string name;
    Nonlinearity nonlinearity;
    std::optional<PairFunction> exact_solution;
    std::optional<PairFunction> forcing;
    BoundaryCondition boundary;
    double x_a = 0.0;
    double x_b = 1.0;
};

/// Recognized names: "example1" (periodic manufactured solution),
/// "example2" (Gaussian two-mode solution, zero inflow), "kink".
ProblemSpec make_problem(std::string_view name);

/// Kink run on (x_a, x_b): no forcing, w2 = 0 inflow at x_a and the
/// right asymptotic value of w1 as inflow at x_b.
ProblemSpec make_kink_problem(double x_a, double x_b, double w1_right_inflow);

}  // namespace dimer_dg
