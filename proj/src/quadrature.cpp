#include "dimer_dg/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dimer_dg {

namespace {

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
void legendre_with_derivative(std::size_t n, double x, double& p, double& dp)
{
    double p0 = 1.0;
    double p1 = x;
    if (n == 0) {
        p = 1.0;
        dp = 0.0;
        return;
    }
    for (std::size_t k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

QuadratureRule gauss_legendre(std::size_t n_nodes)
{
    if (n_nodes == 0) {
        throw std::invalid_argument("gauss_legendre: need at least one node");
    }
    QuadratureRule rule;
    rule.nodes.resize(n_nodes);
    rule.weights.resize(n_nodes);

    const double n = static_cast<double>(n_nodes);
    const std::size_t half = (n_nodes + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Tricomi initial guess for the i-th largest root, then Newton.
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
        double p = 0.0;
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            legendre_with_derivative(n_nodes, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        legendre_with_derivative(n_nodes, x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[n_nodes - 1 - i] = x;
        rule.nodes[i] = -x;
        rule.weights[n_nodes - 1 - i] = w;
        rule.weights[i] = w;
    }
    if (n_nodes % 2 == 1) {
        rule.nodes[n_nodes / 2] = 0.0;
    }
    return rule;
}

}  // namespace dimer_dg
