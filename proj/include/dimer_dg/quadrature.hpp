#pragma once

#include <cstddef>
#include <vector>

namespace dimer_dg {

/// Quadrature rule on the reference element (-1, 1).
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }
};

/// n-point Gauss-Legendre rule, exact for polynomials of degree 2n - 1.
/// Nodes are returned in increasing order.
QuadratureRule gauss_legendre(std::size_t n_nodes);

/// Node count used for nonlinear volume terms, forcing, and error norms.
inline constexpr std::size_t kVolumeQuadratureNodes = 17;

}  // namespace dimer_dg
