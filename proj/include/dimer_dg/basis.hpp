#pragma once

#include <cstddef>
#include <vector>

#include "dimer_dg/quadrature.hpp"

namespace dimer_dg {

/// Values (phi_0(r), ..., phi_q(r)) of the orthonormal Legendre basis
/// phi_n = sqrt((2n + 1) / 2) P_n on (-1, 1).
std::vector<double> eval_basis(std::size_t q, double r);

/// Derivatives d phi_n / dr, n = 0..q.
std::vector<double> eval_basis_derivative(std::size_t q, double r);

/// Orthonormal modal basis of degree q with its tables on a quadrature rule.
///
/// Tables are row-major by node: value(k, n) = phi_n(r_k).
class ModalBasis {
public:
    ModalBasis(std::size_t q, QuadratureRule rule);

    std::size_t degree() const noexcept { return q_; }
    std::size_t n_modes() const noexcept { return q_ + 1; }
    const QuadratureRule& rule() const noexcept { return rule_; }
    std::size_t n_nodes() const noexcept { return rule_.size(); }

    double value(std::size_t k, std::size_t n) const { return values_[k * n_modes() + n]; }
    double derivative(std::size_t k, std::size_t n) const { return derivs_[k * n_modes() + n]; }
    const double* value_row(std::size_t k) const { return values_.data() + k * n_modes(); }

    /// phi_n(-1) and phi_n(+1).
    double left_value(std::size_t n) const { return left_[n]; }
    double right_value(std::size_t n) const { return right_[n]; }

    /// Exact reference stiffness S(n, m) = int_{-1}^{1} phi_n phi_m' dr.
    double stiffness(std::size_t n, std::size_t m) const { return stiffness_[n * n_modes() + m]; }

private:
    std::size_t q_;
    QuadratureRule rule_;
    std::vector<double> values_;
    std::vector<double> derivs_;
    std::vector<double> left_;
    std::vector<double> right_;
    std::vector<double> stiffness_;
};

}  // namespace dimer_dg
