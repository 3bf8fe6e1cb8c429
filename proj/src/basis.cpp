#include "dimer_dg/basis.hpp"

#include <cassert>
#include <cmath>

namespace dimer_dg {

namespace {

void legendre_table(std::size_t q, double r, std::vector<double>& p, std::vector<double>& dp)
{
    p.assign(q + 1, 0.0);
    dp.assign(q + 1, 0.0);
    p[0] = 1.0;
    if (q >= 1) {
        p[1] = r;
        dp[1] = 1.0;
    }
    for (std::size_t n = 1; n < q; ++n) {
        const double nn = static_cast<double>(n);
        p[n + 1] = ((2.0 * nn + 1.0) * r * p[n] - nn * p[n - 1]) / (nn + 1.0);
        dp[n + 1] = dp[n - 1] + (2.0 * nn + 1.0) * p[n];
    }
}

double normalization(std::size_t n)
{
    return std::sqrt((2.0 * static_cast<double>(n) + 1.0) / 2.0);
}

}  // namespace

std::vector<double> eval_basis(std::size_t q, double r)
{
    assert(r >= -1.0 - 1e-12 && r <= 1.0 + 1e-12);
    std::vector<double> p;
    std::vector<double> dp;
    legendre_table(q, r, p, dp);
    for (std::size_t n = 0; n <= q; ++n) {
        p[n] *= normalization(n);
    }
    return p;
}

std::vector<double> eval_basis_derivative(std::size_t q, double r)
{
    std::vector<double> p;
    std::vector<double> dp;
    legendre_table(q, r, p, dp);
    for (std::size_t n = 0; n <= q; ++n) {
        dp[n] *= normalization(n);
    }
    return dp;
}

ModalBasis::ModalBasis(std::size_t q, QuadratureRule rule) : q_(q), rule_(std::move(rule))
{
    const std::size_t m = n_modes();
    values_.resize(rule_.size() * m);
    derivs_.resize(rule_.size() * m);
    for (std::size_t k = 0; k < rule_.size(); ++k) {
        const auto v = eval_basis(q_, rule_.nodes[k]);
        const auto d = eval_basis_derivative(q_, rule_.nodes[k]);
        for (std::size_t n = 0; n < m; ++n) {
            values_[k * m + n] = v[n];
            derivs_[k * m + n] = d[n];
        }
    }
    left_ = eval_basis(q_, -1.0);
    right_ = eval_basis(q_, 1.0);

    // phi_n phi_m' has degree 2q - 1; any Gauss rule with q + 1 nodes is exact.
    const QuadratureRule exact = gauss_legendre(q_ + 1);
    stiffness_.assign(m * m, 0.0);
    for (std::size_t k = 0; k < exact.size(); ++k) {
        const auto v = eval_basis(q_, exact.nodes[k]);
        const auto d = eval_basis_derivative(q_, exact.nodes[k]);
        for (std::size_t n = 0; n < m; ++n) {
            for (std::size_t l = 0; l < m; ++l) {
                stiffness_[n * m + l] += exact.weights[k] * v[n] * d[l];
            }
        }
    }
}

}  // namespace dimer_dg
