#include "dimer_dg/dg_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dimer_dg {

DGState::DGState(std::shared_ptr<const Mesh1D> mesh, std::size_t q, double time)
    : mesh_(std::move(mesh)), q_(q), time_(time), coeffs_(2 * mesh_->n_elements() * (q + 1), 0.0)
{
}

DGState::DGState(const ModalField& w1, const ModalField& w2, double time)
    : DGState(w1.mesh_ptr(), w1.degree(), time)
{
    if (w1.mesh_ptr() != w2.mesh_ptr() || w1.degree() != w2.degree()) {
        throw std::invalid_argument("DGState: components must share mesh and degree");
    }
    const auto a = w1.coefficients();
    const auto b = w2.coefficients();
    std::copy(a.begin(), a.end(), coeffs_.begin());
    std::copy(b.begin(), b.end(), coeffs_.begin() + static_cast<std::ptrdiff_t>(a.size()));
}

ModalField DGState::component(int var) const
{
    ModalField f(mesh_, q_);
    auto dst = f.coefficients();
    const std::size_t n = dst.size();
    std::copy_n(coeffs_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(var) * n), n, dst.begin());
    return f;
}

double DGState::evaluate_reference(int var, std::size_t j, double r) const
{
    const auto phi = eval_basis(q_, r);
    const auto c = element(var, j);
    double s = 0.0;
    for (std::size_t n = 0; n < phi.size(); ++n) {
        s += c[n] * phi[n];
    }
    return s;
}

double DGState::evaluate(int var, double x) const
{
    const std::size_t j = mesh_->locate(x);
    return evaluate_reference(var, j, mesh_->to_reference(j, x));
}

std::size_t DGState::first_nonfinite_element() const noexcept
{
    const std::size_t ne = mesh_->n_elements();
    for (std::size_t j = 0; j < ne; ++j) {
        for (int var = 0; var < 2; ++var) {
            for (double c : element(var, j)) {
                if (!std::isfinite(c)) {
                    return j;
                }
            }
        }
    }
    return ne;
}

}  // namespace dimer_dg
