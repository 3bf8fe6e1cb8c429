#include "dimer_dg/projection.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace dimer_dg {

ModalField::ModalField(std::shared_ptr<const Mesh1D> mesh, std::size_t q)
    : mesh_(std::move(mesh)), q_(q), coeffs_(mesh_->n_elements() * (q + 1), 0.0)
{
}

double ModalField::evaluate_reference(std::size_t j, double r) const
{
    const auto phi = eval_basis(q_, r);
    const auto c = element(j);
    double s = 0.0;
    for (std::size_t n = 0; n < phi.size(); ++n) {
        s += c[n] * phi[n];
    }
    return s;
}

double ModalField::evaluate(double x) const
{
    const std::size_t j = mesh_->locate(x);
    return evaluate_reference(j, mesh_->to_reference(j, x));
}

ModalField gauss_radau_project(const ScalarFunction& f, std::shared_ptr<const Mesh1D> mesh, std::size_t q,
                               RadauSide side)
{
    const ModalBasis basis(q, gauss_legendre(kVolumeQuadratureNodes));
    ModalField out(mesh, q);
    const double r_end = side == RadauSide::plus ? -1.0 : 1.0;
    const auto phi_end = eval_basis(q, r_end);
    // The local system is lower triangular in the orthonormal basis: moment rows
    // fix c_0..c_{q-1} and the endpoint row fixes c_q.
    assert(std::abs(phi_end[q]) > 0.0);

    for (std::size_t j = 0; j < mesh->n_elements(); ++j) {
        auto c = out.element(j);
        for (std::size_t k = 0; k < basis.n_nodes(); ++k) {
            const double fx = f(mesh->from_reference(j, basis.rule().nodes[k]));
            const double w = basis.rule().weights[k];
            for (std::size_t n = 0; n < q; ++n) {
                c[n] += w * fx * basis.value(k, n);
            }
        }
        const double x_end = side == RadauSide::plus ? mesh->left(j) : mesh->right(j);
        double partial = 0.0;
        for (std::size_t n = 0; n < q; ++n) {
            partial += c[n] * phi_end[n];
        }
        c[q] = (f(x_end) - partial) / phi_end[q];
    }
    return out;
}

ModalField l2_project(const ScalarFunction& f, std::shared_ptr<const Mesh1D> mesh, std::size_t q)
{
    const auto pts = volume_quadrature_points(*mesh);
    std::vector<double> values(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        values[i] = f(pts[i]);
    }
    return l2_project_nodal(values, std::move(mesh), q);
}

ModalField l2_project_nodal(std::span<const double> nodal_values, std::shared_ptr<const Mesh1D> mesh,
                            std::size_t q)
{
    const ModalBasis basis(q, gauss_legendre(kVolumeQuadratureNodes));
    const std::size_t nk = basis.n_nodes();
    if (nodal_values.size() != mesh->n_elements() * nk) {
        throw std::invalid_argument("l2_project_nodal: expected one value per volume quadrature node");
    }
    ModalField out(mesh, q);
    for (std::size_t j = 0; j < mesh->n_elements(); ++j) {
        auto c = out.element(j);
        for (std::size_t k = 0; k < nk; ++k) {
            const double wf = basis.rule().weights[k] * nodal_values[j * nk + k];
            for (std::size_t n = 0; n <= q; ++n) {
                c[n] += wf * basis.value(k, n);
            }
        }
    }
    return out;
}

std::vector<double> volume_quadrature_points(const Mesh1D& mesh)
{
    const QuadratureRule rule = gauss_legendre(kVolumeQuadratureNodes);
    std::vector<double> pts;
    pts.reserve(mesh.n_elements() * rule.size());
    for (std::size_t j = 0; j < mesh.n_elements(); ++j) {
        for (double r : rule.nodes) {
            pts.push_back(mesh.from_reference(j, r));
        }
    }
    return pts;
}

}  // namespace dimer_dg
