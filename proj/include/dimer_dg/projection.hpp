#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "dimer_dg/basis.hpp"
#include "dimer_dg/mesh.hpp"

namespace dimer_dg {

using ScalarFunction = std::function<double(double)>;

/// One scalar field in the broken polynomial space: per element, the
/// coefficients of the orthonormal Legendre expansion in r.
class ModalField {
public:
    ModalField(std::shared_ptr<const Mesh1D> mesh, std::size_t q);

    const Mesh1D& mesh() const noexcept { return *mesh_; }
    const std::shared_ptr<const Mesh1D>& mesh_ptr() const noexcept { return mesh_; }
    std::size_t degree() const noexcept { return q_; }
    std::size_t n_modes() const noexcept { return q_ + 1; }

    std::span<double> element(std::size_t j) { return {coeffs_.data() + j * n_modes(), n_modes()}; }
    std::span<const double> element(std::size_t j) const { return {coeffs_.data() + j * n_modes(), n_modes()}; }
    std::span<double> coefficients() noexcept { return coeffs_; }
    std::span<const double> coefficients() const noexcept { return coeffs_; }

    double evaluate_reference(std::size_t j, double r) const;
    double evaluate(double x) const;

private:
    std::shared_ptr<const Mesh1D> mesh_;
    std::size_t q_;
    std::vector<double> coeffs_;
};

enum class RadauSide { plus, minus };

/// Gauss-Radau projection P_h^+ (side = plus) or P_h^- (side = minus):
/// moments against P^{q-1} are preserved, and the value at the left
/// (P_h^+) or right (P_h^-) element endpoint is matched exactly.
ModalField gauss_radau_project(const ScalarFunction& f, std::shared_ptr<const Mesh1D> mesh, std::size_t q,
                               RadauSide side);

/// Element-wise L2 projection using the 17-node volume rule.
ModalField l2_project(const ScalarFunction& f, std::shared_ptr<const Mesh1D> mesh, std::size_t q);

/// L2 projection from values sampled at the 17 volume quadrature nodes of
/// every element, laid out element by element.
ModalField l2_project_nodal(std::span<const double> nodal_values, std::shared_ptr<const Mesh1D> mesh,
                            std::size_t q);

/// Physical coordinates of the 17 volume quadrature nodes, element by element.
std::vector<double> volume_quadrature_points(const Mesh1D& mesh);

}  // namespace dimer_dg
