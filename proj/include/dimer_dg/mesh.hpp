#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dimer_dg {

/// Partition of [x_a, x_b] into elements I_j = (x_{j-1/2}, x_{j+1/2}).
///
/// Interfaces are shared by the two neighbouring elements; traces there are
/// always taken from a named side (minus = left element, plus = right
/// element) and never resolved by the mesh itself.
class Mesh1D {
public:
    /// Builds a mesh from an explicit, strictly increasing vertex list.
    explicit Mesh1D(std::vector<double> vertices);

    /// Uniform partition; every width is stored as exactly (x_b - x_a) / n.
    static Mesh1D uniform(double x_a, double x_b, std::size_t n_elements);

    double x_a() const noexcept { return vertices_.front(); }
    double x_b() const noexcept { return vertices_.back(); }
    std::size_t n_elements() const noexcept { return widths_.size(); }

    std::span<const double> vertices() const noexcept { return vertices_; }
    std::span<const double> widths() const noexcept { return widths_; }

    double left(std::size_t j) const { return vertices_[j]; }
    double right(std::size_t j) const { return vertices_[j + 1]; }
    double width(std::size_t j) const { return widths_[j]; }
    double center(std::size_t j) const { return 0.5 * (vertices_[j] + vertices_[j + 1]); }

    double h_max() const noexcept { return h_max_; }
    double h_min() const noexcept { return h_min_; }
    /// h_max / h_min; 1 for uniform meshes.
    double regularity_bound() const noexcept { return h_max_ / h_min_; }

    /// Maps x in element j to r in [-1, 1]. Throws if x lies outside the element.
    double to_reference(std::size_t j, double x) const;
    double from_reference(std::size_t j, double r) const;

    /// Index of the element containing x. Points on an interior interface
    /// resolve to the element on the right; x_b resolves to the last element.
    std::size_t locate(double x) const;

private:
    std::vector<double> vertices_;
    std::vector<double> widths_;
    double h_max_ = 0.0;
    double h_min_ = 0.0;
};

Mesh1D build_uniform_mesh(double x_a, double x_b, std::size_t n_elements);

}  // namespace dimer_dg
