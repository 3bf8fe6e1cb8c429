#include "dimer_dg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dimer_dg {

Mesh1D::Mesh1D(std::vector<double> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.size() < 2) {
        throw std::invalid_argument("Mesh1D: need at least two vertices");
    }
    widths_.resize(vertices_.size() - 1);
    for (std::size_t j = 0; j < widths_.size(); ++j) {
        const double h = vertices_[j + 1] - vertices_[j];
        if (!(h > 0.0) || !std::isfinite(h)) {
            throw std::invalid_argument("Mesh1D: vertices must be finite and strictly increasing (element " +
                                        std::to_string(j) + ")");
        }
        widths_[j] = h;
    }
    h_max_ = *std::max_element(widths_.begin(), widths_.end());
    h_min_ = *std::min_element(widths_.begin(), widths_.end());
}

double Mesh1D::to_reference(std::size_t j, double x) const
{
    if (j >= n_elements()) {
        throw std::out_of_range("Mesh1D::to_reference: element index out of range");
    }
    const double h = widths_[j];
    // Allow a few ulps of slack so that from_reference round trips are accepted.
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(left(j)), std::abs(right(j)));
    if (x < left(j) - slack || x > right(j) + slack) {
        throw std::domain_error("Mesh1D::to_reference: x = " + std::to_string(x) + " lies outside element " +
                                std::to_string(j));
    }
    return std::clamp(2.0 / h * (x - center(j)), -1.0, 1.0);
}

double Mesh1D::from_reference(std::size_t j, double r) const
{
    return center(j) + 0.5 * widths_[j] * r;
}

std::size_t Mesh1D::locate(double x) const
{
    if (x < x_a() || x > x_b()) {
        throw std::domain_error("Mesh1D::locate: x = " + std::to_string(x) + " outside [x_a, x_b]");
    }
    auto it = std::upper_bound(vertices_.begin(), vertices_.end(), x);
    const auto idx = static_cast<std::size_t>(std::distance(vertices_.begin(), it));
    return std::min(idx == 0 ? 0 : idx - 1, n_elements() - 1);
}

Mesh1D Mesh1D::uniform(double x_a, double x_b, std::size_t n_elements)
{
    if (!(x_b > x_a)) {
        throw std::invalid_argument("build_uniform_mesh: invalid interval, need x_b > x_a");
    }
    if (n_elements == 0) {
        throw std::invalid_argument("build_uniform_mesh: need at least one element");
    }
    const double h = (x_b - x_a) / static_cast<double>(n_elements);
    std::vector<double> v(n_elements + 1);
    for (std::size_t i = 0; i <= n_elements; ++i) {
        v[i] = x_a + static_cast<double>(i) * h;
    }
    v.back() = x_b;
    Mesh1D mesh(std::move(v));
    std::fill(mesh.widths_.begin(), mesh.widths_.end(), h);
    mesh.h_max_ = h;
    mesh.h_min_ = h;
    return mesh;
}

Mesh1D build_uniform_mesh(double x_a, double x_b, std::size_t n_elements)
{
    return Mesh1D::uniform(x_a, x_b, n_elements);
}

}  // namespace dimer_dg
