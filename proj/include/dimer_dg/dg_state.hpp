#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "dimer_dg/mesh.hpp"
#include "dimer_dg/projection.hpp"

namespace dimer_dg {

/// Modal coefficients of (w1^h, w2^h): [variable][element][mode], flat.
class DGState {
public:
    DGState(std::shared_ptr<const Mesh1D> mesh, std::size_t q, double time = 0.0);
    DGState(const ModalField& w1, const ModalField& w2, double time = 0.0);

    const Mesh1D& mesh() const noexcept { return *mesh_; }
    const std::shared_ptr<const Mesh1D>& mesh_ptr() const noexcept { return mesh_; }
    std::size_t degree() const noexcept { return q_; }
    std::size_t n_modes() const noexcept { return q_ + 1; }
    std::size_t n_elements() const noexcept { return mesh_->n_elements(); }

    double time() const noexcept { return time_; }
    void set_time(double t) noexcept { time_ = t; }

    /// var is 0 for w1 and 1 for w2.
    std::span<double> element(int var, std::size_t j)
    {
        return {coeffs_.data() + offset(var, j), n_modes()};
    }
    std::span<const double> element(int var, std::size_t j) const
    {
        return {coeffs_.data() + offset(var, j), n_modes()};
    }
    std::span<double> coefficients() noexcept { return coeffs_; }
    std::span<const double> coefficients() const noexcept { return coeffs_; }

    ModalField component(int var) const;

    double evaluate_reference(int var, std::size_t j, double r) const;
    double evaluate(int var, double x) const;

    /// Same mesh object and degree.
    bool same_layout(const DGState& other) const noexcept
    {
        return mesh_ == other.mesh_ && q_ == other.q_;
    }

    /// Index of the first element holding a non-finite coefficient, or
    /// n_elements() when every entry is finite.
    std::size_t first_nonfinite_element() const noexcept;

private:
    std::size_t offset(int var, std::size_t j) const noexcept
    {
        return (static_cast<std::size_t>(var) * mesh_->n_elements() + j) * n_modes();
    }

    std::shared_ptr<const Mesh1D> mesh_;
    std::size_t q_;
    double time_;
    std::vector<double> coeffs_;
};

}  // namespace dimer_dg
