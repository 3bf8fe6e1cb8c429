#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dimer_dg/dg_state.hpp"
#include "dimer_dg/model.hpp"

namespace dimer_dg {

/// E^h = 1/2 sum_j int_{I_j} (w1^h)^2 + (w2^h)^2 dx
///     = 1/2 sum_j (h_j/2) sum_n (c1_{j,n}^2 + c2_{j,n}^2).
double discrete_energy(const DGState& state);

/// 1/2 int_a^b (w1^h)^2 + (w2^h)^2 dx, integrating the overlap with each
/// element by a 17-node Gauss rule on the clipped sub-interval.
double moving_box_energy(const DGState& state, double a, double b);

struct L2Errors {
    double w1 = 0.0;
    double w2 = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
};

/// L2 errors against an exact (w1, w2); the b errors compare both fields
/// after the characteristic transform.
L2Errors l2_error(const DGState& state, const PairFunction& exact, double t);

/// order_i = log(e_{i-1}/e_i) / log(n_i/n_{i-1}); the first entry, and any
/// entry involving a non-positive error, is empty.
std::vector<std::optional<double>> convergence_order(std::span<const double> errors,
                                                     std::span<const std::size_t> meshes);

struct ConvergenceRow {
    std::size_t q = 0;
    std::size_t n_elements = 0;
    L2Errors errors;
    std::array<std::optional<double>, 4> orders;  // w1, w2, b1, b2
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;

    /// Recomputes orders within each run of consecutive rows sharing q.
    void compute_orders();
    void write_csv(const std::string& path) const;
    std::string to_text() const;
};

/// Smallest x at which |(w1^h, w2^h)| crosses `level` from below when
/// scanning left to right, located by bisection on the reconstruction.
std::optional<double> modulus_crossing(const DGState& state, double level = 0.5, std::size_t samples_per_element = 16);

}  // namespace dimer_dg
