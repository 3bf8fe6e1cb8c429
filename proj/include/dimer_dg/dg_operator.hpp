#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "dimer_dg/basis.hpp"
#include "dimer_dg/dg_state.hpp"
#include "dimer_dg/flux.hpp"
#include "dimer_dg/model.hpp"

namespace dimer_dg {

/// Semi-discrete right-hand side of the DG scheme for the characteristic
/// system. With the orthonormal basis the element mass matrix is
/// (h_j / 2) I, so the rate of mode m on element j is
///
///   dw1_m/dt = (2/h_j) [ -sum_n S(n,m) w1_n + w1_hat phi_m(1)|_{j+1/2} - w1_hat phi_m(-1)|_{j-1/2} ]
///              + sum_k w_k (-N w2 + f1)(r_k) phi_m(r_k)
///   dw2_m/dt = (2/h_j) [  sum_n S(n,m) w2_n + w2_tilde phi_m(-1)|_{j-1/2} - w2_tilde phi_m(1)|_{j+1/2} ]
///              + sum_k w_k ( N w1 + f2)(r_k) phi_m(r_k)
///
/// where S(n,m) = int phi_n phi_m' dr and the sums over k use the 17-node
/// Gauss rule.
class DGOperator {
public:
    DGOperator(ProblemSpec problem, FluxParams flux, std::shared_ptr<const Mesh1D> mesh, std::size_t q);

    const ProblemSpec& problem() const noexcept { return problem_; }
    const FluxParams& flux() const noexcept { return flux_; }
    const ModalBasis& basis() const noexcept { return basis_; }
    const std::shared_ptr<const Mesh1D>& mesh_ptr() const noexcept { return mesh_; }
    std::size_t degree() const noexcept { return basis_.degree(); }

    /// Writes the rate into `rate` (resized/relabelled to match `state`).
    void apply(const DGState& state, double t, DGState& rate) const;
    DGState operator()(const DGState& state, double t) const;

    /// Closed-form dE^h/dt from traces alone (forcing ignored):
    ///   1/2 sum_interfaces ( -(1-a1)[w1]^2 - (1-a2)[w2]^2 + (b1-b2)[w1][w2] )
    /// plus, for inflow boundaries,
    ///   -1/2 (w1^+^2 + w2^+^2)|_{x_a} - 1/2 (w1^-^2 + w2^-^2)|_{x_b} + g2 w2^+|_{x_a} + g1 w1^-|_{x_b}.
    double energy_rate_formula(const DGState& state) const;

    /// Element traces (value at r = -1 and r = +1) of variable var.
    void traces(const DGState& state, int var, std::vector<double>& left, std::vector<double>& right) const;

private:
    struct ElementKernelArgs {
        const DGState& state;
        DGState& rate;
        double t;
        const double* w1_hat;
        const double* w2_tilde;
    };
    template <std::size_t NM, typename Coupling>
    void element_kernel(const ElementKernelArgs& a, const Coupling& nl) const;
    template <typename Coupling>
    void dispatch_kernel(const ElementKernelArgs& args, const Coupling& nl) const;
    void check_layout(const DGState& state) const;

    ProblemSpec problem_;
    FluxParams flux_;
    std::shared_ptr<const Mesh1D> mesh_;
    ModalBasis basis_;
    // [m][k] = w_k phi_m(r_k) and [m][n] = S(n, m).
    std::vector<double> weighted_values_;
    std::vector<double> stiffness_t_;
};

DGState assemble_rhs(const DGState& state, double t, const ProblemSpec& problem, const FluxParams& flux);

double energy_rate_formula(const DGState& state, const FluxParams& flux, const ProblemSpec& problem);

/// Discrete L2 pairing sum_j (h_j/2) sum_{var,n} a * b. With b the rate of
/// a, this equals dE^h/dt.
double energy_pairing(const DGState& a, const DGState& b);

}  // namespace dimer_dg
