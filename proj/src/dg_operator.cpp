#include "dimer_dg/dg_operator.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace dimer_dg {

DGOperator::DGOperator(ProblemSpec problem, FluxParams flux, std::shared_ptr<const Mesh1D> mesh, std::size_t q)
    : problem_(std::move(problem)),
      flux_(flux),
      mesh_(std::move(mesh)),
      basis_(q, gauss_legendre(kVolumeQuadratureNodes))
{
    const double tol = 1e-12 * std::max(1.0, std::abs(problem_.x_b - problem_.x_a));
    if (std::abs(mesh_->x_a() - problem_.x_a) > tol || std::abs(mesh_->x_b() - problem_.x_b) > tol) {
        throw std::invalid_argument("DGOperator: mesh does not cover the problem domain");
    }
    const std::size_t nm = basis_.n_modes();
    const std::size_t nk = basis_.n_nodes();
    weighted_values_.resize(nm * nk);
    stiffness_t_.resize(nm * nm);
    for (std::size_t m = 0; m < nm; ++m) {
        for (std::size_t k = 0; k < nk; ++k) {
            weighted_values_[m * nk + k] = basis_.rule().weights[k] * basis_.value(k, m);
        }
        for (std::size_t n = 0; n < nm; ++n) {
            stiffness_t_[m * nm + n] = basis_.stiffness(n, m);
        }
    }
}

void DGOperator::check_layout(const DGState& state) const
{
    if (state.degree() != degree()) {
        throw std::invalid_argument("DGOperator: state degree does not match operator degree");
    }
    if (state.mesh_ptr() != mesh_ &&
        (state.n_elements() != mesh_->n_elements() || state.mesh().x_a() != mesh_->x_a() ||
         state.mesh().x_b() != mesh_->x_b())) {
        throw std::invalid_argument("DGOperator: state mesh does not match operator mesh");
    }
}

void DGOperator::traces(const DGState& state, int var, std::vector<double>& left, std::vector<double>& right) const
{
    const std::size_t ne = state.n_elements();
    const std::size_t nm = basis_.n_modes();
    left.resize(ne);
    right.resize(ne);
    for (std::size_t j = 0; j < ne; ++j) {
        const auto c = state.element(var, j);
        double l = 0.0;
        double r = 0.0;
        for (std::size_t n = 0; n < nm; ++n) {
            l += c[n] * basis_.left_value(n);
            r += c[n] * basis_.right_value(n);
        }
        left[j] = l;
        right[j] = r;
    }
}

template <std::size_t NM, typename Coupling>
void DGOperator::element_kernel(const ElementKernelArgs& a, const Coupling& nl) const
{
    constexpr std::size_t nk = kVolumeQuadratureNodes;
    const std::size_t nm = NM == 0 ? basis_.n_modes() : NM;
    const Mesh1D& mesh = a.state.mesh();
    const std::size_t ne = mesh.n_elements();
    const auto& nodes = basis_.rule().nodes;
    const bool forced = problem_.forcing.has_value();
    const double* values = basis_.value_row(0);
    std::array<double, nk> src1{};
    std::array<double, nk> src2{};

    for (std::size_t j = 0; j < ne; ++j) {
        const double* c1 = a.state.element(0, j).data();
        const double* c2 = a.state.element(1, j).data();
        double* d1 = a.rate.element(0, j).data();
        double* d2 = a.rate.element(1, j).data();

        // Nodal sources -N w2 + f1 and N w1 + f2.
        for (std::size_t k = 0; k < nk; ++k) {
            const double* phi = values + k * nm;
            double u = 0.0;
            double v = 0.0;
            for (std::size_t n = 0; n < nm; ++n) {
                u += c1[n] * phi[n];
                v += c2[n] * phi[n];
            }
            const double coupling = nl(u, v);
            src1[k] = -coupling * v;
            src2[k] = coupling * u;
        }
        if (forced) {
            for (std::size_t k = 0; k < nk; ++k) {
                const auto f = (*problem_.forcing)(mesh.from_reference(j, nodes[k]), a.t);
                src1[k] += f[0];
                src2[k] += f[1];
            }
        }

        const double scale = 2.0 / mesh.width(j);
        for (std::size_t m = 0; m < nm; ++m) {
            const double* st = stiffness_t_.data() + m * nm;
            double vol1 = 0.0;
            double vol2 = 0.0;
            for (std::size_t n = 0; n < nm; ++n) {
                vol1 += st[n] * c1[n];
                vol2 += st[n] * c2[n];
            }
            const double* wp = weighted_values_.data() + m * nk;
            double q1 = 0.0;
            double q2 = 0.0;
            for (std::size_t k = 0; k < nk; ++k) {
                q1 += src1[k] * wp[k];
                q2 += src2[k] * wp[k];
            }
            const double pr = basis_.right_value(m);
            const double pl = basis_.left_value(m);
            d1[m] = scale * (-vol1 + a.w1_hat[j + 1] * pr - a.w1_hat[j] * pl) + q1;
            d2[m] = scale * (vol2 + a.w2_tilde[j] * pl - a.w2_tilde[j + 1] * pr) + q2;
        }
    }
}

template <typename Coupling>
void DGOperator::dispatch_kernel(const ElementKernelArgs& args, const Coupling& nl) const
{
    switch (basis_.n_modes()) {
    case 1: element_kernel<1>(args, nl); break;
    case 2: element_kernel<2>(args, nl); break;
    case 3: element_kernel<3>(args, nl); break;
    case 4: element_kernel<4>(args, nl); break;
    case 5: element_kernel<5>(args, nl); break;
    case 6: element_kernel<6>(args, nl); break;
    default: element_kernel<0>(args, nl); break;
    }
}

void DGOperator::apply(const DGState& state, double t, DGState& rate) const
{
    check_layout(state);
    if (!rate.same_layout(state)) {
        rate = DGState(state.mesh_ptr(), state.degree(), t);
    }
    rate.set_time(t);

    const Mesh1D& mesh = state.mesh();
    const std::size_t ne = mesh.n_elements();
    const bool periodic = problem_.boundary.kind == BoundaryKind::periodic;

    std::vector<double> l1, r1, l2, r2;
    traces(state, 0, l1, r1);
    traces(state, 1, l2, r2);

    // Interface i sits at x_{i+1/2 - 1}: interface 0 is x_a, interface ne is x_b.
    std::vector<double> w1_hat(ne + 1);
    std::vector<double> w2_tilde(ne + 1);
    for (std::size_t i = 1; i < ne; ++i) {
        const InterfaceFlux f = interface_flux(r1[i - 1], l1[i], r2[i - 1], l2[i], flux_);
        w1_hat[i] = f.w1_hat;
        w2_tilde[i] = f.w2_tilde;
    }
    if (periodic) {
        const InterfaceFlux f = interface_flux(r1[ne - 1], l1[0], r2[ne - 1], l2[0], flux_);
        w1_hat[0] = w1_hat[ne] = f.w1_hat;
        w2_tilde[0] = w2_tilde[ne] = f.w2_tilde;
    } else {
        w1_hat[0] = l1[0];
        w2_tilde[0] = problem_.boundary.w2_at_left;
        w1_hat[ne] = problem_.boundary.w1_at_right;
        w2_tilde[ne] = r2[ne - 1];
    }

    ElementKernelArgs args{state, rate, t, w1_hat.data(), w2_tilde.data()};
    const auto* fn = problem_.nonlinearity.evaluate.target<double (*)(double, double)>();
    if (fn != nullptr && *fn == &sech_nonlinearity) {
        dispatch_kernel(args, [](double u, double v) { return sech_nonlinearity(u, v); });
    } else {
        dispatch_kernel(args, problem_.nonlinearity);
    }}

DGState DGOperator::operator()(const DGState& state, double t) const
{
    DGState rate(state.mesh_ptr(), state.degree(), t);
    apply(state, t, rate);
    return rate;
}

double DGOperator::energy_rate_formula(const DGState& state) const
{
    check_layout(state);
    const std::size_t ne = state.n_elements();
    std::vector<double> l1, r1, l2, r2;
    traces(state, 0, l1, r1);
    traces(state, 1, l2, r2);

    const auto interface_term = [&](double m1, double p1, double m2, double p2) {
        const double j1 = m1 - p1;
        const double j2 = m2 - p2;
        return -(1.0 - flux_.alpha1) * j1 * j1 - (1.0 - flux_.alpha2) * j2 * j2 +
               (flux_.beta1 - flux_.beta2) * j1 * j2;
    };

    double sum = 0.0;
    for (std::size_t i = 1; i < ne; ++i) {
        sum += interface_term(r1[i - 1], l1[i], r2[i - 1], l2[i]);
    }
    if (problem_.boundary.kind == BoundaryKind::periodic) {
        sum += interface_term(r1[ne - 1], l1[0], r2[ne - 1], l2[0]);
        return 0.5 * sum;
    }
    const double g1 = problem_.boundary.w1_at_right;
    const double g2 = problem_.boundary.w2_at_left;
    const double boundary = -(l1[0] * l1[0] + l2[0] * l2[0]) - (r1[ne - 1] * r1[ne - 1] + r2[ne - 1] * r2[ne - 1]);
    return 0.5 * (sum + boundary) + g2 * l2[0] + g1 * r1[ne - 1];
}

DGState assemble_rhs(const DGState& state, double t, const ProblemSpec& problem, const FluxParams& flux)
{
    const DGOperator op(problem, flux, state.mesh_ptr(), state.degree());
    return op(state, t);
}

double energy_rate_formula(const DGState& state, const FluxParams& flux, const ProblemSpec& problem)
{
    const DGOperator op(problem, flux, state.mesh_ptr(), state.degree());
    return op.energy_rate_formula(state);
}

double energy_pairing(const DGState& a, const DGState& b)
{
    if (!a.same_layout(b)) {
        throw std::invalid_argument("energy_pairing: states have different layouts");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < a.n_elements(); ++j) {
        double s = 0.0;
        for (int var = 0; var < 2; ++var) {
            const auto x = a.element(var, j);
            const auto y = b.element(var, j);
            for (std::size_t n = 0; n < x.size(); ++n) {
                s += x[n] * y[n];
            }
        }
        total += 0.5 * a.mesh().width(j) * s;
    }
    return total;
}

}  // namespace dimer_dg
