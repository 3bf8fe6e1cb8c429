#include "dimer_dg/time_integration.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dimer_dg {

namespace {

std::string nonfinite_message(std::size_t element, double time, int stage)
{
    std::ostringstream os;
    os << "non-finite value in RK4 stage " << stage << " at t = " << time << ", first offending element " << element;
    return os.str();
}

void check_finite(const DGState& s, double t, int stage)
{
    const std::size_t bad = s.first_nonfinite_element();
    if (bad != s.n_elements()) {
        throw NonFiniteStateError(bad, t, stage);
    }
}

// y = x + a * k
void axpy(std::span<double> y, std::span<const double> x, double a, std::span<const double> k)
{
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] = x[i] + a * k[i];
    }
}

}  // namespace

TimeStepPlan TimeStepPlan::cfl_scaled(double final_time, double h, double cfl)
{
    if (!(cfl > 0.0) || !(h > 0.0)) {
        throw std::invalid_argument("TimeStepPlan: CFL and h must be positive");
    }
    TimeStepPlan p = fixed(final_time, cfl * h);
    p.rule = StepRule::cfl_scaled;
    p.cfl = cfl;
    return p;
}

TimeStepPlan TimeStepPlan::fixed(double final_time, double dt)
{
    if (!(dt > 0.0)) {
        throw std::invalid_argument("TimeStepPlan: dt must be positive");
    }
    if (!(final_time >= 0.0)) {
        throw std::invalid_argument("TimeStepPlan: final time must be non-negative");
    }
    TimeStepPlan p;
    p.dt = dt;
    p.final_time = final_time;
    p.rule = StepRule::fixed_dt;
    const double ratio = final_time / dt;
    // Absorb round-off so that T = n dt exactly does not spawn a sliver step.
    p.n_steps = static_cast<std::size_t>(std::ceil(ratio * (1.0 - 1e-12)));
    return p;
}

double TimeStepPlan::step_size(std::size_t step) const
{
    if (step + 1 < n_steps) {
        return dt;
    }
    return final_time - dt * static_cast<double>(n_steps - 1);
}

double TimeStepPlan::time_at(std::size_t step) const
{
    if (step >= n_steps) {
        return final_time;
    }
    return dt * static_cast<double>(step);
}

NonFiniteStateError::NonFiniteStateError(std::size_t element, double time, int stage)
    : std::runtime_error(nonfinite_message(element, time, stage)), element_(element), time_(time)
{
}

Rk4Workspace::Rk4Workspace(const DGState& like)
    : k1_(like.mesh_ptr(), like.degree()),
      k2_(like.mesh_ptr(), like.degree()),
      k3_(like.mesh_ptr(), like.degree()),
      k4_(like.mesh_ptr(), like.degree()),
      stage_(like.mesh_ptr(), like.degree())
{
}

void Rk4Workspace::step(DGState& state, double dt, const RateOperator& rhs)
{
    if (!(dt > 0.0)) {
        throw std::invalid_argument("rk4_step: dt must be positive");
    }
    const double t = state.time();
    const auto y = state.coefficients();

    rhs(state, t, k1_);
    check_finite(k1_, t, 1);

    axpy(stage_.coefficients(), y, 0.5 * dt, k1_.coefficients());
    stage_.set_time(t + 0.5 * dt);
    rhs(stage_, t + 0.5 * dt, k2_);
    check_finite(k2_, t, 2);

    axpy(stage_.coefficients(), y, 0.5 * dt, k2_.coefficients());
    rhs(stage_, t + 0.5 * dt, k3_);
    check_finite(k3_, t, 3);

    axpy(stage_.coefficients(), y, dt, k3_.coefficients());
    stage_.set_time(t + dt);
    rhs(stage_, t + dt, k4_);
    check_finite(k4_, t, 4);

    const auto a = k1_.coefficients();
    const auto b = k2_.coefficients();
    const auto c = k3_.coefficients();
    const auto d = k4_.coefficients();
    const auto out = state.coefficients();
    const double w = dt / 6.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += w * (a[i] + 2.0 * (b[i] + c[i]) + d[i]);
    }
    state.set_time(t + dt);
}

DGState rk4_step(const DGState& state, double t, double dt, const RateOperator& rhs)
{
    DGState next = state;
    next.set_time(t);
    Rk4Workspace ws(state);
    ws.step(next, dt, rhs);
    return next;
}

DGState evolve(DGState state, const TimeStepPlan& plan, const RateOperator& rhs, const std::vector<Observer>& observers)
{
    const auto notify = [&](std::size_t step, bool last) {
        for (const auto& obs : observers) {
            const std::size_t every = std::max<std::size_t>(obs.every_steps, 1);
            if (step % every == 0 || last) {
                obs.callback(step, state);
            }
        }
    };

    const double t0 = state.time();
    notify(0, plan.n_steps == 0);
    Rk4Workspace ws(state);
    for (std::size_t s = 0; s < plan.n_steps; ++s) {
        ws.step(state, plan.step_size(s), rhs);
        if (s + 1 == plan.n_steps) {
            state.set_time(t0 + plan.final_time);
        }
        notify(s + 1, s + 1 == plan.n_steps);
    }
    return state;
}

DGState evolve(DGState state, const TimeStepPlan& plan, const ProblemSpec& problem, const FluxParams& flux,
               const std::vector<Observer>& observers)
{
    const DGOperator op(problem, flux, state.mesh_ptr(), state.degree());
    return evolve(std::move(state), plan,
                  [&op](const DGState& s, double t, DGState& rate) { op.apply(s, t, rate); }, observers);
}

std::size_t steps_per_interval(const TimeStepPlan& plan, double interval)
{
    if (!(interval > 0.0)) {
        throw std::invalid_argument("steps_per_interval: interval must be positive");
    }
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(interval / plan.dt)));
}

}  // namespace dimer_dg
