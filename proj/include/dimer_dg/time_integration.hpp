#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimer_dg/dg_operator.hpp"
#include "dimer_dg/dg_state.hpp"

namespace dimer_dg {

/// Time step used by the convergence studies: dt = CFL * h.
inline constexpr double kConvergenceCfl = 3.75e-2 / std::numbers::pi;

enum class StepRule { cfl_scaled, fixed_dt };

/// Uniform steps of size dt, except the last one which is shortened so the
/// run lands exactly on final_time.
struct TimeStepPlan {
    double dt = 0.0;
    std::size_t n_steps = 0;
    double final_time = 0.0;
    StepRule rule = StepRule::fixed_dt;
    double cfl = 0.0;

    static TimeStepPlan cfl_scaled(double final_time, double h, double cfl = kConvergenceCfl);
    static TimeStepPlan fixed(double final_time, double dt);

    double step_size(std::size_t step) const;
    double time_at(std::size_t step) const;
};

/// Rate operator: writes d(state)/dt at time t into `rate`.
using RateOperator = std::function<void(const DGState& state, double t, DGState& rate)>;

/// Raised when a Runge-Kutta stage produces NaN or Inf.
class NonFiniteStateError : public std::runtime_error {
public:
    NonFiniteStateError(std::size_t element, double time, int stage);
    std::size_t element() const noexcept { return element_; }
    double time() const noexcept { return time_; }

private:
    std::size_t element_;
    double time_;
};

/// Scratch buffers for repeated RK4 steps on one state layout.
class Rk4Workspace {
public:
    explicit Rk4Workspace(const DGState& like);

    /// Advances state in place by dt.
    void step(DGState& state, double dt, const RateOperator& rhs);

private:
    DGState k1_, k2_, k3_, k4_, stage_;
};

/// Classical four-stage Runge-Kutta step; the returned state has time t + dt.
DGState rk4_step(const DGState& state, double t, double dt, const RateOperator& rhs);

struct Observer {
    /// Called at step 0, every `every_steps` steps, and after the last step.
    std::size_t every_steps = 1;
    std::function<void(std::size_t step, const DGState& state)> callback;
};

DGState evolve(DGState state, const TimeStepPlan& plan, const RateOperator& rhs,
               const std::vector<Observer>& observers = {});
DGState evolve(DGState state, const TimeStepPlan& plan, const ProblemSpec& problem, const FluxParams& flux,
               const std::vector<Observer>& observers = {});

/// Observer cadence from a simulated-time interval.
std::size_t steps_per_interval(const TimeStepPlan& plan, double interval);

}  // namespace dimer_dg
