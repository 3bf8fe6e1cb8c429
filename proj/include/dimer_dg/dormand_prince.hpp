#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace dimer_dg {

/// Embedded Runge-Kutta 5(4) pair of Dormand and Prince with its
/// fourth-order continuous extension, for planar autonomous systems.
class DormandPrince45 {
public:
    using State = std::array<double, 2>;
    using Rhs = std::function<State(const State&)>;

    struct Options {
        double rtol = 1e-12;
        double atol = 1e-14;
        double initial_step = 1e-3;
        double max_step = std::numeric_limits<double>::infinity();
        std::size_t max_steps = 10'000'000;
    };

    /// One accepted step together with its dense-output polynomial.
    struct Step {
        double z0;
        double h;
        std::array<State, 5> coeffs;

        State evaluate(double z) const;
    };

    /// Piecewise dense solution over the accepted steps.
    class Solution {
    public:
        double z_begin() const noexcept { return z_begin_; }
        double z_end() const noexcept { return z_end_; }
        const State& final_state() const noexcept { return final_; }
        std::size_t n_steps() const noexcept { return steps_.size(); }
        const std::vector<Step>& steps() const noexcept { return steps_; }

        /// Dense-output value at z in [z_begin, z_end].
        State operator()(double z) const;

    private:
        friend class DormandPrince45;
        double z_begin_ = 0.0;
        double z_end_ = 0.0;
        State initial_{};
        State final_{};
        std::vector<Step> steps_;
    };

    /// Called after every accepted step with (z, y); returning false stops
    /// the integration at that step.
    using StepMonitor = std::function<bool(double, const State&)>;

    DormandPrince45() : options_(Options()) {}
    explicit DormandPrince45(Options options) : options_(options) {}

    Solution integrate(const Rhs& rhs, double z0, const State& y0, double z_end,
                       const StepMonitor& monitor = {}) const;

private:
    Options options_;
};

}  // namespace dimer_dg
