#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dimer_dg/model.hpp"

namespace dimer_dg {

/// First integral of the traveling-wave system:
/// Q = c ((w1 + w2)^2 / 2 + (w1 - w2)^2 / 2) + w1^2 - w2^2.
double q_invariant(double w1, double w2, double c);

/// Traveling-wave ODE in z = x - c t:
///   (c + 1) dw1/dz = N w2,   (1 - c) dw2/dz = N w1.
/// Throws for |c| = 1.
std::array<double, 2> ode_rhs(double w1, double w2, double c, const Nonlinearity& nl);

/// The near-origin seed used for the kink runs: (-7 sqrt2, -3 sqrt2) * 1e-51.
std::array<double, 2> reference_kink_seed();

/// Right end state (cos theta, sin theta) reachable from the origin along
/// Q = 0, i.e. cos 2 theta = -c, in the quadrant selected by the seed.
std::array<double, 2> kink_asymptote(double c, const std::array<double, 2>& seed);

struct KinkOptions {
    double rtol = 1e-12;
    double atol = 1e-14;
    double max_step = 0.05;
    /// Trajectories leaving this radius are rejected as non-kinks.
    double escape_radius = 10.0;
    /// Give up if the unit circle has not been reached by this z.
    double z_limit = 2000.0;
    /// When set, the profile is translated so that |w| = 1/2 at z = center.
    std::optional<double> center;
};

struct KinkSample {
    double z;
    double w1;
    double w2;
};

struct KinkProfile {
    double speed = 0.0;
    std::vector<KinkSample> samples;
    double q_value = 0.0;
    /// max |Q - Q(seed)| over the accepted integrator steps and the samples.
    double q_drift = 0.0;
    std::array<double, 2> asymptotic_left{};
    std::array<double, 2> asymptotic_right{};
    /// Profile coordinate minus ODE coordinate (0 unless re-centred).
    double shift = 0.0;
    /// Location of the |w| = 1/2 crossing in profile coordinates, if any.
    std::optional<double> midpoint;

    /// CSV with header z,w1,w2,Q.
    void write_csv(const std::string& path) const;
};

/// Integrates the traveling-wave ODE from `seed` at z = 0 with an adaptive
/// Dormand-Prince 5(4) pair and samples its dense output at `z_grid`
/// (profile coordinates). Samples left of the seed follow the linear
/// unstable manifold of the origin; samples beyond the end of the
/// integration hold the right asymptotic state.
KinkProfile generate_kink(double c, std::span<const double> z_grid, const std::array<double, 2>& seed,
                          const KinkOptions& options = {}, const Nonlinearity& nl = make_sech_nonlinearity());

}  // namespace dimer_dg
