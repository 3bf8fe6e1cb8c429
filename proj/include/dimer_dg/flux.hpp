#pragma once

#include <string>
#include <string_view>

namespace dimer_dg {

enum class FluxPreset { upwind, central, mixed_upwind, mixed_central, custom };

/// Interelement flux family
///   w1_hat   = {w1} - (1 - alpha1)/2 [w1] + beta1/2 [w2]
///   w2_tilde = {w2} + (1 - alpha2)/2 [w2] + beta2/2 [w1]
/// with {v} the arithmetic average and [v] = v^- - v^+.
struct FluxParams {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    FluxPreset preset = FluxPreset::upwind;

    /// Validates alpha in [0, 1] and, unless allow_unstable, the energy
    /// stability condition -(1 - max(alpha1, alpha2)) + |beta1 - beta2| / 2 <= 0.
    static FluxParams make(double alpha1, double alpha2, double beta1, double beta2,
                           bool allow_unstable = false);
    static FluxParams from_preset(FluxPreset preset);

    /// -(1 - max(alpha1, alpha2)) + |beta1 - beta2| / 2; stable when <= 0.
    double stability_margin() const noexcept;
    bool is_energy_stable() const noexcept { return stability_margin() <= 0.0; }
};

/// Accepts upwind | central | mixed-upwind | mixed-central | custom:a1,a2,b1,b2.
FluxParams parse_flux(std::string_view text, bool allow_unstable = false);
std::string flux_name(const FluxParams& p);

struct InterfaceFlux {
    double w1_hat;
    double w2_tilde;
};

inline InterfaceFlux interface_flux(double w1_minus, double w1_plus, double w2_minus, double w2_plus,
                                    const FluxParams& p) noexcept
{
    const double avg1 = 0.5 * (w1_minus + w1_plus);
    const double avg2 = 0.5 * (w2_minus + w2_plus);
    const double jump1 = w1_minus - w1_plus;
    const double jump2 = w2_minus - w2_plus;
    return {avg1 - 0.5 * (1.0 - p.alpha1) * jump1 + 0.5 * p.beta1 * jump2,
            avg2 + 0.5 * (1.0 - p.alpha2) * jump2 + 0.5 * p.beta2 * jump1};
}

}  // namespace dimer_dg
