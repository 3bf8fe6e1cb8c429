#include "dimer_dg/flux.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimer_dg {

FluxParams FluxParams::make(double alpha1, double alpha2, double beta1, double beta2, bool allow_unstable)
{
    for (double a : {alpha1, alpha2}) {
        if (!(a >= 0.0 && a <= 1.0)) {
            throw std::invalid_argument("FluxParams: alpha values must lie in [0, 1]");
        }
    }
    if (!std::isfinite(beta1) || !std::isfinite(beta2)) {
        throw std::invalid_argument("FluxParams: beta values must be finite");
    }
    FluxParams p{alpha1, alpha2, beta1, beta2, FluxPreset::custom};
    if (!allow_unstable && !p.is_energy_stable()) {
        std::ostringstream os;
        os << "FluxParams: (" << alpha1 << ", " << alpha2 << ", " << beta1 << ", " << beta2
           << ") violates the energy stability condition (margin " << p.stability_margin() << " > 0)";
        throw std::invalid_argument(os.str());
    }
    return p;
}

FluxParams FluxParams::from_preset(FluxPreset preset)
{
    switch (preset) {
    case FluxPreset::upwind:
        return {0.0, 0.0, 0.0, 0.0, preset};
    case FluxPreset::central:
        return {1.0, 1.0, 0.0, 0.0, preset};
    case FluxPreset::mixed_upwind:
        return {0.0, 0.0, 1.0, 1.0, preset};
    case FluxPreset::mixed_central:
        return {1.0, 1.0, 1.0, 1.0, preset};
    case FluxPreset::custom:
        break;
    }
    throw std::invalid_argument("FluxParams::from_preset: custom has no fixed parameters");
}

double FluxParams::stability_margin() const noexcept
{
    return -(1.0 - std::max(alpha1, alpha2)) + 0.5 * std::abs(beta1 - beta2);
}

FluxParams parse_flux(std::string_view text, bool allow_unstable)
{
    if (text == "upwind") {
        return FluxParams::from_preset(FluxPreset::upwind);
    }
    if (text == "central") {
        return FluxParams::from_preset(FluxPreset::central);
    }
    if (text == "mixed-upwind") {
        return FluxParams::from_preset(FluxPreset::mixed_upwind);
    }
    if (text == "mixed-central") {
        return FluxParams::from_preset(FluxPreset::mixed_central);
    }
    constexpr std::string_view prefix = "custom:";
    if (text.starts_with(prefix)) {
        std::vector<double> v;
        std::stringstream ss{std::string(text.substr(prefix.size()))};
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                v.push_back(std::stod(item, &used));
                if (used != item.size()) {
                    throw std::invalid_argument(item);
                }
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_flux: bad number '" + item + "'");
            }
        }
        if (v.size() != 4) {
            throw std::invalid_argument("parse_flux: custom flux needs exactly four values a1,a2,b1,b2");
        }
        return FluxParams::make(v[0], v[1], v[2], v[3], allow_unstable);
    }
    throw std::invalid_argument("parse_flux: unknown flux '" + std::string(text) + "'");
}

std::string flux_name(const FluxParams& p)
{
    switch (p.preset) {
    case FluxPreset::upwind:
        return "upwind";
    case FluxPreset::central:
        return "central";
    case FluxPreset::mixed_upwind:
        return "mixed-upwind";
    case FluxPreset::mixed_central:
        return "mixed-central";
    case FluxPreset::custom:
        break;
    }
    std::ostringstream os;
    os << "custom:" << p.alpha1 << ',' << p.alpha2 << ',' << p.beta1 << ',' << p.beta2;
    return os.str();
}

}  // namespace dimer_dg
