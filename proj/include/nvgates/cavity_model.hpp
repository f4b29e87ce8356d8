// Copyright 2026 The nvgates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Single-sided NV-cavity unit: input-output reflection coefficient and the
// conditional amplitudes it imprints on a reflected photon.

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "nvgates/error.hpp"

namespace nvgates {

using Complex = std::complex<double>;

/// Rates and frequencies of one NV-cavity unit. Units are arbitrary but
/// must be shared by all fields (e.g. kappa = 1).
struct CavityParams {
    double g = 0.0;        // NV-cavity coupling strength
    double kappa = 1.0;    // cavity damping rate
    double gamma = 1.0;    // NV decay rate
    double omega_c = 0.0;  // cavity mode frequency
    double omega_0 = 0.0;  // NV transition frequency
    double omega_p = 0.0;  // probe photon frequency

    /// Resonant unit with coupling g = x * sqrt(kappa * gamma), kappa = gamma = 1.
    static CavityParams resonant(double coupling_ratio) {
        CavityParams p;
        p.g = coupling_ratio;
        return p;
    }

    bool is_resonant() const { return omega_c == omega_0 && omega_0 == omega_p; }
};

/// Conditional reflection amplitudes of one NV-cavity unit at resonance.
///
/// `matched` applies when the photon polarization drives the transition
/// selected by the spin (R with |+>, L with |->); `mismatched` applies to the
/// other two combinations, where the photon sees an empty cavity.
struct ScatterRules {
    double r_matched = 1.0;
    double r_mismatched = -1.0;

    friend bool operator==(const ScatterRules&, const ScatterRules&) = default;
};

namespace detail {

inline void require_finite_nonneg(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
        throw InvalidParameter(std::string(name) + " must be finite and non-negative");
    }
}

inline void require_rates(double g, double kappa, double gamma) {
    require_finite_nonneg(g, "g");
    require_finite_nonneg(kappa, "kappa");
    require_finite_nonneg(gamma, "gamma");
    if (kappa == 0.0) throw InvalidParameter("kappa must be positive");
    if (gamma == 0.0) throw InvalidParameter("gamma must be positive");
}

}  // namespace detail

inline void validate(const CavityParams& p) {
    detail::require_rates(p.g, p.kappa, p.gamma);
    detail::require_finite_nonneg(p.omega_c, "omega_c");
    detail::require_finite_nonneg(p.omega_0, "omega_0");
    detail::require_finite_nonneg(p.omega_p, "omega_p");
}

/// Reflection coefficient r(omega_p) of the NV-cavity unit in the weak
/// excitation limit:
///
///   r = ([i(wc-wp) - k/2][i(w0-wp) + y/2] + g^2) /
///       ([i(wc-wp) + k/2][i(w0-wp) + y/2] + g^2)
inline Complex reflection_coefficient(const CavityParams& p) {
    validate(p);
    const Complex i{0.0, 1.0};
    const Complex cav_detuning = i * (p.omega_c - p.omega_p);
    const Complex nv_term = i * (p.omega_0 - p.omega_p) + p.gamma / 2.0;
    const double g2 = p.g * p.g;
    const Complex num = (cav_detuning - p.kappa / 2.0) * nv_term + g2;
    const Complex den = (cav_detuning + p.kappa / 2.0) * nv_term + g2;
    return num / den;
}

/// Resonant (w0 = wc = wp) hot-cavity reflection (-k*y + 4g^2) / (k*y + 4g^2).
/// An infinite g is accepted and yields the strong-coupling limit 1.
inline double resonant_reflection(double g, double kappa, double gamma) {
    if (std::isinf(g) && g > 0.0) {
        detail::require_rates(0.0, kappa, gamma);
        return 1.0;
    }
    detail::require_rates(g, kappa, gamma);
    const double kg = kappa * gamma;
    const double four_g2 = 4.0 * g * g;
    return (four_g2 - kg) / (four_g2 + kg);
}

/// |r| as a function of the dimensionless coupling x = g / sqrt(kappa * gamma).
inline double reflection_magnitude(double coupling_ratio) {
    return std::abs(resonant_reflection(coupling_ratio, 1.0, 1.0));
}

/// Strong-coupling (g -> infinity) rules: matched 1, mismatched -1.
constexpr ScatterRules ideal_rules() { return ScatterRules{1.0, -1.0}; }

/// Rules with a given matched magnitude |r| in [0, 1].
inline ScatterRules rules_from_magnitude(double r_abs) {
    if (!std::isfinite(r_abs) || r_abs < 0.0 || r_abs > 1.0) {
        throw InvalidParameter("|r| must lie in [0, 1]");
    }
    return ScatterRules{r_abs, -1.0};
}

/// Conditional amplitudes for a resonant unit. The matched amplitude is the
/// magnitude |r|, so weak coupling (g < sqrt(kappa*gamma)/2, where r < 0)
/// folds onto the same rules as its mirror value.
/// g = +infinity is accepted as the strong-coupling limit.
inline ScatterRules make_scatter_rules(const CavityParams& p) {
    CavityParams finite = p;
    if (std::isinf(p.g) && p.g > 0.0) finite.g = 0.0;
    validate(finite);
    if (!p.is_resonant()) {
        throw InvalidParameter("scatter rules are defined only for a resonant unit (omega_c = omega_0 = omega_p)");
    }
    return rules_from_magnitude(std::abs(resonant_reflection(p.g, p.kappa, p.gamma)));
}

}  // namespace nvgates
