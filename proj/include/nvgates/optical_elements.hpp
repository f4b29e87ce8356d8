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

// Primitive actions of the linear-optics + NV toolbox. Every function is
// linear and returns a new, canonicalized state.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "nvgates/cavity_model.hpp"
#include "nvgates/error.hpp"
#include "nvgates/hybrid_state.hpp"

namespace nvgates {

/// Exit port used for light a beam splitter sends away from the circuit.
inline constexpr int kLossPort = 99;

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

namespace detail {

/// Applies `fn(term, out)` to every term; `fn` appends the images.
template <typename Fn>
HybridState map_terms(const HybridState& s, Fn&& fn) {
    std::vector<Term> out;
    out.reserve(2 * s.size());
    for (const Term& t : s.terms()) fn(t, out);
    return HybridState::from_terms(s.spin_count(), std::move(out));
}

inline void check_nv_index(const HybridState& s, int nv_index) {
    if (nv_index < 0 || nv_index >= s.spin_count()) {
        throw ShapeError("NV index " + std::to_string(nv_index) + " out of range for " +
                         std::to_string(s.spin_count()) + " spin(s)");
    }
}

}  // namespace detail

/// Polarizing beam splitter routing table: (polarization, input path) -> output path.
class PbsRouting {
public:
    struct Route {
        Polarization pol;
        int in;
        int out;
    };

    PbsRouting() = default;
    PbsRouting(std::initializer_list<Route> routes) : routes_(routes) {}

    /// One input: R is transmitted to `r_out`, L reflected to `l_out`.
    static PbsRouting split(int in, int r_out, int l_out) {
        return {{Polarization::R, in, r_out}, {Polarization::L, in, l_out}};
    }

    /// Two inputs recombined onto `out`: R arriving on `r_in` is transmitted
    /// and L arriving on `l_in` is reflected into it. The complementary
    /// components leave through `aux`.
    static PbsRouting merge(int r_in, int l_in, int out, int aux = kLossPort) {
        return {{Polarization::R, r_in, out},
                {Polarization::L, l_in, out},
                {Polarization::L, r_in, aux},
                {Polarization::R, l_in, aux}};
    }

    bool enters(int path) const {
        for (const Route& r : routes_) {
            if (r.in == path) return true;
        }
        return false;
    }

    const Route* find(Polarization pol, int path) const {
        for (const Route& r : routes_) {
            if (r.pol == pol && r.in == path) return &r;
        }
        return nullptr;
    }

private:
    std::vector<Route> routes_;
};

/// Relabels paths per `routing`. Paths that do not enter the splitter pass
/// untouched; an amplitude on an entering path with no route for its
/// polarization throws IncompleteRouting.
inline HybridState apply_pbs(const HybridState& s, const PbsRouting& routing) {
    return detail::map_terms(s, [&](const Term& t, std::vector<Term>& out) {
        if (!routing.enters(t.label.path)) {
            out.push_back(t);
            return;
        }
        const auto* route = routing.find(t.label.pol, t.label.path);
        if (route == nullptr) {
            throw IncompleteRouting("PBS has no route for " + to_string(t.label.pol) + " on path " +
                                    std::to_string(t.label.path));
        }
        Term moved = t;
        moved.label.path = route->out;
        out.push_back(moved);
    });
}

/// Half-wave plate at 0 degrees: sigma_z = |R><R| - |L><L| on `path`.
inline HybridState apply_hwp_sigma_z(const HybridState& s, int path) {
    return detail::map_terms(s, [&](const Term& t, std::vector<Term>& out) {
        Term u = t;
        if (t.label.path == path && t.label.pol == Polarization::L) u.amp = -u.amp;
        out.push_back(u);
    });
}

/// Sign convention of the 22.5 degree wave plate.
///
/// Standard: R -> (R + L)/sqrt2, L -> (R - L)/sqrt2.
/// Flipped:  R -> (R - L)/sqrt2, L -> -(R + L)/sqrt2 (sigma_z H sigma_z), kept
/// only so verification can show the circuits depend on the convention.
enum class HwpConvention { Standard, Flipped };

/// Half-wave plate at 22.5 degrees: polarization Hadamard on `path`.
inline HybridState apply_hwp_hadamard(const HybridState& s, int path,
                                      HwpConvention conv = HwpConvention::Standard) {
    const double sign = conv == HwpConvention::Standard ? 1.0 : -1.0;
    return detail::map_terms(s, [&](const Term& t, std::vector<Term>& out) {
        if (t.label.path != path) {
            out.push_back(t);
            return;
        }
        BasisLabel r = t.label, l = t.label;
        r.pol = Polarization::R;
        l.pol = Polarization::L;
        const Complex a = t.amp * kInvSqrt2;
        if (t.label.pol == Polarization::R) {
            out.push_back({r, a});
            out.push_back({l, sign * a});
        } else {
            out.push_back({r, sign * a});
            out.push_back({l, -a});
        }
    });
}

/// Electron-spin Hadamard on spin `nv_index`: |+> -> (|+> + |->)/sqrt2,
/// |-> -> (|+> - |->)/sqrt2. Acts on every photon path.
inline HybridState apply_electron_hadamard(const HybridState& s, int nv_index) {
    detail::check_nv_index(s, nv_index);
    const auto k = static_cast<std::size_t>(nv_index);
    return detail::map_terms(s, [&](const Term& t, std::vector<Term>& out) {
        BasisLabel plus = t.label, minus = t.label;
        plus.spins[k] = Spin::Plus;
        minus.spins[k] = Spin::Minus;
        const Complex a = t.amp * kInvSqrt2;
        out.push_back({plus, a});
        out.push_back({minus, t.label.spins[k] == Spin::Plus ? a : -a});
    });
}

/// True when the photon polarization drives the transition selected by the
/// spin: R couples to |+>, L couples to |->.
constexpr bool couples(Polarization pol, Spin spin) {
    return (pol == Polarization::R && spin == Spin::Plus) || (pol == Polarization::L && spin == Spin::Minus);
}

/// Reflection of the photon on `path` off the cavity holding spin `nv_index`.
/// Coupled (pol, spin) pairs pick up rules.r_matched, the rest rules.r_mismatched.
inline HybridState apply_nv_scatter(const HybridState& s, int nv_index, int path, const ScatterRules& rules) {
    detail::check_nv_index(s, nv_index);
    const auto k = static_cast<std::size_t>(nv_index);
    return detail::map_terms(s, [&](const Term& t, std::vector<Term>& out) {
        Term u = t;
        if (t.label.path == path) {
            u.amp *= couples(t.label.pol, t.label.spins[k]) ? rules.r_matched : rules.r_mismatched;
        }
        out.push_back(u);
    });
}

/// Optical switch (or free propagation): moves everything on `from_path` to `to_path`.
inline HybridState apply_switch(const HybridState& s, int from_path, int to_path) {
    return detail::map_terms(s, [&](const Term& t, std::vector<Term>& out) {
        Term u = t;
        if (u.label.path == from_path) u.label.path = to_path;
        out.push_back(u);
    });
}

}  // namespace nvgates
