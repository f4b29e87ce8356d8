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

// Sparse pure states of one photon (polarization x spatial mode) and one or
// two NV electron spins. Norms below one represent photon loss.

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nvgates/error.hpp"
#include "nvgates/gate_kind.hpp"

namespace nvgates {

using Complex = std::complex<double>;

/// Amplitudes at or below this magnitude are dropped after every operation.
inline constexpr double kPruneTolerance = 1e-12;

enum class Polarization : std::uint8_t { R, L };

/// NV ground sublevels |m_s = +1> and |m_s = -1>.
enum class Spin : std::uint8_t { Plus, Minus };

constexpr Polarization flip(Polarization p) { return p == Polarization::R ? Polarization::L : Polarization::R; }
constexpr Spin flip(Spin s) { return s == Spin::Plus ? Spin::Minus : Spin::Plus; }

/// Ordered spin register of length 1 or 2.
class SpinList {
public:
    constexpr SpinList() = default;
    constexpr SpinList(std::initializer_list<Spin> spins) {
        if (spins.size() < 1 || spins.size() > 2) throw ShapeError("spin register must hold 1 or 2 spins");
        for (Spin s : spins) v_[n_++] = s;
    }

    constexpr std::size_t size() const { return n_; }
    constexpr Spin operator[](std::size_t i) const { return v_[i]; }
    constexpr Spin& operator[](std::size_t i) { return v_[i]; }

    constexpr auto begin() const { return v_.begin(); }
    constexpr auto end() const { return v_.begin() + n_; }

    friend constexpr auto operator<=>(const SpinList& a, const SpinList& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        for (std::size_t i = 0; i < a.n_; ++i) {
            if (auto c = a.v_[i] <=> b.v_[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }
    friend constexpr bool operator==(const SpinList& a, const SpinList& b) { return (a <=> b) == 0; }

private:
    std::array<Spin, 2> v_{Spin::Plus, Spin::Plus};
    std::uint8_t n_ = 0;
};

/// |pol_path> (x) |spins>.
struct BasisLabel {
    Polarization pol = Polarization::R;
    int path = 0;
    SpinList spins;

    friend constexpr auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
    friend constexpr bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

struct Term {
    BasisLabel label;
    Complex amp;
};

/// Input parameters of the product input state: photon cos(alpha)|R> +
/// sin(alpha)|L>, spin 0 cos(beta)|+> + sin(beta)|->, spin 1 likewise with delta.
struct InputAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double delta = 0.0;
};

inline void validate(const InputAngles& a) {
    if (!std::isfinite(a.alpha) || !std::isfinite(a.beta) || !std::isfinite(a.delta)) {
        throw InvalidParameter("input angles must be finite");
    }
}

/// Immutable sparse state. Terms are kept sorted by label with no duplicates
/// and no amplitude at or below kPruneTolerance.
class HybridState {
public:
    explicit HybridState(int spin_count = 1) : spin_count_(spin_count) {
        if (spin_count < 1 || spin_count > 2) throw ShapeError("spin_count must be 1 or 2");
    }

    /// Canonicalizes `terms`: sums duplicates, sorts, prunes.
    static HybridState from_terms(int spin_count, std::vector<Term> terms) {
        HybridState s(spin_count);
        for (const Term& t : terms) {
            if (static_cast<int>(t.label.spins.size()) != spin_count) {
                throw ShapeError("term spin count does not match state spin count");
            }
        }
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.label < b.label; });
        for (const Term& t : terms) {
            if (!s.terms_.empty() && s.terms_.back().label == t.label) {
                s.terms_.back().amp += t.amp;
            } else {
                s.terms_.push_back(t);
            }
        }
        std::erase_if(s.terms_, [](const Term& t) { return std::abs(t.amp) <= kPruneTolerance; });
        return s;
    }

    int spin_count() const { return spin_count_; }
    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    Complex amplitude(const BasisLabel& label) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), label,
                                   [](const Term& t, const BasisLabel& l) { return t.label < l; });
        return (it != terms_.end() && it->label == label) ? it->amp : Complex{};
    }

    /// Only the terms whose photon sits on `path`.
    HybridState on_path(int path) const {
        HybridState s(spin_count_);
        for (const Term& t : terms_) {
            if (t.label.path == path) s.terms_.push_back(t);
        }
        return s;
    }

    friend HybridState operator*(Complex c, const HybridState& s) {
        std::vector<Term> out(s.terms_.begin(), s.terms_.end());
        for (Term& t : out) t.amp *= c;
        return from_terms(s.spin_count_, std::move(out));
    }
    friend HybridState operator*(const HybridState& s, Complex c) { return c * s; }

    friend HybridState operator+(const HybridState& a, const HybridState& b) {
        if (a.spin_count_ != b.spin_count_) throw ShapeError("cannot add states with different spin counts");
        std::vector<Term> out(a.terms_.begin(), a.terms_.end());
        out.insert(out.end(), b.terms_.begin(), b.terms_.end());
        return from_terms(a.spin_count_, std::move(out));
    }

    friend HybridState operator-(const HybridState& a, const HybridState& b) { return a + Complex{-1.0} * b; }

private:
    int spin_count_;
    std::vector<Term> terms_;
};

/// Sum of |amplitude|^2: the photon survival probability for circuit outputs.
inline double norm_sq(const HybridState& s) {
    double n = 0.0;
    for (const Term& t : s.terms()) n += std::norm(t.amp);
    return n;
}

inline HybridState normalize(const HybridState& s) {
    const double n2 = norm_sq(s);
    if (!(n2 > kPruneTolerance * kPruneTolerance)) throw DegenerateState("cannot normalize a zero-norm state");
    return Complex{1.0 / std::sqrt(n2)} * s;
}

/// <a|b>, conjugate-linear in `a`.
inline Complex overlap(const HybridState& a, const HybridState& b) {
    if (a.spin_count() != b.spin_count()) throw ShapeError("overlap of states with different spin counts");
    Complex acc{};
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->label < ib->label) {
            ++ia;
        } else if (ib->label < ia->label) {
            ++ib;
        } else {
            acc += std::conj(ia->amp) * ib->amp;
            ++ia;
            ++ib;
        }
    }
    return acc;
}

/// Largest |a_k - b_k| over the union of labels.
inline double max_abs_diff(const HybridState& a, const HybridState& b) {
    double worst = 0.0;
    for (const Term& t : a.terms()) worst = std::max(worst, std::abs(t.amp - b.amplitude(t.label)));
    for (const Term& t : b.terms()) worst = std::max(worst, std::abs(t.amp - a.amplitude(t.label)));
    return worst;
}

/// Term-by-term equality after removing the global phase of `b` relative to `a`.
/// The phase is taken from <b|a>; if that vanishes both states must be ~0.
inline bool equal_up_to_phase(const HybridState& a, const HybridState& b, double tol) {
    if (a.spin_count() != b.spin_count()) return false;
    const Complex ov = overlap(b, a);
    const Complex phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : Complex{1.0};
    return max_abs_diff(a, phase * b) <= tol;
}

// Builders ------------------------------------------------------------------

/// Photon (cos a |R> + sin a |L>) on `path`, times the per-spin superpositions
/// cos(beta)|+> + sin(beta)|-> (and cos(delta)|+> + sin(delta)|-> for spin 1).
inline HybridState product_state(const InputAngles& angles, int spin_count, int path = 0) {
    validate(angles);
    const std::pair<Polarization, double> photon[] = {{Polarization::R, std::cos(angles.alpha)},
                                                      {Polarization::L, std::sin(angles.alpha)}};
    const std::pair<Spin, double> s0[] = {{Spin::Plus, std::cos(angles.beta)}, {Spin::Minus, std::sin(angles.beta)}};
    const std::pair<Spin, double> s1[] = {{Spin::Plus, std::cos(angles.delta)},
                                          {Spin::Minus, std::sin(angles.delta)}};
    std::vector<Term> terms;
    for (auto [pol, cp] : photon) {
        for (auto [a, ca] : s0) {
            if (spin_count == 1) {
                terms.push_back({{pol, path, {a}}, cp * ca});
                continue;
            }
            for (auto [b, cb] : s1) terms.push_back({{pol, path, {a, b}}, cp * ca * cb});
        }
    }
    return HybridState::from_terms(spin_count, std::move(terms));
}

/// Normalized input of the given gate with the photon on input port 0.
inline HybridState product_input(const InputAngles& angles, GateKind gate) {
    return product_state(angles, spin_count(gate), 0);
}

/// Single basis ket with unit amplitude.
inline HybridState basis_state(const BasisLabel& label) {
    return HybridState::from_terms(static_cast<int>(label.spins.size()), {{label, Complex{1.0}}});
}

// Rendering -----------------------------------------------------------------

inline std::string to_string(Polarization p) { return p == Polarization::R ? "R" : "L"; }
inline std::string to_string(Spin s) { return s == Spin::Plus ? "+" : "−"; }

inline std::string to_string(const BasisLabel& l) {
    std::string out = "|" + to_string(l.pol) + "," + std::to_string(l.path);
    for (Spin s : l.spins) out += "," + to_string(s);
    return out + "⟩";
}

namespace detail {
inline std::string format_fixed(double v, int digits) {
    if (std::abs(v) < 0.5 * std::pow(10.0, -digits)) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}
}  // namespace detail

/// Dirac text, e.g. "(0.500+0.000i)|L,4,+,−⟩ + (-0.500+0.000i)|R,4,−,+⟩".
/// An empty state renders as "0".
inline std::string to_string(const HybridState& s, int digits = 3) {
    if (s.empty()) return "0";
    std::string out;
    for (const Term& t : s.terms()) {
        if (!out.empty()) out += " + ";
        const std::string im = detail::format_fixed(t.amp.imag(), digits);
        out += "(" + detail::format_fixed(t.amp.real(), digits) + (im.front() == '-' ? "" : "+") + im + "i)" +
               to_string(t.label);
    }
    return out;
}

}  // namespace nvgates
