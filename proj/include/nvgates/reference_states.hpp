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

// Closed-form states the circuits must reproduce, written out term by term
// from hand expansion of each gate's evolution. They share no code with the
// element implementations and serve as oracles for tests and `verify`.

#include <cmath>
#include <vector>

#include "nvgates/hybrid_state.hpp"

namespace nvgates::reference {

namespace detail {

constexpr auto R = Polarization::R;
constexpr auto L = Polarization::L;
constexpr auto P = Spin::Plus;
constexpr auto M = Spin::Minus;

struct Trig {
    double ca, sa, cb, sb, cd, sd;
    explicit Trig(const InputAngles& a)
        : ca(std::cos(a.alpha)),
          sa(std::sin(a.alpha)),
          cb(std::cos(a.beta)),
          sb(std::sin(a.beta)),
          cd(std::cos(a.delta)),
          sd(std::sin(a.delta)) {}
};

/// c0 * (cos(beta)|+> + sin(beta)|->)_0 (cos(delta)|+> + sin(delta)|->)_1 on (pol, path).
inline void add_product(std::vector<Term>& out, Polarization pol, int path, double c0, const Trig& t) {
    out.push_back({{pol, path, {P, P}}, c0 * t.cb * t.cd});
    out.push_back({{pol, path, {P, M}}, c0 * t.cb * t.sd});
    out.push_back({{pol, path, {M, P}}, c0 * t.sb * t.cd});
    out.push_back({{pol, path, {M, M}}, c0 * t.sb * t.sd});
}

}  // namespace detail

/// Ideal CNOT output: cos a |R>(cos b|+> + sin b|->) + sin a |L>(cos b|-> + sin b|+>).
inline HybridState cnot_ideal_output(const InputAngles& a, int path = 4) {
    using namespace detail;
    const Trig t(a);
    return HybridState::from_terms(1, {{{R, path, {P}}, t.ca * t.cb},
                                       {{R, path, {M}}, t.ca * t.sb},
                                       {{L, path, {M}}, t.sa * t.cb},
                                       {{L, path, {P}}, t.sa * t.sb}});
}

/// Un-normalized CNOT output for matched amplitude |r|:
///   cos a |R>(cos b|+> + sin b|->)
///   + (sin a / 2)|L>[cos b(|r|+1) - sin b(|r|-1)]|->
///   + (sin a / 2)|L>[sin b(|r|+1) - cos b(|r|-1)]|+>
inline HybridState cnot_realistic_output(const InputAngles& a, double r_abs, int path = 4) {
    using namespace detail;
    const Trig t(a);
    const double h = t.sa / 2.0;
    return HybridState::from_terms(
        1, {{{R, path, {P}}, t.ca * t.cb},
            {{R, path, {M}}, t.ca * t.sb},
            {{L, path, {M}}, h * (t.cb * (r_abs + 1.0) - t.sb * (r_abs - 1.0))},
            {{L, path, {P}}, h * (t.sb * (r_abs + 1.0) - t.cb * (r_abs - 1.0))}});
}

/// Toffoli after the first NV_c2 block: the L component has been
/// converted to L when c2 = |+> and to -R when c2 = |->, now on mode 8.
inline HybridState toffoli_after_block_1(const InputAngles& a) {
    using namespace detail;
    const Trig t(a);
    std::vector<Term> out;
    add_product(out, R, 1, t.ca, t);
    // sin a (cos b |L8>|+> - sin b |R8>|->) (cos d|+> + sin d|->)
    out.push_back({{L, 8, {P, P}}, t.sa * t.cb * t.cd});
    out.push_back({{L, 8, {P, M}}, t.sa * t.cb * t.sd});
    out.push_back({{R, 8, {M, P}}, -t.sa * t.sb * t.cd});
    out.push_back({{R, 8, {M, M}}, -t.sa * t.sb * t.sd});
    return HybridState::from_terms(2, std::move(out));
}

/// Toffoli after the NV_t block: the -R branch (c2 = |->) has flipped t.
inline HybridState toffoli_after_block_2(const InputAngles& a) {
    using namespace detail;
    const Trig t(a);
    std::vector<Term> out;
    add_product(out, R, 1, t.ca, t);
    out.push_back({{L, 12, {P, P}}, t.sa * t.cb * t.cd});
    out.push_back({{L, 12, {P, M}}, t.sa * t.cb * t.sd});
    // -sin a sin b |R12>|->(cos d|-> + sin d|+>)
    out.push_back({{R, 12, {M, M}}, -t.sa * t.sb * t.cd});
    out.push_back({{R, 12, {M, P}}, -t.sa * t.sb * t.sd});
    return HybridState::from_terms(2, std::move(out));
}

/// Toffoli output on mode 19: t flipped iff photon L and c2 = |->.
inline HybridState toffoli_output(const InputAngles& a) {
    using namespace detail;
    const Trig t(a);
    std::vector<Term> out;
    add_product(out, R, 19, t.ca, t);
    out.push_back({{L, 19, {P, P}}, t.sa * t.cb * t.cd});
    out.push_back({{L, 19, {P, M}}, t.sa * t.cb * t.sd});
    out.push_back({{L, 19, {M, M}}, t.sa * t.sb * t.cd});
    out.push_back({{L, 19, {M, P}}, t.sa * t.sb * t.sd});
    return HybridState::from_terms(2, std::move(out));
}

/// Fredkin after the first block pass (mode 4): even spin parity keeps L,
/// odd parity becomes -R.
inline HybridState fredkin_after_pass_1(const InputAngles& a) {
    using namespace detail;
    const Trig t(a);
    std::vector<Term> out;
    add_product(out, R, 1, t.ca, t);
    out.push_back({{L, 4, {P, P}}, t.sa * t.cb * t.cd});
    out.push_back({{R, 4, {P, M}}, -t.sa * t.cb * t.sd});
    out.push_back({{R, 4, {M, P}}, -t.sa * t.sb * t.cd});
    out.push_back({{L, 4, {M, M}}, t.sa * t.sb * t.sd});
    return HybridState::from_terms(2, std::move(out));
}

/// Fredkin after the second pass (mode 3): the odd-parity R terms are swapped.
inline HybridState fredkin_after_pass_2(const InputAngles& a) {
    using namespace detail;
    const Trig t(a);
    std::vector<Term> out;
    add_product(out, R, 1, t.ca, t);
    out.push_back({{L, 3, {P, P}}, t.sa * t.cb * t.cd});
    out.push_back({{R, 3, {M, P}}, -t.sa * t.cb * t.sd});
    out.push_back({{R, 3, {P, M}}, -t.sa * t.sb * t.cd});
    out.push_back({{L, 3, {M, M}}, t.sa * t.sb * t.sd});
    return HybridState::from_terms(2, std::move(out));
}

/// Fredkin output on mode 13: spins swapped iff photon L.
inline HybridState fredkin_output(const InputAngles& a) {
    using namespace detail;
    const Trig t(a);
    std::vector<Term> out;
    add_product(out, R, 13, t.ca, t);
    // sin a |L>(cos b|+> + sin b|->)_t2 (cos d|+> + sin d|->)_t1
    out.push_back({{L, 13, {P, P}}, t.sa * t.cb * t.cd});
    out.push_back({{L, 13, {M, P}}, t.sa * t.cb * t.sd});
    out.push_back({{L, 13, {P, M}}, t.sa * t.sb * t.cd});
    out.push_back({{L, 13, {M, M}}, t.sa * t.sb * t.sd});
    return HybridState::from_terms(2, std::move(out));
}

}  // namespace nvgates::reference
