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

// Shared helpers for the test binaries: seeded random states and the
// closed-form efficiency polynomials in expanded form.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "nvgates/nvgates.hpp"

namespace nvgates::testing {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Random normalized state with Gaussian amplitudes on a random subset of
/// labels over paths [0, paths).
inline HybridState random_state(std::mt19937_64& rng, int spin_count, int paths = 3) {
    std::normal_distribution<double> gauss;
    std::bernoulli_distribution keep(0.7);
    std::vector<Term> terms;
    const std::vector<SpinList> spins = spin_count == 1
                                            ? std::vector<SpinList>{{Spin::Plus}, {Spin::Minus}}
                                            : std::vector<SpinList>{{Spin::Plus, Spin::Plus},
                                                                    {Spin::Plus, Spin::Minus},
                                                                    {Spin::Minus, Spin::Plus},
                                                                    {Spin::Minus, Spin::Minus}};
    for (Polarization p : {Polarization::R, Polarization::L}) {
        for (int path = 0; path < paths; ++path) {
            for (const SpinList& s : spins) {
                if (keep(rng)) terms.push_back({{p, path, s}, Complex{gauss(rng), gauss(rng)}});
            }
        }
    }
    terms.push_back({{Polarization::R, 0, spins.front()}, Complex{1.0, 0.5}});
    return normalize(HybridState::from_terms(spin_count, std::move(terms)));
}

inline InputAngles random_angles(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    return {u(rng), u(rng), u(rng)};
}

/// Average efficiencies in expanded monomial form.
inline double expanded_efficiency(GateKind gate, double r) {
    using std::pow;
    switch (gate) {
        case GateKind::CNOT:
            return (3.0 + r * r) / 4.0;
        case GateKind::Toffoli:
            return (3.0 + r * r) * (27.0 + 2.0 * r + 4.0 * r * r - 2.0 * pow(r, 3) + pow(r, 4)) / 128.0;
        case GateKind::Fredkin:
            return (1361.0 - 156.0 * r + 286.0 * r * r + 28.0 * pow(r, 3) + 239.0 * pow(r, 4) + 152.0 * pow(r, 5) +
                    148.0 * pow(r, 6) - 24.0 * pow(r, 7) - pow(r, 8) + 4.0 * pow(r, 9) + 14.0 * pow(r, 10) -
                    4.0 * pow(r, 11) + pow(r, 12)) /
                   2048.0;
    }
    return 0.0;
}

}  // namespace nvgates::testing
