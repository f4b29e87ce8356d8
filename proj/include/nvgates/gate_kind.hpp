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

#include <optional>
#include <string>
#include <string_view>

namespace nvgates {

enum class GateKind { CNOT, Toffoli, Fredkin };

inline constexpr GateKind kAllGates[] = {GateKind::CNOT, GateKind::Toffoli, GateKind::Fredkin};

/// Number of NV spins the gate acts on.
constexpr int spin_count(GateKind g) { return g == GateKind::CNOT ? 1 : 2; }

/// Number of input angles averaged over (alpha, beta[, delta]).
constexpr int angle_count(GateKind g) { return g == GateKind::CNOT ? 2 : 3; }

constexpr std::string_view gate_name(GateKind g) {
    switch (g) {
        case GateKind::CNOT: return "CNOT";
        case GateKind::Toffoli: return "Toffoli";
        case GateKind::Fredkin: return "Fredkin";
    }
    return "?";
}

/// Case-insensitive parse of "cnot" / "toffoli" / "fredkin".
inline std::optional<GateKind> parse_gate(std::string_view s) {
    std::string lower;
    for (char c : s) lower.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c));
    if (lower == "cnot") return GateKind::CNOT;
    if (lower == "toffoli") return GateKind::Toffoli;
    if (lower == "fredkin") return GateKind::Fredkin;
    return std::nullopt;
}

}  // namespace nvgates
