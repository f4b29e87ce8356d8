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

// The three photon-controlled gates as unrolled element scripts.
//
// Spatial modes follow the circuit drawings: the photon enters on mode 0,
// the R component bypasses the NVs on mode 1, and the gates exit on
// mode 4 (CNOT), 19 (Toffoli) and 13 (Fredkin). Light leaving a splitter
// through an unused port goes to kLossPort and never reaches the output.

#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "nvgates/cavity_model.hpp"
#include "nvgates/gate_kind.hpp"
#include "nvgates/hybrid_state.hpp"
#include "nvgates/optical_elements.hpp"

namespace nvgates {

namespace element {
struct Pbs {
    PbsRouting routing;
};
struct HwpSigmaZ {
    int path;
};
struct HwpHadamard {
    int path;
};
struct ElectronHadamard {
    int nv;
};
struct NvScatter {
    int nv;
    int path;
};
/// Optical switch.
struct Switch {
    int from;
    int to;
};
/// Free flight between two numbered modes (e.g. off a cavity or through a plate).
struct Propagate {
    int from;
    int to;
};
/// Records the current state under `name`.
struct Checkpoint {
    std::string_view name;
};
}  // namespace element

using Element = std::variant<element::Pbs, element::HwpSigmaZ, element::HwpHadamard, element::ElectronHadamard,
                             element::NvScatter, element::Switch, element::Propagate, element::Checkpoint>;

struct CircuitScript {
    GateKind gate;
    int terminal_path;
    std::vector<Element> steps;
};

struct CircuitOptions {
    HwpConvention hwp = HwpConvention::Standard;
};

/// Realistic output of one gate run: the state on the output mode
/// (un-normalized) and its norm, the probability the photon exits there.
struct GateResult {
    HybridState output;
    double survival = 0.0;
};

struct Execution {
    HybridState final_state;  // all modes, including loss ports
    std::vector<std::pair<std::string_view, HybridState>> checkpoints;

    const HybridState& checkpoint(std::string_view name) const {
        for (const auto& [n, s] : checkpoints) {
            if (n == name) return s;
        }
        throw std::out_of_range("no checkpoint named " + std::string(name));
    }
};

namespace checkpoint {
inline constexpr std::string_view kToffoliBlock1 = "toffoli.after_block_1";
inline constexpr std::string_view kToffoliBlock2 = "toffoli.after_block_2";
inline constexpr std::string_view kFredkinPass1 = "fredkin.after_pass_1";
inline constexpr std::string_view kFredkinPass2 = "fredkin.after_pass_2";
}  // namespace checkpoint

namespace detail {

inline CircuitScript make_cnot_script() {
    using namespace element;
    return {GateKind::CNOT,
            4,
            {
                ElectronHadamard{0},
                Pbs{PbsRouting::split(0, 1, 2)},
                NvScatter{0, 2},  // only the L arm meets the cavity
                Propagate{2, 3},
                Pbs{PbsRouting::merge(1, 3, 4)},
                ElectronHadamard{0},
                HwpSigmaZ{4},
            }};
}

// spin 0 = NV_c2, spin 1 = NV_t
inline CircuitScript make_toffoli_script() {
    using namespace element;
    return {GateKind::Toffoli,
            19,
            {
                Pbs{PbsRouting::split(0, 1, 2)},
                // block 1: HWP1, PBS2, NV_c2, PBS3, HWP2
                HwpHadamard{2},
                Propagate{2, 3},
                Pbs{PbsRouting::split(3, 4, 5)},
                NvScatter{0, 4},
                Propagate{4, 6},
                Pbs{PbsRouting::merge(6, 5, 7)},
                HwpHadamard{7},
                Propagate{7, 8},
                Checkpoint{checkpoint::kToffoliBlock1},
                // block 2: He(t), PBS4, NV_t, PBS5, He(t)
                ElectronHadamard{1},
                Pbs{PbsRouting::split(8, 9, 10)},
                NvScatter{1, 9},
                Propagate{9, 11},
                Pbs{PbsRouting::merge(11, 10, 12)},
                ElectronHadamard{1},
                Checkpoint{checkpoint::kToffoliBlock2},
                // block 3: HWP3, PBS6, NV_c2, PBS7, HWP4
                HwpHadamard{12},
                Propagate{12, 13},
                Pbs{PbsRouting::split(13, 14, 15)},
                NvScatter{0, 14},
                Propagate{14, 16},
                Pbs{PbsRouting::merge(16, 15, 17)},
                HwpHadamard{17},
                Propagate{17, 18},
                Pbs{PbsRouting::merge(1, 18, 19)},  // PBS8
            }};
}

// spin 0 = NV_t1, spin 1 = NV_t2. The photon crosses the PBS2-NV-NV-PBS3
// block three times; the switches S1 and S2 route it around the loop.
inline CircuitScript make_fredkin_script() {
    using namespace element;
    const auto block = [](std::vector<Element>& s) {
        s.push_back(Pbs{PbsRouting::split(4, 5, 6)});
        s.push_back(NvScatter{0, 5});
        s.push_back(Propagate{5, 7});
        s.push_back(NvScatter{1, 7});
        s.push_back(Propagate{7, 8});
        s.push_back(Pbs{PbsRouting::merge(8, 6, 9)});
    };
    std::vector<Element> s;
    s.push_back(Pbs{PbsRouting::split(0, 1, 2)});
    s.push_back(Switch{2, 3});  // S1
    s.push_back(HwpHadamard{3});
    s.push_back(Propagate{3, 4});
    block(s);
    s.push_back(Switch{9, 10});  // S2
    s.push_back(Switch{10, 3});  // S1
    s.push_back(HwpHadamard{3});
    s.push_back(Propagate{3, 4});
    s.push_back(Checkpoint{checkpoint::kFredkinPass1});

    s.push_back(ElectronHadamard{0});
    s.push_back(ElectronHadamard{1});
    block(s);
    s.push_back(ElectronHadamard{0});
    s.push_back(ElectronHadamard{1});
    s.push_back(Switch{9, 10});
    s.push_back(Switch{10, 3});
    s.push_back(Checkpoint{checkpoint::kFredkinPass2});

    s.push_back(HwpHadamard{3});
    s.push_back(Propagate{3, 4});
    block(s);
    s.push_back(Switch{9, 11});  // S2, exit branch
    s.push_back(HwpHadamard{11});
    s.push_back(Propagate{11, 12});
    s.push_back(Pbs{PbsRouting::merge(1, 12, 13)});  // PBS4
    return {GateKind::Fredkin, 13, std::move(s)};
}

}  // namespace detail

inline const CircuitScript& script(GateKind gate) {
    static const CircuitScript cnot = detail::make_cnot_script();
    static const CircuitScript toffoli = detail::make_toffoli_script();
    static const CircuitScript fredkin = detail::make_fredkin_script();
    switch (gate) {
        case GateKind::CNOT: return cnot;
        case GateKind::Toffoli: return toffoli;
        case GateKind::Fredkin: return fredkin;
    }
    return cnot;
}

inline int terminal_path(GateKind gate) { return script(gate).terminal_path; }

/// Runs `script` on an arbitrary input state.
inline Execution execute(const CircuitScript& script, const HybridState& input, const ScatterRules& rules,
                         const CircuitOptions& opts = {}) {
    if (input.spin_count() != spin_count(script.gate)) {
        throw ShapeError(std::string(gate_name(script.gate)) + " needs " + std::to_string(spin_count(script.gate)) +
                         " spin(s)");
    }
    Execution ex{input, {}};
    HybridState& s = ex.final_state;
    for (const Element& step : script.steps) {
        std::visit(
            [&](const auto& e) {
                using E = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<E, element::Pbs>) {
                    s = apply_pbs(s, e.routing);
                } else if constexpr (std::is_same_v<E, element::HwpSigmaZ>) {
                    s = apply_hwp_sigma_z(s, e.path);
                } else if constexpr (std::is_same_v<E, element::HwpHadamard>) {
                    s = apply_hwp_hadamard(s, e.path, opts.hwp);
                } else if constexpr (std::is_same_v<E, element::ElectronHadamard>) {
                    s = apply_electron_hadamard(s, e.nv);
                } else if constexpr (std::is_same_v<E, element::NvScatter>) {
                    s = apply_nv_scatter(s, e.nv, e.path, rules);
                } else if constexpr (std::is_same_v<E, element::Switch> ||
                                     std::is_same_v<E, element::Propagate>) {
                    s = apply_switch(s, e.from, e.to);
                } else {
                    ex.checkpoints.emplace_back(e.name, s);
                }
            },
            step);
    }
    return ex;
}

inline GateResult to_result(const Execution& ex, GateKind gate) {
    GateResult r{ex.final_state.on_path(terminal_path(gate)), 0.0};
    r.survival = norm_sq(r.output);
    return r;
}

/// Runs `gate` on an arbitrary input (photon on mode 0).
inline GateResult propagate(GateKind gate, const HybridState& input, const ScatterRules& rules,
                            const CircuitOptions& opts = {}) {
    return to_result(execute(script(gate), input, rules, opts), gate);
}

inline GateResult run_gate(GateKind gate, const InputAngles& angles, const ScatterRules& rules,
                           const CircuitOptions& opts = {}) {
    return propagate(gate, product_input(angles, gate), rules, opts);
}

inline GateResult run_cnot(const InputAngles& angles, const ScatterRules& rules) {
    return run_gate(GateKind::CNOT, angles, rules);
}

inline GateResult run_toffoli(const InputAngles& angles, const ScatterRules& rules, const CircuitOptions& opts = {}) {
    return run_gate(GateKind::Toffoli, angles, rules, opts);
}

inline GateResult run_fredkin(const InputAngles& angles, const ScatterRules& rules, const CircuitOptions& opts = {}) {
    return run_gate(GateKind::Fredkin, angles, rules, opts);
}

/// Toffoli run with its two intermediate states exposed.
struct ToffoliTrace {
    HybridState after_block_1;  // after PBS1..HWP2 (photon on modes 1 and 8)
    HybridState after_block_2;  // after He..PBS5..He (modes 1 and 12)
    GateResult result;
};

inline ToffoliTrace trace_toffoli(const InputAngles& angles, const ScatterRules& rules,
                                  const CircuitOptions& opts = {}) {
    const Execution ex = execute(script(GateKind::Toffoli), product_input(angles, GateKind::Toffoli), rules, opts);
    return {ex.checkpoint(checkpoint::kToffoliBlock1), ex.checkpoint(checkpoint::kToffoliBlock2),
            to_result(ex, GateKind::Toffoli)};
}

/// Fredkin run with the states after the first and second block passes.
struct FredkinTrace {
    HybridState after_pass_1;  // modes 1 and 4
    HybridState after_pass_2;  // modes 1 and 3
    GateResult result;
};

inline FredkinTrace trace_fredkin(const InputAngles& angles, const ScatterRules& rules,
                                  const CircuitOptions& opts = {}) {
    const Execution ex = execute(script(GateKind::Fredkin), product_input(angles, GateKind::Fredkin), rules, opts);
    return {ex.checkpoint(checkpoint::kFredkinPass1), ex.checkpoint(checkpoint::kFredkinPass2),
            to_result(ex, GateKind::Fredkin)};
}

// Truth tables -----------------------------------------------------------------

/// Photon polarization plus spin values, no path and no amplitude.
struct ComputationalInput {
    Polarization pol = Polarization::R;
    SpinList spins{Spin::Plus};

    friend bool operator==(const ComputationalInput&, const ComputationalInput&) = default;
};

/// Defining action of each gate, independent of any circuit:
/// CNOT flips the spin, Toffoli flips spin 1 iff spin 0 is |->, Fredkin
/// swaps the spins, each only when the photon is L.
inline ComputationalInput ideal_truth_output(GateKind gate, ComputationalInput in) {
    if (static_cast<int>(in.spins.size()) != spin_count(gate)) throw ShapeError("wrong spin count for gate");
    if (in.pol == Polarization::R) return in;
    switch (gate) {
        case GateKind::CNOT: in.spins[0] = flip(in.spins[0]); break;
        case GateKind::Toffoli:
            if (in.spins[0] == Spin::Minus) in.spins[1] = flip(in.spins[1]);
            break;
        case GateKind::Fredkin: std::swap(in.spins[0], in.spins[1]); break;
    }
    return in;
}

/// All 2^(1+spins) computational inputs in a fixed order.
inline std::vector<ComputationalInput> computational_basis(GateKind gate) {
    std::vector<ComputationalInput> out;
    for (Polarization p : {Polarization::R, Polarization::L}) {
        for (Spin a : {Spin::Plus, Spin::Minus}) {
            if (spin_count(gate) == 1) {
                out.push_back({p, {a}});
                continue;
            }
            for (Spin b : {Spin::Plus, Spin::Minus}) out.push_back({p, {a, b}});
        }
    }
    return out;
}

/// Image of a general state under the truth table, placed on the output mode.
/// Amplitudes on other modes are ignored.
inline HybridState ideal_output_state(GateKind gate, const HybridState& input, int input_path = 0) {
    std::vector<Term> out;
    for (const Term& t : input.terms()) {
        if (t.label.path != input_path) continue;
        const ComputationalInput img = ideal_truth_output(gate, {t.label.pol, t.label.spins});
        out.push_back({{img.pol, terminal_path(gate), img.spins}, t.amp});
    }
    return HybridState::from_terms(spin_count(gate), std::move(out));
}

inline HybridState ideal_output_state(GateKind gate, const InputAngles& angles) {
    return ideal_output_state(gate, product_input(angles, gate));
}

}  // namespace nvgates
