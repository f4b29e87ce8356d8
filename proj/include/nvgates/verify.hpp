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

// Self-check suite behind `nvgates verify`. Each check is independent and
// reports a one-line detail on what it measured.

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nvgates/cavity_model.hpp"
#include "nvgates/gate_circuits.hpp"
#include "nvgates/metrics.hpp"
#include "nvgates/reference_states.hpp"
#include "nvgates/sweep.hpp"

namespace nvgates {

inline constexpr double kStateTolerance = 1e-12;
inline constexpr double kEfficiencyTolerance = 1e-9;

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    AveragingSpec averaging{};
    CircuitOptions circuit{};
};

namespace detail {

inline std::string sci(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

/// 5 evenly spaced values per angle over [0, 2pi), offset off the axes.
inline std::vector<InputAngles> angle_grid_5() {
    std::vector<InputAngles> out;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            for (int k = 0; k < 5; ++k) {
                const double step = 2.0 * std::numbers::pi / 5.0;
                out.push_back({0.1 + i * step, 0.2 + j * step, 0.3 + k * step});
            }
        }
    }
    return out;
}

}  // namespace detail

/// Every computational input maps to its truth-table image with unit
/// fidelity and unit survival under the strong-coupling rules.
inline CheckResult check_truth_table(GateKind gate, const CircuitOptions& opts = {}) {
    double worst = 0.0;
    for (const ComputationalInput& in : computational_basis(gate)) {
        const GateResult res = propagate(gate, basis_state({in.pol, 0, in.spins}), ideal_rules(), opts);
        const ComputationalInput img = ideal_truth_output(gate, in);
        const HybridState want = basis_state({img.pol, terminal_path(gate), img.spins});
        const double f = res.survival > 0.0 ? std::norm(overlap(want, res.output)) / res.survival : 0.0;
        worst = std::max({worst, std::abs(1.0 - f), std::abs(1.0 - res.survival)});
    }
    return {"truth_table." + std::string(gate_name(gate)), worst <= kStateTolerance,
            std::to_string(computational_basis(gate).size()) + " inputs, max |1-F|,|1-eta| = " + detail::sci(worst)};
}

/// Intermediate and final states of the three-qubit circuits against their
/// closed forms on a 5x5x5 angle grid.
inline CheckResult check_toffoli_checkpoints(const CircuitOptions& opts = {}) {
    double worst = 0.0;
    for (const InputAngles& a : detail::angle_grid_5()) {
        const ToffoliTrace tr = trace_toffoli(a, ideal_rules(), opts);
        worst = std::max({worst, max_abs_diff(tr.after_block_1, reference::toffoli_after_block_1(a)),
                          max_abs_diff(tr.after_block_2, reference::toffoli_after_block_2(a)),
                          max_abs_diff(tr.result.output, reference::toffoli_output(a))});
    }
    return {"checkpoints.Toffoli", worst <= kStateTolerance, "125 inputs, max amplitude error " + detail::sci(worst)};
}

inline CheckResult check_fredkin_checkpoints(const CircuitOptions& opts = {}) {
    double worst = 0.0;
    for (const InputAngles& a : detail::angle_grid_5()) {
        const FredkinTrace tr = trace_fredkin(a, ideal_rules(), opts);
        worst = std::max({worst, max_abs_diff(tr.after_pass_1, reference::fredkin_after_pass_1(a)),
                          max_abs_diff(tr.after_pass_2, reference::fredkin_after_pass_2(a)),
                          max_abs_diff(tr.result.output, reference::fredkin_output(a))});
    }
    return {"checkpoints.Fredkin", worst <= kStateTolerance, "125 inputs, max amplitude error " + detail::sci(worst)};
}

/// Finite-|r| CNOT output against its closed form at 25 seeded random points.
inline CheckResult check_cnot_realistic(std::uint64_t seed = 2016) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi), mag(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
        const InputAngles a{angle(rng), angle(rng), 0.0};
        const double r = mag(rng);
        worst = std::max(worst, max_abs_diff(run_cnot(a, rules_from_magnitude(r)).output,
                                             reference::cnot_realistic_output(a, r)));
    }
    return {"cnot_realistic_output", worst <= kStateTolerance, "25 samples, max amplitude error " + detail::sci(worst)};
}

/// Simulated average efficiency equals the closed form on |r| = 0, 0.1, ..., 1.
inline CheckResult check_efficiency_closed_form(GateKind gate, const VerifyOptions& v = {}) {
    double worst = 0.0;
    for (int k = 0; k <= 10; ++k) {
        const double r = k / 10.0;
        const double sim = GateResponse(gate, rules_from_magnitude(r), v.circuit)
                               .average_on_grid(v.averaging.nodes_per_angle)[1];
        worst = std::max(worst, std::abs(sim - average_efficiency_closed_form(gate, r)));
    }
    return {"efficiency_closed_form." + std::string(gate_name(gate)), worst <= kEfficiencyTolerance,
            "11 |r| values, max deviation " + detail::sci(worst)};
}

inline CheckResult check_ideal_fidelity(GateKind gate, const VerifyOptions& v = {}) {
    const double f = average_metrics(gate, ideal_rules(), v.averaging, v.circuit).fidelity.value;
    return {"ideal_fidelity." + std::string(gate_name(gate)), std::abs(1.0 - f) <= kStateTolerance,
            "|1 - F_avg| = " + detail::sci(std::abs(1.0 - f))};
}

/// Node doubling from the configured start reaches the convergence
/// tolerance within the allowed refinements at |r| = 0, 0.5, 0.98.
inline CheckResult check_quadrature_convergence(GateKind gate, const VerifyOptions& v = {}) {
    bool ok = true;
    std::string detail;
    for (double r : {0.0, 0.5, 0.98}) {
        const AverageMetrics m = average_metrics(gate, rules_from_magnitude(r), v.averaging, v.circuit);
        ok = ok && m.fidelity.converged && m.efficiency.converged;
        if (!detail.empty()) detail += ", ";
        detail += "|r|=" + format_real(r) + ": N=" + std::to_string(m.fidelity.nodes_per_angle) + " dF=" +
                  detail::sci(m.fidelity.last_change);
    }
    return {"quadrature_convergence." + std::string(gate_name(gate)), ok, detail};
}

inline std::vector<CheckResult> run_verification(const VerifyOptions& v = {}) {
    std::vector<CheckResult> out;
    for (GateKind g : kAllGates) out.push_back(check_truth_table(g, v.circuit));
    out.push_back(check_toffoli_checkpoints(v.circuit));
    out.push_back(check_fredkin_checkpoints(v.circuit));
    out.push_back(check_cnot_realistic());
    for (GateKind g : kAllGates) out.push_back(check_efficiency_closed_form(g, v));
    for (GateKind g : kAllGates) out.push_back(check_ideal_fidelity(g, v));
    for (GateKind g : kAllGates) out.push_back(check_quadrature_convergence(g, v));
    return out;
}

}  // namespace nvgates
