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


// Runs a Toffoli gate at a finite coupling strength and prints the output
// state, its fidelity against the ideal gate, and the survival probability.

#include <cstdio>
#include <numbers>

#include "nvgates/nvgates.hpp"

int main() {
    using namespace nvgates;
    const InputAngles angles{std::numbers::pi / 3, std::numbers::pi / 4, std::numbers::pi / 6};
    const ScatterRules rules = make_scatter_rules(CavityParams::resonant(2.0));

    const GateResult res = run_toffoli(angles, rules);
    std::printf("|r| = %.6f\n", rules.r_matched);
    std::printf("output = %s\n", to_string(res.output, 4).c_str());
    std::printf("F = %.6f  eta = %.6f\n", fidelity(ideal_output_state(GateKind::Toffoli, angles), res.output),
                efficiency(res));

    const AverageMetrics avg = average_metrics(GateKind::Toffoli, rules);
    std::printf("F_avg = %.9f  eta_avg = %.9f\n", avg.fidelity.value, avg.efficiency.value);
}
