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


// Rendered output states compared byte-for-byte with files under golden/.
// Set NVGATES_UPDATE_GOLDEN=1 to rewrite them.

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "test_support.hpp"

namespace nvgates {
namespace {

constexpr double kPi = std::numbers::pi;

void check_golden(const std::string& name, const std::string& text) {
    const std::string path = std::string(NVGATES_GOLDEN_DIR) + "/" + name + ".txt";
    if (const char* u = std::getenv("NVGATES_UPDATE_GOLDEN"); u != nullptr && std::string(u) == "1") {
        std::ofstream(path, std::ios::binary) << text;
        return;
    }
    std::ifstream in(path, std::ios::binary);
    ASSERT_TRUE(in) << "missing golden file " << path;
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), text) << path;
}

std::string render(GateKind g, const InputAngles& a, const ScatterRules& rules) {
    const GateResult res = run_gate(g, a, rules);
    return to_string(product_input(a, g), 6) + "\n" + to_string(res.output, 6) + "\n";
}

TEST(Golden, CnotIdeal) { check_golden("cnot_ideal", render(GateKind::CNOT, {kPi / 3, kPi / 6, 0}, ideal_rules())); }

TEST(Golden, CnotHalfReflection) {
    check_golden("cnot_r0.5", render(GateKind::CNOT, {kPi / 3, kPi / 6, 0}, rules_from_magnitude(0.5)));
}

TEST(Golden, ToffoliIdeal) {
    check_golden("toffoli_ideal", render(GateKind::Toffoli, {kPi / 3, kPi / 4, kPi / 6}, ideal_rules()));
}

TEST(Golden, ToffoliWeak) {
    check_golden("toffoli_r0", render(GateKind::Toffoli, {kPi / 3, kPi / 4, kPi / 6}, rules_from_magnitude(0.0)));
}

TEST(Golden, FredkinIdeal) {
    check_golden("fredkin_ideal", render(GateKind::Fredkin, {kPi / 3, kPi / 4, kPi / 6}, ideal_rules()));
}

TEST(Golden, FredkinCheckpoints) {
    const FredkinTrace t = trace_fredkin({kPi / 3, kPi / 4, kPi / 6}, ideal_rules());
    check_golden("fredkin_passes", to_string(t.after_pass_1, 6) + "\n" + to_string(t.after_pass_2, 6) + "\n");
}

TEST(Golden, EmptyStateRendersAsZero) { EXPECT_EQ(to_string(HybridState(1)), "0"); }

}  // namespace
}  // namespace nvgates
