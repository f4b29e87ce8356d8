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


#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "nvgates/reference_states.hpp"
#include "test_support.hpp"

namespace nvgates {
namespace {

constexpr double kTol = 1e-12;

std::vector<InputAngles> grid_5x5x5() {
    std::vector<InputAngles> out;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) out.push_back({0.37 + 1.2 * i, -0.5 + 1.3 * j, 0.11 + 1.25 * k});
    return out;
}

// Truth-table action written as explicit label tables.
TEST(GateCircuits, TruthTables) {
    using enum Polarization;
    using enum Spin;
    struct Row {
        GateKind gate;
        ComputationalInput in, out;
    };
    const Row rows[] = {
        {GateKind::CNOT, {R, {Plus}}, {R, {Plus}}},
        {GateKind::CNOT, {R, {Minus}}, {R, {Minus}}},
        {GateKind::CNOT, {L, {Plus}}, {L, {Minus}}},
        {GateKind::CNOT, {L, {Minus}}, {L, {Plus}}},
        {GateKind::Toffoli, {R, {Minus, Minus}}, {R, {Minus, Minus}}},
        {GateKind::Toffoli, {L, {Plus, Minus}}, {L, {Plus, Minus}}},
        {GateKind::Toffoli, {L, {Minus, Plus}}, {L, {Minus, Minus}}},
        {GateKind::Toffoli, {L, {Minus, Minus}}, {L, {Minus, Plus}}},
        {GateKind::Fredkin, {R, {Plus, Minus}}, {R, {Plus, Minus}}},
        {GateKind::Fredkin, {L, {Plus, Minus}}, {L, {Minus, Plus}}},
        {GateKind::Fredkin, {L, {Minus, Plus}}, {L, {Plus, Minus}}},
        {GateKind::Fredkin, {L, {Minus, Minus}}, {L, {Minus, Minus}}},
    };
    for (const Row& row : rows) EXPECT_EQ(ideal_truth_output(row.gate, row.in), row.out);

    for (GateKind g : kAllGates) {
        const auto basis = computational_basis(g);
        EXPECT_EQ(basis.size(), g == GateKind::CNOT ? 4u : 8u);
        for (const ComputationalInput& in : basis) {
            const GateResult res = propagate(g, basis_state({in.pol, 0, in.spins}), ideal_rules());
            const ComputationalInput img = ideal_truth_output(g, in);
            const HybridState want = basis_state({img.pol, terminal_path(g), img.spins});
            EXPECT_NEAR(res.survival, 1.0, kTol) << gate_name(g);
            EXPECT_NEAR(fidelity(want, res.output), 1.0, kTol) << gate_name(g);
        }
    }
}

TEST(GateCircuits, CnotOutputMatchesClosedForm) {
    for (const InputAngles& a : grid_5x5x5()) {
        const GateResult res = run_cnot(a, ideal_rules());
        EXPECT_LE(max_abs_diff(res.output, reference::cnot_ideal_output(a)), kTol);
    }
}

TEST(GateCircuits, ToffoliCheckpoints) {
    for (const InputAngles& a : grid_5x5x5()) {
        const ToffoliTrace t = trace_toffoli(a, ideal_rules());
        ASSERT_LE(max_abs_diff(t.after_block_1, reference::toffoli_after_block_1(a)), kTol);
        ASSERT_LE(max_abs_diff(t.after_block_2, reference::toffoli_after_block_2(a)), kTol);
        ASSERT_LE(max_abs_diff(t.result.output, reference::toffoli_output(a)), kTol);
        ASSERT_NEAR(t.result.survival, 1.0, kTol);
    }
}

TEST(GateCircuits, FredkinCheckpoints) {
    for (const InputAngles& a : grid_5x5x5()) {
        const FredkinTrace t = trace_fredkin(a, ideal_rules());
        ASSERT_LE(max_abs_diff(t.after_pass_1, reference::fredkin_after_pass_1(a)), kTol);
        ASSERT_LE(max_abs_diff(t.after_pass_2, reference::fredkin_after_pass_2(a)), kTol);
        ASSERT_LE(max_abs_diff(t.result.output, reference::fredkin_output(a)), kTol);
        ASSERT_NEAR(t.result.survival, 1.0, kTol);
    }
}

TEST(GateCircuits, FlippedPlateBreaksToffoliCheckpoint) {
    const InputAngles a{0.7, 0.9, 0.3};
    const ToffoliTrace t = trace_toffoli(a, ideal_rules(), {HwpConvention::Flipped});
    EXPECT_FALSE(equal_up_to_phase(t.after_block_1, reference::toffoli_after_block_1(a), 1e-6));
}

TEST(GateCircuits, RealisticCnotMatchesClosedForm) {
    std::mt19937_64 rng(2016);
    std::uniform_real_distribution<double> ang(0.0, testing::kTwoPi), mag(0.0, 1.0);
    for (int i = 0; i < 25; ++i) {
        const InputAngles a{ang(rng), ang(rng), 0.0};
        const double r = mag(rng);
        const GateResult res = run_cnot(a, rules_from_magnitude(r));
        EXPECT_LE(max_abs_diff(res.output, reference::cnot_realistic_output(a, r)), kTol);
        EXPECT_NEAR(res.survival, norm_sq(reference::cnot_realistic_output(a, r)), kTol);
    }
}

HybridState reinject(const GateResult& r, GateKind g) { return apply_switch(r.output, terminal_path(g), 0); }

TEST(GateCircuits, GatesAreInvolutions) {
    std::mt19937_64 rng(9);
    for (GateKind g : kAllGates) {
        for (int i = 0; i < 50; ++i) {
            const HybridState in = product_input(testing::random_angles(rng), g);
            const GateResult once = propagate(g, in, ideal_rules());
            const GateResult twice = propagate(g, reinject(once, g), ideal_rules());
            ASSERT_LE(max_abs_diff(reinject(twice, g), in), kTol) << gate_name(g);
        }
    }
}

TEST(GateCircuits, LinearInInput) {
    std::mt19937_64 rng(10);
    const ScatterRules rules = rules_from_magnitude(0.55);
    for (GateKind g : kAllGates) {
        for (int i = 0; i < 20; ++i) {
            const HybridState a = product_input(testing::random_angles(rng), g);
            const HybridState b = product_input(testing::random_angles(rng), g);
            const Complex ca{0.3, 0.8}, cb{-1.1, 0.2};
            const HybridState lhs = propagate(g, a * ca + b * cb, rules).output;
            const HybridState rhs = propagate(g, a, rules).output * ca + propagate(g, b, rules).output * cb;
            ASSERT_LE(max_abs_diff(lhs, rhs), kTol) << gate_name(g);
        }
    }
}

TEST(GateCircuits, LossyRulesNeverGainNorm) {
    std::mt19937_64 rng(12);
    for (GateKind g : kAllGates) {
        for (double r : {0.0, 0.3, 0.9}) {
            const InputAngles a = testing::random_angles(rng);
            const Execution ex = execute(script(g), product_input(a, g), rules_from_magnitude(r));
            const GateResult res = to_result(ex, g);
            EXPECT_LE(res.survival, 1.0 + kTol);
            EXPECT_LE(norm_sq(ex.final_state), 1.0 + kTol);
            EXPECT_NEAR(res.survival, norm_sq(res.output), kTol);
            for (const Term& t : res.output.terms()) EXPECT_EQ(t.label.path, terminal_path(g));
        }
    }
}

TEST(GateCircuits, IdealOutputFromTruthTable) {
    std::mt19937_64 rng(13);
    for (GateKind g : kAllGates) {
        const InputAngles a = testing::random_angles(rng);
        EXPECT_TRUE(equal_up_to_phase(ideal_output_state(g, a), run_gate(g, a, ideal_rules()).output, kTol));
    }
}

TEST(GateCircuits, RejectsWrongSpinCount) {
    EXPECT_THROW(propagate(GateKind::Toffoli, product_input({0.1, 0.2, 0.3}, GateKind::CNOT), ideal_rules()),
                 ShapeError);
    const Execution ex = execute(script(GateKind::Toffoli), product_input({0.1, 0.2, 0.3}, GateKind::Toffoli),
                                 ideal_rules());
    EXPECT_THROW(ex.checkpoint("no.such.checkpoint"), std::out_of_range);
}

}  // namespace
}  // namespace nvgates
