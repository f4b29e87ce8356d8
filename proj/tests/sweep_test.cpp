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

#include <sstream>

#include "test_support.hpp"

namespace nvgates {
namespace {

std::string csv_of(const std::vector<MetricsRow>& rows) {
    std::ostringstream os;
    write_csv(os, rows);
    return os.str();
}

TEST(Sweep, GridIncludesBothEnds) {
    SweepConfig c;
    c.x_min = 0.5;
    c.x_max = 10.0;
    c.points = 100;
    const auto xs = sweep_grid(c);
    ASSERT_EQ(xs.size(), 100u);
    EXPECT_EQ(xs.front(), 0.5);
    EXPECT_EQ(xs.back(), 10.0);
    for (std::size_t i = 1; i < xs.size(); ++i) EXPECT_GT(xs[i], xs[i - 1]);
}

TEST(Sweep, ValidatesConfig) {
    SweepConfig c;
    c.points = 1;
    EXPECT_THROW(validate(c), InvalidParameter);
    c = {};
    c.x_max = c.x_min;
    EXPECT_THROW(validate(c), InvalidParameter);
    c = {};
    c.x_min = 0.2;
    EXPECT_THROW(validate(c), InvalidParameter);
    c.allow_weak_coupling = true;
    EXPECT_NO_THROW(validate(c));
    c.x_min = -0.1;
    EXPECT_THROW(validate(c), InvalidParameter);
    c = {};
    c.gates.clear();
    EXPECT_THROW(validate(c), InvalidParameter);
}

TEST(Sweep, RowsAreGateMajorAndDeterministic) {
    SweepConfig c;
    c.x_min = 0.5;
    c.x_max = 4.0;
    c.points = 8;
    c.workers = 1;
    const auto serial = run_sweep(c);
    c.workers = 4;
    const auto parallel = run_sweep(c);
    EXPECT_EQ(csv_of(serial), csv_of(parallel));
    EXPECT_EQ(csv_of(parallel), csv_of(run_sweep(c)));
    ASSERT_EQ(serial.size(), 24u);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].gate, kAllGates[i / 8]);
        EXPECT_EQ(serial[i].g_over_sqrt_kg, sweep_grid(c)[i % 8]);
        EXPECT_LE(std::abs(serial[i].eta_avg_sim - serial[i].eta_avg_closed), 1e-9);
        EXPECT_TRUE(serial[i].converged);
        if (i % 8 != 0) {
            EXPECT_GE(serial[i].f_avg, serial[i - 1].f_avg - 1e-12);
        }
    }
}

TEST(Sweep, CsvFormat) {
    SweepConfig c;
    c.gates = {GateKind::CNOT};
    c.x_min = 0.5;
    c.x_max = 5.0;
    c.points = 2;
    const std::string csv = csv_of(run_sweep(c));
    EXPECT_EQ(csv.rfind("gate,x,r_abs,f_avg,eta_avg_sim,eta_avg_closed\nCNOT,0.5,0,0.75,0.75,0.75\nCNOT,5,", 0), 0u);
    EXPECT_EQ(csv.back(), '\n');
    EXPECT_EQ(format_real(99.0 / 101.0), "0.980198019802");
}

TEST(Sweep, StrongCouplingApproachesIdeal) {
    SweepConfig c;
    c.x_min = 1000.0;
    c.x_max = 2000.0;
    c.points = 2;
    for (const MetricsRow& r : run_sweep(c)) {
        EXPECT_NEAR(r.f_avg, 1.0, 1e-6);
        EXPECT_NEAR(r.eta_avg_sim, 1.0, 1e-6);
        EXPECT_NEAR(r.eta_avg_closed, 1.0, 1e-6);
    }
}

TEST(Verify, FreshBuildPasses) {
    for (const CheckResult& c : run_verification()) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Verify, FlippedPlateFailsCheckpoints) {
    CircuitOptions flipped{HwpConvention::Flipped};
    EXPECT_FALSE(check_toffoli_checkpoints(flipped).passed);
    EXPECT_FALSE(check_fredkin_checkpoints(flipped).passed);
    EXPECT_TRUE(check_truth_table(GateKind::CNOT, flipped).passed);
}

TEST(Verify, CoarseNodesAreFlagged) {
    VerifyOptions v;
    v.averaging = {4, 6};
    EXPECT_FALSE(check_quadrature_convergence(GateKind::Toffoli, v).passed);
}

}  // namespace
}  // namespace nvgates
