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

#include <cmath>
#include <complex>
#include <limits>

#include "nvgates/cavity_model.hpp"

namespace nvgates {
namespace {

// Input-output reflection written out independently of the library.
Complex oracle_reflection(double g, double k, double y, double dc, double d0) {
    const Complex i{0.0, 1.0};
    return ((i * dc - k / 2) * (i * d0 + y / 2) + g * g) / ((i * dc + k / 2) * (i * d0 + y / 2) + g * g);
}

TEST(CavityModel, ResonantReflectionAnchors) {
    EXPECT_NEAR(resonant_reflection(5.0, 1.0, 1.0), 99.0 / 101.0, 1e-15);
    EXPECT_NEAR(resonant_reflection(0.5, 1.0, 1.0), 0.0, 1e-15);
    EXPECT_NEAR(resonant_reflection(0.0, 1.0, 1.0), -1.0, 1e-15);
    EXPECT_EQ(resonant_reflection(std::numeric_limits<double>::infinity(), 1.0, 1.0), 1.0);
}

TEST(CavityModel, RatioScalingOnlyDependsOnX) {
    // g = x sqrt(k y) gives the same r for any k, y.
    for (double x : {0.3, 1.0, 2.5}) {
        for (auto [k, y] : {std::pair{1.0, 1.0}, {4.0, 0.25}, {10.0, 3.0}}) {
            EXPECT_NEAR(resonant_reflection(x * std::sqrt(k * y), k, y), resonant_reflection(x, 1.0, 1.0), 1e-14);
        }
    }
}

TEST(CavityModel, GeneralFormulaMatchesOracle) {
    for (double g : {0.0, 0.3, 1.7}) {
        for (double dc : {-0.4, 0.0, 0.9}) {
            for (double d0 : {-1.1, 0.0, 0.2}) {
                CavityParams p;
                p.g = g;
                p.kappa = 1.3;
                p.gamma = 0.6;
                p.omega_p = 2.0;
                p.omega_c = p.omega_p + dc;
                p.omega_0 = p.omega_p + d0;
                const Complex r = reflection_coefficient(p);
                EXPECT_LT(std::abs(r - oracle_reflection(g, 1.3, 0.6, dc, d0)), 1e-14);
                EXPECT_LE(std::abs(r), 1.0 + 1e-14);
            }
        }
    }
}

TEST(CavityModel, ResonantAgreesWithGeneral) {
    for (double x : {0.0, 0.2, 0.5, 1.0, 5.0, 40.0}) {
        const Complex r = reflection_coefficient(CavityParams::resonant(x));
        EXPECT_NEAR(r.real(), resonant_reflection(x, 1.0, 1.0), 1e-14);
        EXPECT_NEAR(r.imag(), 0.0, 1e-14);
    }
}

TEST(CavityModel, MagnitudeMonotoneAboveHalf) {
    double prev = -1.0;
    for (int k = 0; k <= 200; ++k) {
        const double x = 0.5 + 0.05 * k;
        const double r = reflection_magnitude(x);
        EXPECT_GE(r, prev);
        EXPECT_LE(r, 1.0);
        prev = r;
    }
}

TEST(CavityModel, ScatterRules) {
    const ScatterRules s = make_scatter_rules(CavityParams::resonant(5.0));
    EXPECT_NEAR(s.r_matched, 99.0 / 101.0, 1e-15);
    EXPECT_EQ(s.r_mismatched, -1.0);
    EXPECT_EQ(make_scatter_rules(CavityParams::resonant(std::numeric_limits<double>::infinity())), ideal_rules());
    EXPECT_NEAR(make_scatter_rules(CavityParams::resonant(0.5)).r_matched, 0.0, 1e-15);
    // Weak coupling folds onto |r|.
    EXPECT_NEAR(make_scatter_rules(CavityParams::resonant(0.25)).r_matched, 0.6, 1e-15);
}

TEST(CavityModel, RejectsInvalidInput) {
    CavityParams p = CavityParams::resonant(1.0);
    p.kappa = 0.0;
    EXPECT_THROW(validate(p), InvalidParameter);
    p = CavityParams::resonant(-1.0);
    EXPECT_THROW(validate(p), InvalidParameter);
    p = CavityParams::resonant(std::nan(""));
    EXPECT_THROW(validate(p), InvalidParameter);
    p = CavityParams::resonant(1.0);
    p.omega_p = 0.1;
    EXPECT_THROW(make_scatter_rules(p), InvalidParameter);
    EXPECT_THROW(rules_from_magnitude(1.5), InvalidParameter);
    EXPECT_THROW(rules_from_magnitude(-0.1), InvalidParameter);
}

}  // namespace
}  // namespace nvgates
