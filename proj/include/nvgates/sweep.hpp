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

// Coupling-strength sweeps of average fidelity and efficiency, and their CSV
// form: header "gate,x,r_abs,f_avg,eta_avg_sim,eta_avg_closed", one row per
// (gate, x) in gate-major order, reals printed with 12 significant digits.

#include <algorithm>
#include <cmath>
#include <atomic>
#include <cstdio>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "nvgates/cavity_model.hpp"
#include "nvgates/error.hpp"
#include "nvgates/gate_kind.hpp"
#include "nvgates/metrics.hpp"

namespace nvgates {

/// Smallest g/sqrt(kappa*gamma) with r >= 0; below it the |r| folding applies.
inline constexpr double kWeakCouplingThreshold = 0.5;

inline constexpr const char* kCsvHeader = "gate,x,r_abs,f_avg,eta_avg_sim,eta_avg_closed";

struct SweepConfig {
    std::vector<GateKind> gates{GateKind::CNOT, GateKind::Toffoli, GateKind::Fredkin};
    double x_min = 0.5;
    double x_max = 10.0;
    int points = 100;
    AveragingSpec averaging{};
    bool allow_weak_coupling = false;
    unsigned workers = 0;  // 0: one per hardware thread
};

inline void validate(const SweepConfig& c) {
    if (c.gates.empty()) throw InvalidParameter("at least one gate is required");
    if (!std::isfinite(c.x_min) || c.x_min < 0.0) throw InvalidParameter("x_min must be finite and >= 0");
    if (!std::isfinite(c.x_max) || !(c.x_max > c.x_min)) throw InvalidParameter("x_max must exceed x_min");
    if (c.points < 2) throw InvalidParameter("points must be at least 2");
    if (c.x_min < kWeakCouplingThreshold && !c.allow_weak_coupling) {
        throw InvalidParameter("x_min below 0.5 needs --allow-weak-coupling");
    }
    validate(c.averaging);
}

/// Evenly spaced x values, both ends included.
inline std::vector<double> sweep_grid(const SweepConfig& c) {
    std::vector<double> xs(static_cast<std::size_t>(c.points));
    for (int k = 0; k < c.points; ++k) {
        xs[static_cast<std::size_t>(k)] =
            k == c.points - 1 ? c.x_max : c.x_min + (c.x_max - c.x_min) * k / (c.points - 1);
    }
    return xs;
}

/// Evaluates every (gate, x) point on a worker pool. Rows are written into
/// fixed slots, so the result does not depend on scheduling.
inline std::vector<MetricsRow> run_sweep(const SweepConfig& c) {
    validate(c);
    const std::vector<double> xs = sweep_grid(c);
    const std::size_t total = c.gates.size() * xs.size();
    std::vector<MetricsRow> rows(total);

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            rows[i] = compute_metrics_row(c.gates[i / xs.size()], xs[i % xs.size()], c.averaging);
        }
    };
    unsigned n = c.workers != 0 ? c.workers : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, total));
    if (n <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
    }
    return rows;
}

inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string csv_row(const MetricsRow& r) {
    return std::string(gate_name(r.gate)) + "," + format_real(r.g_over_sqrt_kg) + "," + format_real(r.r_abs) + "," +
           format_real(r.f_avg) + "," + format_real(r.eta_avg_sim) + "," + format_real(r.eta_avg_closed);
}

inline void write_csv(std::ostream& os, const std::vector<MetricsRow>& rows) {
    os << kCsvHeader << '\n';
    for (const MetricsRow& r : rows) os << csv_row(r) << '\n';
}

}  // namespace nvgates
