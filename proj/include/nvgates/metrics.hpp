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

// Fidelity and efficiency of the gates, pointwise and averaged uniformly over
// the input angles alpha, beta (, delta) in [0, 2pi).
//
// Averages use the periodic midpoint rule with N nodes per angle, doubled
// until two successive levels agree to kConvergenceTolerance. Efficiency
// integrands are trigonometric polynomials of degree 2 per angle, so any
// N >= 3 is exact. Fidelity is a ratio of such polynomials; its alpha
// average is taken in closed form (the alpha dependence is a degree-2
// trigonometric polynomial over a positive one), leaving the midpoint rule
// for beta (and delta). Convergence is geometric but slow when |r| is small,
// because the exit probability then nearly vanishes for some inputs.

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nvgates/cavity_model.hpp"
#include "nvgates/error.hpp"
#include "nvgates/gate_circuits.hpp"
#include "nvgates/hybrid_state.hpp"

namespace nvgates {

inline constexpr double kConvergenceTolerance = 1e-12;

struct AveragingSpec {
    int nodes_per_angle = 32;
    /// Maximum number of node doublings after the first level.
    int max_refinements = 6;
};

inline void validate(const AveragingSpec& s) {
    if (s.nodes_per_angle < 4) throw InvalidParameter("nodes_per_angle must be at least 4");
    if (s.max_refinements < 0 || s.max_refinements > 10) throw InvalidParameter("max_refinements must be in [0, 10]");
}

struct QuadratureReport {
    double value = 0.0;
    int nodes_per_angle = 0;     // level that produced `value`
    double last_change = 0.0;    // |Q(N) - Q(N/2)|, NaN before any doubling
    bool converged = false;      // last_change <= kConvergenceTolerance
};

struct AverageMetrics {
    QuadratureReport fidelity;
    QuadratureReport efficiency;
};

/// |<ideal|realistic>|^2 / <realistic|realistic>; `ideal` must be normalized.
inline double fidelity(const HybridState& ideal, const HybridState& realistic) {
    return std::norm(overlap(ideal, normalize(realistic)));
}

/// Probability that the photon leaves through the output mode.
inline double efficiency(const GateResult& result) { return result.survival; }

/// Average efficiency as a polynomial in |r|.
inline double average_efficiency_closed_form(GateKind gate, double r_abs) {
    if (!std::isfinite(r_abs) || r_abs < 0.0 || r_abs > 1.0) throw InvalidParameter("|r| must lie in [0, 1]");
    const double r = r_abs;
    switch (gate) {
        case GateKind::CNOT: return (3.0 + r * r) / 4.0;
        case GateKind::Toffoli: {
            const double r2 = r * r;
            return (3.0 + r2) * (27.0 + 2.0 * r + 4.0 * r2 - 2.0 * r2 * r + r2 * r2) / 128.0;
        }
        case GateKind::Fredkin: {
            static constexpr double c[] = {1361, -156, 286, 28, 239, 152, 148, -24, -1, 4, 14, -4, 1};
            double acc = 0.0;
            for (int k = 12; k >= 0; --k) acc = acc * r + c[k];
            return acc / 2048.0;
        }
    }
    return 0.0;
}

/// Running sum with Neumaier compensation; order-dependent but deterministic.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Linear map of one gate restricted to the output mode, tabulated on the
/// computational basis (photon polarization major, then spins as in
/// computational_basis()). Built by running the circuit script once per
/// basis input; the ideal map is the gate's truth table.
class GateResponse {
public:
    GateResponse(GateKind gate, const ScatterRules& rules, const CircuitOptions& opts = {})
        : gate_(gate), spins_(spin_count(gate)), dim_(2 << spins_) {
        real_.assign(static_cast<std::size_t>(dim_ * dim_), Complex{});
        ideal_.assign(static_cast<std::size_t>(dim_ * dim_), Complex{});
        const auto basis = computational_basis(gate);
        for (int col = 0; col < dim_; ++col) {
            const auto& in = basis[static_cast<std::size_t>(col)];
            const HybridState ket = basis_state({in.pol, 0, in.spins});
            const GateResult res = propagate(gate, ket, rules, opts);
            for (const Term& t : res.output.terms()) at(real_, row_of(t.label), col) = t.amp;
            const ComputationalInput img = ideal_truth_output(gate, in);
            at(ideal_, row_of({img.pol, terminal_path(gate), img.spins}), col) = 1.0;
        }
    }

    GateKind gate() const { return gate_; }

    /// Fidelity and efficiency averaged on the full N-per-angle midpoint grid.
    std::array<double, 2> average_on_grid(int n) const {
        const Nodes nd(n);
        CompensatedSum fid, eff;
        for_each_spin_node(nd, [&](const Block& b) {
            CompensatedSum f_row, e_row;
            for (int ia = 0; ia < n; ++ia) {
                const auto [ov, nr] = b.at(nd.c[ia], nd.s[ia]);
                e_row.add(nr);
                // Inputs the gate never lets through contribute their limit 0.
                f_row.add(nr > kTinyNorm ? std::norm(ov) / nr : 0.0);
            }
            fid.add(f_row.value());
            eff.add(e_row.value());
        });
        const double count = static_cast<double>(n) * spin_nodes(n);
        return {fid.value() / count, eff.value() / count};
    }

    /// Fidelity average with alpha integrated exactly and N midpoint nodes
    /// per remaining angle.
    double fidelity_alpha_exact(int n) const {
        const Nodes nd(n);
        CompensatedSum fid;
        for_each_spin_node(nd, [&](const Block& b) {
            const double v = b.alpha_mean_fidelity();
            if (!std::isnan(v)) {
                fid.add(v);
                return;
            }
            // Exit probability touches zero for some alpha: fall back to nodes.
            CompensatedSum row;
            for (int ia = 0; ia < n; ++ia) {
                const auto [ov, nr] = b.at(nd.c[ia], nd.s[ia]);
                row.add(nr > kTinyNorm ? std::norm(ov) / nr : 0.0);
            }
            fid.add(row.value() / n);
        });
        return fid.value() / static_cast<double>(spin_nodes(n));
    }

    /// Output amplitudes (real, ideal) for an arbitrary computational-basis
    /// coefficient vector, in row order.
    std::vector<Complex> apply_real(const std::vector<Complex>& v) const { return matvec(real_, v); }
    std::vector<Complex> apply_ideal(const std::vector<Complex>& v) const { return matvec(ideal_, v); }

private:
    static constexpr double kTinyNorm = 1e-300;
    static constexpr double kDegenerateRatio = 1e-6;

    // Inner products of the images X_p = real|p>|chi>, Y_p = ideal|p>|chi>
    // for one spin-angle node. With c = cos(alpha), s = sin(alpha):
    //   <ideal|real> = c^2 o_rr + cs (o_rl + o_lr) + s^2 o_ll
    //   <real|real>  = c^2 n_rr + 2cs n_rl + s^2 n_ll
    struct Block {
        Complex o_rr, o_rl, o_lr, o_ll;  // <Y_p|X_q>
        double n_rr = 0, n_rl = 0, n_ll = 0;

        std::pair<Complex, double> at(double c, double s) const {
            const double cc = c * c, cs = c * s, ss = s * s;
            return {cc * o_rr + cs * (o_rl + o_lr) + ss * o_ll, cc * n_rr + 2.0 * cs * n_rl + ss * n_ll};
        }

        // Mean over alpha of |<ideal|real>|^2 / <real|real>. In theta = 2 alpha
        // the numerator is sum_m c_m e^{im theta} (|m| <= 2) and the
        // denominator a + rho cos(theta - phi), whose Fourier coefficients are
        // (-lambda)^|m| e^{-im phi} / sqrt(a^2 - rho^2). NaN when the
        // denominator (nearly) vanishes somewhere.
        double alpha_mean_fidelity() const {
            const Complex i{0.0, 1.0};
            const Complex p = (o_rr + o_ll) / 2.0;
            const Complex q = (o_rr - o_ll) / 2.0;
            const Complex h = (o_rl + o_lr) / 2.0;
            const Complex up = (q - i * h) / 2.0;  // e^{+i theta}
            const Complex dn = (q + i * h) / 2.0;  // e^{-i theta}
            const double a = (n_rr + n_ll) / 2.0;
            const double rho = std::hypot((n_rr - n_ll) / 2.0, n_rl);
            const double phi = std::atan2(n_rl, (n_rr - n_ll) / 2.0);
            const double disc = std::sqrt(std::max(0.0, (a - rho) * (a + rho)));
            if (!(disc > kDegenerateRatio * a)) return std::nan("");
            const double lambda = rho / (a + disc);
            const double c0 = std::norm(p) + std::norm(up) + std::norm(dn);
            const Complex c1 = std::conj(p) * up + std::conj(dn) * p;
            const Complex c2 = std::conj(dn) * up;
            const Complex e1 = std::polar(1.0, phi);
            return (c0 - 2.0 * lambda * (c1 * e1).real() + 2.0 * lambda * lambda * (c2 * e1 * e1).real()) / disc;
        }
    };

    struct Nodes {
        std::vector<double> c, s;
        explicit Nodes(int n) : c(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n)) {
            for (int j = 0; j < n; ++j) {
                const double t = 2.0 * std::numbers::pi * (j + 0.5) / n;
                c[static_cast<std::size_t>(j)] = std::cos(t);
                s[static_cast<std::size_t>(j)] = std::sin(t);
            }
        }
    };

    int spin_nodes(int n) const { return spins_ == 2 ? n * n : n; }

    // Calls fn(Block) for every (beta[, delta]) node in a fixed order.
    template <typename Fn>
    void for_each_spin_node(const Nodes& nd, Fn&& fn) const {
        const int n = static_cast<int>(nd.c.size());
        const int delta_nodes = spins_ == 2 ? n : 1;
        std::vector<Complex> chi(static_cast<std::size_t>(dim_ / 2));
        for (int ib = 0; ib < n; ++ib) {
            const double cb = nd.c[static_cast<std::size_t>(ib)], sb = nd.s[static_cast<std::size_t>(ib)];
            for (int id = 0; id < delta_nodes; ++id) {
                if (spins_ == 1) {
                    chi[0] = cb;
                    chi[1] = sb;
                } else {
                    const double cd = nd.c[static_cast<std::size_t>(id)], sd = nd.s[static_cast<std::size_t>(id)];
                    chi[0] = cb * cd;
                    chi[1] = cb * sd;
                    chi[2] = sb * cd;
                    chi[3] = sb * sd;
                }
                fn(block_scalars(chi));
            }
        }
    }

    int row_of(const BasisLabel& l) const {
        int spin_index = 0;
        for (Spin sp : l.spins) spin_index = 2 * spin_index + (sp == Spin::Minus ? 1 : 0);
        return (l.pol == Polarization::L ? dim_ / 2 : 0) + spin_index;
    }

    Complex& at(std::vector<Complex>& m, int row, int col) const {
        return m[static_cast<std::size_t>(row * dim_ + col)];
    }
    Complex at(const std::vector<Complex>& m, int row, int col) const {
        return m[static_cast<std::size_t>(row * dim_ + col)];
    }

    std::vector<Complex> matvec(const std::vector<Complex>& m, const std::vector<Complex>& v) const {
        if (static_cast<int>(v.size()) != dim_) throw ShapeError("coefficient vector has wrong dimension");
        std::vector<Complex> out(static_cast<std::size_t>(dim_));
        for (int r = 0; r < dim_; ++r) {
            Complex acc{};
            for (int c = 0; c < dim_; ++c) acc += at(m, r, c) * v[static_cast<std::size_t>(c)];
            out[static_cast<std::size_t>(r)] = acc;
        }
        return out;
    }

    // Images of |R>|chi> and |L>|chi> under both maps, reduced to the inner
    // products the alpha sum needs.
    Block block_scalars(const std::vector<Complex>& chi) const {
        const int half = dim_ / 2;
        std::array<Complex, 8> xr{}, xl{}, yr{}, yl{};
        for (int row = 0; row < dim_; ++row) {
            Complex a{}, b{}, c{}, d{};
            for (int k = 0; k < half; ++k) {
                const Complex x = chi[static_cast<std::size_t>(k)];
                a += at(real_, row, k) * x;
                b += at(real_, row, half + k) * x;
                c += at(ideal_, row, k) * x;
                d += at(ideal_, row, half + k) * x;
            }
            const auto i = static_cast<std::size_t>(row);
            xr[i] = a;
            xl[i] = b;
            yr[i] = c;
            yl[i] = d;
        }
        Block blk{};
        for (std::size_t i = 0; i < static_cast<std::size_t>(dim_); ++i) {
            blk.o_rr += std::conj(yr[i]) * xr[i];
            blk.o_rl += std::conj(yr[i]) * xl[i];
            blk.o_lr += std::conj(yl[i]) * xr[i];
            blk.o_ll += std::conj(yl[i]) * xl[i];
            blk.n_rr += std::norm(xr[i]);
            blk.n_rl += (std::conj(xr[i]) * xl[i]).real();
            blk.n_ll += std::norm(xl[i]);
        }
        return blk;
    }

    GateKind gate_;
    int spins_;
    int dim_;
    std::vector<Complex> real_;   // dim x dim, row-major
    std::vector<Complex> ideal_;
};

/// Averages of fidelity and efficiency, doubling the node count until both
/// change by at most kConvergenceTolerance or max_refinements is reached.
inline AverageMetrics average_metrics(GateKind gate, const ScatterRules& rules, const AveragingSpec& spec = {},
                                      const CircuitOptions& opts = {}) {
    validate(spec);
    const GateResponse response(gate, rules, opts);
    AverageMetrics out;
    int n = spec.nodes_per_angle;
    double f = response.fidelity_alpha_exact(n);
    double e = response.average_on_grid(n)[1];
    out.fidelity = {f, n, std::nan(""), false};
    out.efficiency = {e, n, std::nan(""), false};
    for (int k = 0; k < spec.max_refinements; ++k) {
        n *= 2;
        if (!out.fidelity.converged) {
            const double f2 = response.fidelity_alpha_exact(n);
            out.fidelity = {f2, n, std::abs(f2 - f), std::abs(f2 - f) <= kConvergenceTolerance};
            f = f2;
        }
        if (!out.efficiency.converged) {
            const double e2 = response.average_on_grid(n)[1];
            out.efficiency = {e2, n, std::abs(e2 - e), std::abs(e2 - e) <= kConvergenceTolerance};
            e = e2;
        }
        if (out.fidelity.converged && out.efficiency.converged) break;
    }
    return out;
}

inline QuadratureReport average_fidelity_report(GateKind gate, const ScatterRules& rules,
                                                const AveragingSpec& spec = {}) {
    return average_metrics(gate, rules, spec).fidelity;
}

inline double average_fidelity(GateKind gate, const ScatterRules& rules, const AveragingSpec& spec = {}) {
    return average_fidelity_report(gate, rules, spec).value;
}

/// Average photon exit probability of the simulated circuit.
inline double average_efficiency_simulated(GateKind gate, const ScatterRules& rules, const AveragingSpec& spec = {}) {
    validate(spec);
    // Degree-2 trigonometric integrand: a single level is already exact.
    return GateResponse(gate, rules).average_on_grid(spec.nodes_per_angle)[1];
}

/// One point of the fidelity/efficiency curves.
struct MetricsRow {
    GateKind gate = GateKind::CNOT;
    double g_over_sqrt_kg = 0.0;
    double r_abs = 0.0;
    double f_avg = 0.0;
    double eta_avg_sim = 0.0;
    double eta_avg_closed = 0.0;
    bool converged = false;
};

inline MetricsRow compute_metrics_row(GateKind gate, double coupling_ratio, const AveragingSpec& spec = {}) {
    const ScatterRules rules = make_scatter_rules(CavityParams::resonant(coupling_ratio));
    const AverageMetrics m = average_metrics(gate, rules, spec);
    return {gate,
            coupling_ratio,
            rules.r_matched,
            m.fidelity.value,
            m.efficiency.value,
            average_efficiency_closed_form(gate, rules.r_matched),
            m.fidelity.converged && m.efficiency.converged};
}

}  // namespace nvgates
