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


// nvgates: run single gates, sweep coupling strength, self-verify.
//
// Exit status: 0 success, 1 usage error, 2 verification failure, 3 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nvgates/nvgates.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitIo = 3;

struct RunArgs {
    std::string gate = "CNOT";
    double alpha = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    double x = 5.0;
    bool degrees = false;
    bool allow_weak = false;
};

struct SweepArgs {
    std::vector<std::string> gates{"all"};
    double x_min = 0.5;
    double x_max = 10.0;
    int points = 100;
    int nodes = 32;
    int refinements = 6;
    unsigned workers = 0;
    std::string out = "-";
    bool allow_weak = false;
};

struct VerifyArgs {
    int nodes = 32;
    int refinements = 6;
    bool flip_hwp = false;
};

void warn_weak_coupling(double x) {
    std::cerr << "warning: g/sqrt(kappa*gamma) = " << x
              << " < 0.5; the resonant reflection is negative there and is folded to |r|\n";
}

nvgates::GateKind require_gate(const std::string& name) {
    const auto g = nvgates::parse_gate(name);
    if (!g) throw nvgates::InvalidParameter("unknown gate '" + name + "'");
    return *g;
}

std::vector<nvgates::GateKind> parse_gates(const std::vector<std::string>& names) {
    std::vector<nvgates::GateKind> out;
    for (const std::string& n : names) {
        if (n == "all" || n == "ALL") {
            out.assign(std::begin(nvgates::kAllGates), std::end(nvgates::kAllGates));
            return out;
        }
        const nvgates::GateKind g = require_gate(n);
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int cmd_run(const RunArgs& a) {
    using namespace nvgates;
    const GateKind gate = require_gate(a.gate);
    if (a.x < kWeakCouplingThreshold) {
        if (!a.allow_weak) throw InvalidParameter("--x below 0.5 needs --allow-weak-coupling");
        warn_weak_coupling(a.x);
    }
    const double unit = a.degrees ? std::numbers::pi / 180.0 : 1.0;
    const InputAngles angles{a.alpha * unit, a.beta * unit, a.delta * unit};
    validate(angles);
    const ScatterRules rules = make_scatter_rules(CavityParams::resonant(a.x));
    const HybridState input = product_input(angles, gate);
    const GateResult res = run_gate(gate, angles, rules);

    std::printf("gate: %s\n", std::string(gate_name(gate)).c_str());
    std::printf("g/sqrt(kappa*gamma): %s  |r|: %s\n", format_real(a.x).c_str(), format_real(rules.r_matched).c_str());
    std::printf("input:  %s\n", to_string(input, 6).c_str());
    std::printf("output: %s\n", to_string(res.output, 6).c_str());
    std::printf("survival (efficiency): %s\n", format_real(efficiency(res)).c_str());
    if (res.survival > 0.0) {
        std::printf("fidelity: %s\n", format_real(fidelity(ideal_output_state(gate, angles), res.output)).c_str());
    } else {
        std::printf("fidelity: undefined (no photon leaves the gate)\n");
    }
    return kExitOk;
}

int cmd_sweep(const SweepArgs& a) {
    using namespace nvgates;
    SweepConfig cfg;
    cfg.gates = parse_gates(a.gates);
    cfg.x_min = a.x_min;
    cfg.x_max = a.x_max;
    cfg.points = a.points;
    cfg.averaging = {a.nodes, a.refinements};
    cfg.allow_weak_coupling = a.allow_weak;
    cfg.workers = a.workers;
    validate(cfg);
    if (cfg.x_min < kWeakCouplingThreshold) warn_weak_coupling(cfg.x_min);

    // Open before computing so a bad path fails fast.
    std::ofstream file;
    if (a.out != "-") {
        file.open(a.out, std::ios::out | std::ios::trunc | std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << a.out << " for writing\n";
            return kExitIo;
        }
    }
    const std::vector<MetricsRow> rows = run_sweep(cfg);
    std::size_t unconverged = 0;
    for (const MetricsRow& r : rows) unconverged += r.converged ? 0 : 1;
    if (unconverged != 0) {
        std::cerr << "warning: " << unconverged << " row(s) did not reach the 1e-12 quadrature tolerance\n";
    }

    std::ostream& os = a.out == "-" ? std::cout : file;
    write_csv(os, rows);
    os.flush();
    if (!os) {
        std::cerr << "error: write to " << a.out << " failed\n";
        return kExitIo;
    }
    return kExitOk;
}

int cmd_verify(const VerifyArgs& a) {
    using namespace nvgates;
    VerifyOptions opts;
    opts.averaging = {a.nodes, a.refinements};
    validate(opts.averaging);
    if (a.flip_hwp) opts.circuit.hwp = HwpConvention::Flipped;

    int failed = 0;
    for (const CheckResult& c : run_verification(opts)) {
        std::printf("[%s] %s: %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str());
        failed += c.passed ? 0 : 1;
    }
    if (failed != 0) {
        std::printf("%d check(s) failed\n", failed);
        return kExitVerify;
    }
    std::printf("all checks passed\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid photon/NV-center gate simulator"};
    app.require_subcommand(1);

    RunArgs run;
    CLI::App* run_cmd = app.add_subcommand("run", "Propagate one product input through a gate");
    run_cmd->add_option("--gate", run.gate, "CNOT, Toffoli or Fredkin")->capture_default_str();
    run_cmd->add_option("--alpha", run.alpha, "Photon angle: cos(a)|R> + sin(a)|L>")->capture_default_str();
    run_cmd->add_option("--beta", run.beta, "First spin angle")->capture_default_str();
    run_cmd->add_option("--delta", run.delta, "Second spin angle (Toffoli, Fredkin)")->capture_default_str();
    run_cmd->add_option("--x,--g-ratio", run.x, "Coupling ratio g/sqrt(kappa*gamma)")->capture_default_str();
    run_cmd->add_flag("--degrees", run.degrees, "Angles are in degrees");
    run_cmd->add_flag("--allow-weak-coupling", run.allow_weak, "Accept ratios below 0.5");

    SweepArgs sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Average fidelity and efficiency versus coupling ratio, as CSV");
    sweep_cmd->add_option("--gate", sweep.gates, "Gates to include (repeatable), or 'all'")->capture_default_str();
    sweep_cmd->add_option("--x-min", sweep.x_min, "Smallest coupling ratio")->capture_default_str();
    sweep_cmd->add_option("--x-max", sweep.x_max, "Largest coupling ratio")->capture_default_str();
    sweep_cmd->add_option("--points", sweep.points, "Grid points, ends included")->capture_default_str();
    sweep_cmd->add_option("--nodes", sweep.nodes, "Starting quadrature nodes per angle")->capture_default_str();
    sweep_cmd->add_option("--refinements", sweep.refinements, "Maximum node doublings")->capture_default_str();
    sweep_cmd->add_option("--workers", sweep.workers, "Worker threads, 0 for all cores")->capture_default_str();
    sweep_cmd->add_option("--out", sweep.out, "Output CSV path, '-' for stdout")->capture_default_str();
    sweep_cmd->add_flag("--allow-weak-coupling", sweep.allow_weak, "Accept x-min below 0.5");

    VerifyArgs verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the built-in consistency checks");
    verify_cmd->add_option("--nodes", verify.nodes, "Starting quadrature nodes per angle")->capture_default_str();
    verify_cmd->add_option("--refinements", verify.refinements, "Maximum node doublings")->capture_default_str();
    verify_cmd->add_flag("--flip-hwp-convention", verify.flip_hwp, "Use the sign-flipped H_p (self-test hook)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*run_cmd) return cmd_run(run);
        if (*sweep_cmd) return cmd_sweep(sweep);
        return cmd_verify(verify);
    } catch (const nvgates::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
