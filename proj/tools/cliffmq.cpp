// Copyright 2026 The cliffmq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cliffmq/bench.hpp"
#include "cliffmq/circuit.hpp"
#include "cliffmq/errors.hpp"
#include "cliffmq/oracle.hpp"
#include "cliffmq/power.hpp"
#include "cliffmq/synth.hpp"

using namespace cliffmq;

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_VERIFY_FAILED = 1;
constexpr int EXIT_USAGE = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Circuit read_circuit(const std::string &path) {
    if (path.empty() || path == "-") {
        return parse_circuit(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    return parse_circuit(in);
}

bool cnot_only(const Circuit &c) {
    for (const auto &g : c.gates) {
        if (g.kind != GateKind::CNOT) {
            return false;
        }
    }
    return true;
}

std::string generator_name(std::size_t n, std::size_t k) {
    return (k < n ? "X" : "Z") + std::to_string(k % n);
}

struct CompileArgs {
    std::string input;
    std::string output;
    std::uint64_t seed = 1;
    std::size_t budget = 20;
    bool no_diagonal = false;
};

int cmd_compile(const CompileArgs &a) {
    Circuit in = read_circuit(a.input);
    std::size_t n = in.num_qubits;
    std::mt19937_64 rng(a.seed);
    std::size_t budget = a.budget * n;
    bool diag = !a.no_diagonal;

    CompiledResult r;
    if (n == 0) {
        r.circuit = Circuit(0);
    } else if (cnot_only(in)) {
        PowerOptions opt;
        opt.walker_budget = budget;
        opt.include_diagonal = diag;
        r = compile_cx_low_power(linear_layer_matrix(in), opt, rng).compiled;
    } else {
        auto chooser = [&](const F2Matrix &b) { return walker_optimize(b, budget, rng, diag).pair; };
        r = compile_clifford(to_symplectic(in), chooser);
    }

    std::string text = serialize(r.circuit);
    if (a.output.empty() || a.output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(a.output);
        if (!out) {
            throw UsageError("cannot write " + a.output);
        }
        out << text;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", total_nuclear_norm(r.circuit, diag).total_nuc);
    std::cerr << "mq_count=" << r.mq_count << " omega_nuc=" << buf << '\n';
    return EXIT_OK;
}

int cmd_verify(const std::string &input, const std::string &compiled) {
    Circuit a = read_circuit(input);
    Circuit b = read_circuit(compiled);
    if (a.num_qubits != b.num_qubits) {
        std::cerr << "qubit counts differ: " << a.num_qubits << " vs " << b.num_qubits << '\n';
        return EXIT_VERIFY_FAILED;
    }
    std::size_t n = a.num_qubits;
    SymplecticOp sa = to_symplectic(a);
    SymplecticOp sb = to_symplectic(b);
    for (std::size_t k = 0; k < 2 * n; k++) {
        if (!(sa.image(k) == sb.image(k))) {
            std::cerr << "generator " << generator_name(n, k) << ": expected " << sa.image(k).str() << ", got "
                      << sb.image(k).str() << '\n';
            return EXIT_VERIFY_FAILED;
        }
    }
    if (n <= 6 && !equal_up_to_global_phase(dense_unitary(a), dense_unitary(b))) {
        std::cerr << "dense unitaries differ beyond a global phase\n";
        return EXIT_VERIFY_FAILED;
    }
    std::cerr << "ok\n";
    return EXIT_OK;
}

int cmd_bench(BenchConfig cfg, const std::string &method) {
    if (method == "constant-cost") {
        cfg.methods = {PowerMethod::ConstantCost};
    } else if (method == "baseline") {
        cfg.methods = {PowerMethod::Baseline};
    } else if (method != "both") {
        throw UsageError("unknown method " + method);
    }
    try {
        validate(cfg);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    auto rows = run_bench(cfg);
    std::string csv = bench_csv(rows);
    std::string summary;
    try {
        summary = summary_text(summarize(rows));
    } catch (const DegenerateFit &e) {
        summary = std::string("fit unavailable: ") + e.what() + '\n';
    }
    if (cfg.output_path.empty() || cfg.output_path == "-") {
        std::cout << csv;
        std::cerr << summary;
    } else {
        std::ofstream out(cfg.output_path);
        if (!out) {
            throw UsageError("cannot write " + cfg.output_path);
        }
        out << csv;
        std::cout << summary;
    }
    return EXIT_OK;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Clifford compiler targeting global multiqubit entangling gates"};
    app.require_subcommand(1);

    CompileArgs ca;
    auto *compile = app.add_subcommand("compile", "compile a circuit file to at most six MQ gates");
    compile->add_option("input", ca.input, "input circuit ('-' or omitted for stdin)");
    compile->add_option("-o,--out", ca.output, "output file (default stdout)");
    compile->add_option("--seed", ca.seed, "walker seed");
    compile->add_option("--budget", ca.budget, "walker steps per qubit");
    compile->add_flag("--no-diagonal-power", ca.no_diagonal, "exclude xi diagonals from the nuclear norm");

    std::string v_input;
    std::string v_compiled;
    auto *verify = app.add_subcommand("verify", "check that two circuits implement the same Clifford");
    verify->add_option("input", v_input, "reference circuit")->required();
    verify->add_option("compiled", v_compiled, "candidate circuit")->required();

    BenchConfig bc = default_bench_config();
    std::string method = "both";
    bool b_no_diag = false;
    auto *bench = app.add_subcommand("bench", "drive-power sweep over random CNOT layers");
    bench->add_option("--n", bc.n_values, "qubit counts");
    bench->add_option("--instances", bc.instances_per_n, "instances per qubit count");
    bench->add_option("--seed", bc.seed, "run seed");
    bench->add_option("--budget", bc.walker_budget, "walker steps per qubit");
    bench->add_option("--perms", bc.permutation_candidates, "random permutations to screen");
    bench->add_option("--screen-budget", bc.screen_budget, "walker steps per qubit while screening");
    bench->add_flag("--no-diagonal-power", b_no_diag, "exclude xi diagonals from the nuclear norm");
    bench->add_option("--method", method, "constant-cost | baseline | both");
    bench->add_option("--threads", bc.threads, "worker threads (0 = hardware)");
    bench->add_option("-o,--out", bc.output_path, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return EXIT_USAGE;
    }

    try {
        if (compile->parsed()) {
            return cmd_compile(ca);
        }
        if (verify->parsed()) {
            return cmd_verify(v_input, v_compiled);
        }
        bc.include_diagonal = !b_no_diag;
        return cmd_bench(bc, method);
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return EXIT_USAGE;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_USAGE;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_USAGE;
    }
}
