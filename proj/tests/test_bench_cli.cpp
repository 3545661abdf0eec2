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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cliffmq/bench.hpp"
#include "cliffmq/errors.hpp"
#include "cliffmq/oracle.hpp"
#include "support/generators.hpp"

using namespace cliffmq;
using namespace cliffmq::testing;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("cliffmq_test_" + std::to_string(::getpid()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    fs::path file(const std::string &name) const {
        return path_ / name;
    }

private:
    fs::path path_;
};

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path &p, const std::string &text) {
    std::ofstream(p) << text;
}

RunResult run_cli(const TempDir &dir, const std::string &args) {
    fs::path out = dir.file("stdout.txt");
    fs::path err = dir.file("stderr.txt");
    std::string cmd = std::string(CLIFFMQ_CLI) + " " + args + " > " + out.string() + " 2> " + err.string();
    int status = std::system(cmd.c_str());
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::size_t summary_mq_count(const std::string &err) {
    std::smatch m;
    if (!std::regex_search(err, m, std::regex("mq_count=(\\d+) omega_nuc=([0-9.]+)"))) {
        return SIZE_MAX;
    }
    return std::stoul(m[1]);
}

BenchConfig small_config() {
    BenchConfig cfg;
    cfg.n_values = {4, 8};
    cfg.instances_per_n = 2;
    cfg.seed = 7;
    cfg.walker_budget = 5;
    cfg.threads = 1;
    return cfg;
}

}  // namespace

TEST(bench, default_config) {
    BenchConfig cfg = default_bench_config();
    EXPECT_EQ(cfg.n_values.front(), 3u);
    EXPECT_EQ(cfg.n_values.back(), 63u);
    EXPECT_EQ(cfg.n_values.size(), 16u);
    EXPECT_EQ(cfg.instances_per_n, 20u);
    EXPECT_NO_THROW(validate(cfg));
}

TEST(bench, validate_rejects_bad_configs) {
    BenchConfig cfg = small_config();
    cfg.n_values = {4};
    EXPECT_THROW(validate(cfg), std::invalid_argument);
    cfg = small_config();
    cfg.instances_per_n = 0;
    EXPECT_THROW(validate(cfg), std::invalid_argument);
    cfg = small_config();
    cfg.n_values = {0, 4};
    EXPECT_THROW(validate(cfg), std::invalid_argument);
    cfg = small_config();
    cfg.methods.clear();
    EXPECT_THROW(validate(cfg), std::invalid_argument);
}

TEST(bench, row_count_and_order) {
    auto rows = run_bench(small_config());
    ASSERT_EQ(rows.size(), 8u);
    for (std::size_t k = 1; k < rows.size(); k++) {
        auto key = [](const BenchRow &r) { return std::tuple(r.n, r.instance, r.method); };
        EXPECT_LT(key(rows[k - 1]), key(rows[k]));
    }
    for (const auto &r : rows) {
        EXPECT_EQ(r.seed, instance_seed(7, r.n, r.instance));
        EXPECT_GE(r.omega_nuc, 0.0);
        if (r.method == PowerMethod::ConstantCost) {
            EXPECT_LE(r.mq_count, 5u);
        }
        EXPECT_FALSE(r.permutation_applied);
    }
}

TEST(bench, csv_format) {
    std::vector<BenchRow> rows{{3, 0, PowerMethod::ConstantCost, 12.5, 42, 5, false},
                               {3, 0, PowerMethod::Baseline, 1.0 / 3.0, 42, 7, true}};
    EXPECT_EQ(bench_csv(rows), "n,method,omega_nuc,seed,mq_count,permutation_applied\n"
                               "3,constant-cost,12.500000000,42,5,false\n"
                               "3,baseline,0.333333333,42,7,true\n");
}

TEST(bench, deterministic_across_runs_and_threads) {
    BenchConfig cfg = small_config();
    cfg.n_values = {3, 5, 9};
    cfg.permutation_candidates = 2;
    std::string a = bench_csv(run_bench(cfg));
    std::string b = bench_csv(run_bench(cfg));
    cfg.threads = 3;
    std::string c = bench_csv(run_bench(cfg));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    cfg.seed = 8;
    EXPECT_NE(a, bench_csv(run_bench(cfg)));
}

TEST(bench, instance_seeds_distinct) {
    std::set<std::uint64_t> seen;
    for (std::size_t n = 1; n <= 64; n++) {
        for (std::size_t i = 0; i < 20; i++) {
            seen.insert(instance_seed(1, n, i));
        }
    }
    EXPECT_EQ(seen.size(), 64u * 20u);
}

TEST(bench, summarize_synthetic) {
    std::vector<BenchRow> rows;
    for (std::size_t n : {3, 7, 11, 15}) {
        for (std::size_t i = 0; i < 2; i++) {
            // Instance spread averages out to exactly n^1.5 and 2 n^1.5.
            double w = std::pow(static_cast<double>(n), 1.5);
            double d = i == 0 ? -0.1 : 0.1;
            rows.push_back({n, i, PowerMethod::ConstantCost, w * (1 + d), 0, 5, false});
            rows.push_back({n, i, PowerMethod::Baseline, 2 * w * (1 + d), 0, 9, false});
        }
    }
    auto s = summarize(rows);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_NEAR(s[PowerMethod::ConstantCost].fit.beta, 1.5, 1e-9);
    EXPECT_NEAR(s[PowerMethod::Baseline].fit.beta, 1.5, 1e-9);
    EXPECT_NEAR(s[PowerMethod::Baseline].fit.prefactor, 2.0, 1e-9);
    ASSERT_EQ(s[PowerMethod::ConstantCost].means.size(), 4u);
    EXPECT_NEAR(s[PowerMethod::ConstantCost].means[1].second, std::pow(7.0, 1.5), 1e-9);
    std::string text = summary_text(s);
    EXPECT_NE(text.find("constant-cost: beta=1.5000"), std::string::npos);
    EXPECT_NE(text.find("baseline: beta=1.5000"), std::string::npos);

    rows.resize(4);
    EXPECT_THROW(summarize(rows), DegenerateFit);
}

TEST(cli, compile_examples) {
    TempDir dir;
    write_file(dir.file("id.txt"), "qubits 3\n");
    RunResult id = run_cli(dir, "compile " + dir.file("id.txt").string());
    EXPECT_EQ(id.code, 0);
    EXPECT_EQ(summary_mq_count(id.err), 0u);
    EXPECT_EQ(parse_circuit(id.out), Circuit(3));

    std::mt19937_64 rng(1);
    Circuit cx = random_cnot_circuit(6, 20, rng);
    write_file(dir.file("cx.txt"), serialize(cx));
    RunResult r = run_cli(dir, "compile " + dir.file("cx.txt").string());
    EXPECT_EQ(r.code, 0);
    EXPECT_LE(summary_mq_count(r.err), 5u);
    EXPECT_TRUE(tableau_equivalent(parse_circuit(r.out), cx));

    Circuit cl = random_clifford_circuit(6, rng);
    write_file(dir.file("cl.txt"), serialize(cl));
    RunResult s = run_cli(dir, "compile " + dir.file("cl.txt").string() + " -o " + dir.file("cl_out.txt").string());
    EXPECT_EQ(s.code, 0);
    EXPECT_LE(summary_mq_count(s.err), 6u);
    Circuit compiled = parse_circuit(slurp(dir.file("cl_out.txt")));
    EXPECT_EQ(count_mq(compiled), summary_mq_count(s.err));
    EXPECT_TRUE(equal_up_to_global_phase(dense_unitary(compiled), dense_unitary(cl)));
}

TEST(cli, compile_deterministic) {
    TempDir dir;
    std::mt19937_64 rng(2);
    write_file(dir.file("cx.txt"), serialize(random_cnot_circuit(10, 40, rng)));
    RunResult a = run_cli(dir, "compile " + dir.file("cx.txt").string() + " --seed 5 --budget 30");
    RunResult b = run_cli(dir, "compile " + dir.file("cx.txt").string() + " --seed 5 --budget 30");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
}

TEST(cli, verify_examples) {
    TempDir dir;
    std::mt19937_64 rng(3);
    Circuit c = random_clifford_circuit(4, rng);
    fs::path in = dir.file("in.txt");
    fs::path out = dir.file("out.txt");
    write_file(in, serialize(c));
    EXPECT_EQ(run_cli(dir, "verify " + in.string() + " " + in.string()).code, 0);

    ASSERT_EQ(run_cli(dir, "compile " + in.string() + " -o " + out.string()).code, 0);
    EXPECT_EQ(run_cli(dir, "verify " + in.string() + " " + out.string()).code, 0);

    // Flip one off-diagonal xi bit (and its mirror) in the first MQ gate.
    Circuit tampered = parse_circuit(slurp(out));
    for (auto &g : tampered.gates) {
        if (g.is_mq()) {
            g.xi->flip(0, 1);
            g.xi->flip(1, 0);
            break;
        }
    }
    write_file(dir.file("bad.txt"), serialize(tampered));
    RunResult bad = run_cli(dir, "verify " + in.string() + " " + dir.file("bad.txt").string());
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("generator"), std::string::npos);

    write_file(dir.file("other.txt"), "qubits 5\n");
    EXPECT_EQ(run_cli(dir, "verify " + in.string() + " " + dir.file("other.txt").string()).code, 1);
}

TEST(cli, usage_and_parse_errors) {
    TempDir dir;
    write_file(dir.file("broken.txt"), "qubits 2\nFOO 1\n");
    RunResult r = run_cli(dir, "compile " + dir.file("broken.txt").string());
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
    EXPECT_EQ(run_cli(dir, "").code, 2);
    EXPECT_EQ(run_cli(dir, "bench --n 4 8 --method nope").code, 2);
    EXPECT_EQ(run_cli(dir, "bench --n 4").code, 2);
    EXPECT_EQ(run_cli(dir, "compile " + dir.file("missing.txt").string()).code, 2);
}

TEST(cli, bench_csv_and_summary) {
    TempDir dir;
    fs::path csv = dir.file("b.csv");
    std::string args = "bench --n 4 8 12 --instances 2 --seed 3 --budget 2 --threads 1 -o " + csv.string();
    RunResult r = run_cli(dir, args);
    ASSERT_EQ(r.code, 0) << r.err;
    std::string first = slurp(csv);
    EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 1 + 12);
    EXPECT_EQ(first.rfind("n,method,omega_nuc,seed,mq_count,permutation_applied\n", 0), 0u);
    EXPECT_NE(r.out.find("constant-cost: beta="), std::string::npos);
    EXPECT_NE(r.out.find("baseline: beta="), std::string::npos);
    ASSERT_EQ(run_cli(dir, args).code, 0);
    EXPECT_EQ(slurp(csv), first);

    RunResult one = run_cli(dir, "bench --n 4 8 --instances 1 --method baseline");
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(std::count(one.out.begin(), one.out.end(), '\n'), 1 + 2);
}

TEST(cli, compile_then_verify_random) {
    // Every compiled output verifies; the CLI round trip is sampled, the
    // library path behind it is checked at full count.
    TempDir dir;
    std::mt19937_64 rng(4);
    for (std::size_t n = 2; n <= 16; n++) {
        for (int t = 0; t < 200; t++) {
            Circuit c = t % 2 ? random_cnot_circuit(n, 3 * n, rng) : random_clifford_circuit(n, rng);
            if (t < 4) {
                fs::path in = dir.file("in.txt");
                fs::path out = dir.file("out.txt");
                write_file(in, serialize(c));
                ASSERT_EQ(run_cli(dir, "compile " + in.string() + " -o " + out.string()).code, 0);
                ASSERT_EQ(run_cli(dir, "verify " + in.string() + " " + out.string()).code, 0) << serialize(c);
            } else {
                ASSERT_TRUE(tableau_equivalent(compile_clifford(to_symplectic(c)).circuit, c));
            }
        }
    }
}
