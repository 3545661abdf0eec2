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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cliffmq/power.hpp"

namespace cliffmq {

struct BenchConfig {
    std::vector<std::size_t> n_values;
    std::size_t instances_per_n = 20;
    std::uint64_t seed = 1;
    /// Walker steps per qubit; an instance on n qubits gets walker_budget * n steps.
    std::size_t walker_budget = 20;
    std::size_t permutation_candidates = 0;
    /// Walker steps per qubit while screening permutations.
    std::size_t screen_budget = 1;
    std::vector<PowerMethod> methods{PowerMethod::ConstantCost, PowerMethod::Baseline};
    bool include_diagonal = true;
    /// 0 means one worker per hardware thread.
    std::size_t threads = 0;
    std::string output_path;
};

/// n = 3, 7, ..., 63 with 20 instances and the default walker settings.
BenchConfig default_bench_config();

/// Throws std::invalid_argument on an empty/short n grid or zero instances.
void validate(const BenchConfig &cfg);

struct BenchRow {
    std::size_t n = 0;
    std::size_t instance = 0;
    PowerMethod method = PowerMethod::ConstantCost;
    double omega_nuc = 0.0;
    std::uint64_t seed = 0;
    std::size_t mq_count = 0;
    bool permutation_applied = false;
};

/// Seed of one benchmark instance, derived from the run seed.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t n, std::size_t instance);

/// One row per (n, instance, method), sorted in that order.
std::vector<BenchRow> run_bench(const BenchConfig &cfg);

std::string bench_csv(const std::vector<BenchRow> &rows);

struct MethodSummary {
    /// (n, mean omega) per n.
    std::vector<std::pair<double, double>> means;
    FitResult fit;
};

/// Per-method means and power-law fits. Throws DegenerateFit.
std::map<PowerMethod, MethodSummary> summarize(const std::vector<BenchRow> &rows);

std::string summary_text(const std::map<PowerMethod, MethodSummary> &summary);

}  // namespace cliffmq
