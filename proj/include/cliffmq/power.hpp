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

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "cliffmq/circuit.hpp"
#include "cliffmq/symfactor.hpp"
#include "cliffmq/synth.hpp"

namespace cliffmq {

enum class PowerMethod : std::uint8_t { ConstantCost, Baseline };

std::string_view method_name(PowerMethod m);

struct PowerReport {
    std::vector<double> per_gate_nuc;
    double total_nuc = 0.0;
    PowerMethod method = PowerMethod::ConstantCost;
    std::size_t n = 0;
    /// (step, best value so far); non-increasing in the value.
    std::vector<std::pair<std::size_t, double>> optimizer_trace;
    std::optional<std::vector<std::size_t>> permutation;
};

struct FitResult {
    double beta = 0.0;
    double prefactor = 0.0;
    double stderr_beta = 0.0;
};

/// Sum of |eigenvalues| of xi read as a real 0/1 matrix. Throws NonSymmetricXi.
double nuclear_norm(const F2Matrix &xi, bool include_diagonal = true);

/// Sums nuclear norms over the MQX/MQZ gates of c.
PowerReport total_nuclear_norm(const Circuit &c, bool include_diagonal = true);

/// Total nuclear norm of the MQ gates that synthesize_cx_pair would emit.
double pair_power(const SymmetricPair &pair, CxVariant variant, bool include_diagonal = true);

/// The cheaper of the two orderings for this pair.
std::pair<CxVariant, double> best_variant(const SymmetricPair &pair, bool include_diagonal = true);

struct WalkerResult {
    SymmetricPair pair;
    CxVariant variant = CxVariant::Primary;
    PowerReport report;
};

/// Greedy descent over the factorizations B = K^{-1} (K B), K in the intertwiner
/// span, with random restarts. `budget` counts candidate evaluations.
/// Throws SingularMatrix.
WalkerResult walker_optimize(const F2Matrix &b, std::size_t budget, std::mt19937_64 &rng,
                             bool include_diagonal = true);

struct PermutationResult {
    std::vector<std::size_t> permutation;
    /// P_perm M
    F2Matrix reduced;
    double omega = 0.0;
};

/// Tries the identity and `candidates` random permutations; keeps the one whose
/// P M compiles (walker with `walker_budget`) to the lowest total nuclear norm.
PermutationResult permutation_reduce(const F2Matrix &m, std::size_t candidates, std::mt19937_64 &rng,
                                     std::size_t walker_budget = 0, bool include_diagonal = true);

struct PowerOptions {
    std::size_t walker_budget = 0;
    std::size_t permutation_candidates = 0;
    /// Walker budget used while screening permutations.
    std::size_t screen_budget = 0;
    bool include_diagonal = true;
};

struct LowPowerResult {
    CompiledResult compiled;
    PowerReport report;
};

/// Constant-cost synthesis of |v> -> |Mv> with walker and permutation reduction.
/// With a permutation the circuit realizes P M (see CompiledResult::permutation).
LowPowerResult compile_cx_low_power(const F2Matrix &m, const PowerOptions &opt, std::mt19937_64 &rng);

/// Gaussian-elimination CNOT list, each CNOT as a ZZ term plus single-qubit gates,
/// ZZ terms greedily merged into MQZ layers. Exact including signs.
Circuit baseline_gauss_circuit(const F2Matrix &m);
PowerReport baseline_gauss_power(const F2Matrix &m, bool include_diagonal = true);

/// Least squares on (log n, log omega). Throws DegenerateFit.
FitResult fit_power_law(const std::vector<std::pair<double, double>> &points);

}  // namespace cliffmq
