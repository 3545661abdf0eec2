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

#include "cliffmq/power.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "cliffmq/errors.hpp"

namespace cliffmq {

namespace {

constexpr double IMPROVE_EPS = 1e-9;

// Cost of one layer as emitted: diagonal-only layers become single-qubit gates.
double layer_cost(const F2Matrix &xi, bool include_diagonal) {
    if (xi.is_diagonal()) {
        return 0.0;
    }
    return nuclear_norm(xi, include_diagonal);
}

struct PairCost {
    double primary;
    double alternate;
};

// The two orderings share four of their five layers.
PairCost pair_costs(const F2Matrix &s1, const F2Matrix &s2, const F2Matrix &s1_inv, const F2Matrix &s2_inv,
                    bool include_diagonal) {
    double common = layer_cost(s1, include_diagonal) + layer_cost(s1_inv, include_diagonal) +
                    layer_cost(s2, include_diagonal) + layer_cost(s2_inv, include_diagonal);
    return PairCost{common + layer_cost(s1 + s2_inv, include_diagonal),
                    common + layer_cost(s2 + s1_inv, include_diagonal)};
}

struct Candidate {
    SymmetricPair pair;
    CxVariant variant;
    double cost;
};

Candidate evaluate(const F2Matrix &b_inv, const F2Matrix &b, const F2Matrix &k, const F2Matrix &k_inv,
                   bool include_diagonal) {
    // S1 = K B, S2 = K^{-1}, S1^{-1} = B^{-1} K^{-1}, S2^{-1} = K.
    F2Matrix s1 = k * b;
    F2Matrix s1_inv = b_inv * k_inv;
    PairCost c = pair_costs(s1, k_inv, s1_inv, k, include_diagonal);
    CxVariant v = c.alternate < c.primary - IMPROVE_EPS ? CxVariant::Alternate : CxVariant::Primary;
    return Candidate{SymmetricPair{std::move(s1), k_inv, ProductOrder::S2S1}, v, std::min(c.primary, c.alternate)};
}

bool is_diagonal_gate(GateKind k) {
    return k == GateKind::S || k == GateKind::SDG || k == GateKind::Z;
}

}  // namespace

std::string_view method_name(PowerMethod m) {
    return m == PowerMethod::ConstantCost ? "constant-cost" : "baseline";
}

double nuclear_norm(const F2Matrix &xi, bool include_diagonal) {
    if (!xi.is_symmetric()) {
        throw NonSymmetricXi();
    }
    std::size_t n = xi.rows();
    if (n == 0) {
        return 0.0;
    }
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            m(i, j) = (i == j && !include_diagonal) ? 0.0 : static_cast<double>(xi.get(i, j));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
}

PowerReport total_nuclear_norm(const Circuit &c, bool include_diagonal) {
    PowerReport r;
    r.n = c.num_qubits;
    for (const auto &g : c.gates) {
        if (g.is_mq()) {
            r.per_gate_nuc.push_back(nuclear_norm(*g.xi, include_diagonal));
            r.total_nuc += r.per_gate_nuc.back();
        }
    }
    return r;
}

double pair_power(const SymmetricPair &pair, CxVariant variant, bool include_diagonal) {
    double total = 0.0;
    for (const auto &layer : cx_layers(pair, variant)) {
        total += layer_cost(layer.xi, include_diagonal);
    }
    return total;
}

std::pair<CxVariant, double> best_variant(const SymmetricPair &pair, bool include_diagonal) {
    SymmetricPair p = pair.as_s2s1();
    PairCost c = pair_costs(p.s1, p.s2, invert(p.s1), invert(p.s2), include_diagonal);
    if (c.alternate < c.primary - IMPROVE_EPS) {
        return {CxVariant::Alternate, c.alternate};
    }
    return {CxVariant::Primary, c.primary};
}

WalkerResult walker_optimize(const F2Matrix &b, std::size_t budget, std::mt19937_64 &rng, bool include_diagonal) {
    std::size_t n = b.rows();
    F2Matrix b_inv = invert(b);
    SymmetricPair start = factor_symmetric_pair(b);
    auto [v0, c0] = best_variant(start, include_diagonal);

    WalkerResult best{start, v0, {}};
    double best_cost = c0;
    best.report.n = n;
    best.report.optimizer_trace.emplace_back(0, c0);

    if (budget > 0) {
        IntertwinerBasis basis = intertwiner_space(b);
        std::size_t dim = basis.basis.size();
        F2Matrix cur_k = intertwiner_of(start);
        double cur_cost = c0;
        std::size_t stall = 0;
        const std::size_t stall_limit = 4 * n + 16;
        std::uniform_int_distribution<std::size_t> pick(0, dim - 1);

        for (std::size_t step = 1; step <= budget; step++) {
            F2Matrix k;
            bool restart = stall >= stall_limit;
            if (restart) {
                k = random_intertwiner(basis, n, rng);
                stall = 0;
            } else {
                k = cur_k + basis.basis[pick(rng)];
                if (rng() & 1) {
                    k += basis.basis[pick(rng)];
                }
            }
            auto k_inv = try_invert(k);
            if (!k_inv) {
                stall++;
                continue;
            }
            Candidate cand = evaluate(b_inv, b, k, *k_inv, include_diagonal);
            if (restart || cand.cost < cur_cost - IMPROVE_EPS) {
                cur_k = k;
                cur_cost = cand.cost;
                if (!restart) {
                    stall = 0;
                }
            } else {
                stall++;
            }
            if (cand.cost < best_cost - IMPROVE_EPS) {
                best_cost = cand.cost;
                best.pair = std::move(cand.pair);
                best.variant = cand.variant;
                best.report.optimizer_trace.emplace_back(step, best_cost);
            }
        }
    }

    CompiledResult compiled = synthesize_cx_pair(invert(b).transpose(), best.pair, best.variant);
    PowerReport measured = total_nuclear_norm(compiled.circuit, include_diagonal);
    best.report.per_gate_nuc = std::move(measured.per_gate_nuc);
    best.report.total_nuc = measured.total_nuc;
    best.report.method = PowerMethod::ConstantCost;
    return best;
}

PermutationResult permutation_reduce(const F2Matrix &m, std::size_t candidates, std::mt19937_64 &rng,
                                     std::size_t walker_budget, bool include_diagonal) {
    std::size_t n = m.rows();
    auto cost_of = [&](const F2Matrix &mm) {
        std::mt19937_64 child(rng());
        return walker_optimize(invert(mm).transpose(), walker_budget, child, include_diagonal).report.total_nuc;
    };
    PermutationResult best;
    best.permutation.resize(n);
    std::iota(best.permutation.begin(), best.permutation.end(), 0);
    best.reduced = m;
    best.omega = cost_of(m);
    std::vector<std::size_t> perm = best.permutation;
    for (std::size_t c = 0; c < candidates; c++) {
        std::shuffle(perm.begin(), perm.end(), rng);
        F2Matrix mm = F2Matrix::permutation(perm) * m;
        double w = cost_of(mm);
        if (w < best.omega - IMPROVE_EPS) {
            best.permutation = perm;
            best.reduced = std::move(mm);
            best.omega = w;
        }
    }
    return best;
}

LowPowerResult compile_cx_low_power(const F2Matrix &m, const PowerOptions &opt, std::mt19937_64 &rng) {
    F2Matrix target = m;
    std::optional<std::vector<std::size_t>> perm;
    if (opt.permutation_candidates > 0) {
        PermutationResult pr =
            permutation_reduce(m, opt.permutation_candidates, rng, opt.screen_budget, opt.include_diagonal);
        bool is_identity = true;
        for (std::size_t q = 0; q < pr.permutation.size(); q++) {
            is_identity &= pr.permutation[q] == q;
        }
        if (!is_identity) {
            target = pr.reduced;
            perm = pr.permutation;
        }
    }
    WalkerResult w = walker_optimize(invert(target).transpose(), opt.walker_budget, rng, opt.include_diagonal);
    LowPowerResult out;
    out.compiled = synthesize_cx_pair(target, w.pair, w.variant);
    out.compiled.permutation = perm;
    out.report = std::move(w.report);
    out.report.permutation = perm;
    return out;
}

Circuit baseline_gauss_circuit(const F2Matrix &m) {
    std::size_t n = m.rows();
    auto steps = gauss_cnot_synthesis(m);
    Circuit out(n);

    // Open layer: pair terms plus the single-qubit gates waiting behind it.
    F2Matrix xi(n, n);
    bool open = false;
    std::vector<bool> in_layer(n, false);
    std::vector<std::vector<Gate>> post(n);
    auto blocked = [&](std::size_t q) {
        return std::any_of(post[q].begin(), post[q].end(), [](const Gate &g) { return !is_diagonal_gate(g.kind); });
    };
    auto close = [&]() {
        if (!open) {
            return;
        }
        out.append(Gate::mq(MqBasis::Z, xi));
        for (std::size_t q = 0; q < n; q++) {
            for (auto &g : post[q]) {
                out.append(std::move(g));
            }
            post[q].clear();
        }
        xi = F2Matrix(n, n);
        std::fill(in_layer.begin(), in_layer.end(), false);
        open = false;
    };
    auto single = [&](GateKind kind, std::size_t q) {
        if (!open || !in_layer[q]) {
            // Nothing of the open layer acts on q, so the gate can go before it.
            out.append(Gate::single(kind, q));
            return;
        }
        if (kind == GateKind::H && !post[q].empty() && post[q].back().kind == GateKind::H) {
            post[q].pop_back();
            return;
        }
        post[q].push_back(Gate::single(kind, q));
    };
    auto zz = [&](std::size_t a, std::size_t b) {
        if (open && (blocked(a) || blocked(b) || xi.get(a, b))) {
            close();
        }
        open = true;
        xi.set(a, b, true);
        xi.set(b, a, true);
        in_layer[a] = in_layer[b] = true;
    };

    // CNOT(c, t) ~ H_t exp(-i pi/4 Z_c Z_t) Sdg_c Sdg_t H_t up to Paulis.
    for (const auto &s : steps) {
        single(GateKind::H, s.target);
        zz(s.control, s.target);
        single(GateKind::SDG, s.control);
        single(GateKind::SDG, s.target);
        single(GateKind::H, s.target);
    }
    close();

    PauliCorrection fix = solve_pauli_correction(gen_linear(m), out);
    if (!fix.is_identity()) {
        out.append(fix.gate());
    }
    return out;
}

PowerReport baseline_gauss_power(const F2Matrix &m, bool include_diagonal) {
    PowerReport r = total_nuclear_norm(baseline_gauss_circuit(m), include_diagonal);
    r.method = PowerMethod::Baseline;
    return r;
}

FitResult fit_power_law(const std::vector<std::pair<double, double>> &points) {
    std::set<double> distinct;
    for (const auto &[n, w] : points) {
        if (!(n > 0.0) || !(w > 0.0)) {
            throw DegenerateFit("power-law fit needs positive n and omega");
        }
        distinct.insert(n);
    }
    if (distinct.size() < 3) {
        throw DegenerateFit("power-law fit needs at least three distinct n");
    }
    double m = static_cast<double>(points.size());
    double sx = 0.0;
    double sy = 0.0;
    for (const auto &[n, w] : points) {
        sx += std::log(n);
        sy += std::log(w);
    }
    double mx = sx / m;
    double my = sy / m;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto &[n, w] : points) {
        double dx = std::log(n) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(w) - my);
    }
    FitResult f;
    f.beta = sxy / sxx;
    double c = my - f.beta * mx;
    f.prefactor = std::exp(c);
    double ssr = 0.0;
    for (const auto &[n, w] : points) {
        double r = std::log(w) - (f.beta * std::log(n) + c);
        ssr += r * r;
    }
    f.stderr_beta = std::sqrt(ssr / (m - 2.0) / sxx);
    return f;
}

}  // namespace cliffmq
