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

#include "cliffmq/synth.hpp"

#include <array>
#include <stdexcept>

#include "cliffmq/errors.hpp"

namespace cliffmq {

namespace {

SymmetricPair choose_pair(const PairChooser &choose, const F2Matrix &b) {
    SymmetricPair pair = choose ? choose(b) : factor_symmetric_pair(b);
    pair = pair.as_s2s1();
    if (!pair.valid_for(b)) {
        throw std::logic_error("pair chooser returned an invalid factorization");
    }
    return pair;
}

void finish_with_correction(CompiledResult &r, const SymplecticOp &target) {
    r.circuit = simplify_single_qubit_runs(r.circuit);
    PauliCorrection fix = solve_pauli_correction(target, r.circuit);
    if (!fix.is_identity()) {
        r.circuit.append(fix.gate());
    }
    r.mq_count = count_mq(r.circuit);
}

// H on every qubit in the set: swaps rows k and n + k.
F2Matrix swap_xz_rows(const F2Matrix &s, const std::vector<std::size_t> &qubits) {
    std::size_t n = s.rows() / 2;
    F2Matrix t = s;
    for (std::size_t k : qubits) {
        t.swap_rows(k, n + k);
    }
    return t;
}

// Single-qubit action on (x|z) as 4 bits: bit 0,1 = image of X, bit 2,3 = image of Z.
using Local = std::uint8_t;
constexpr Local LOCAL_ID = 0b1001;

Local local_apply(Local m, GateKind g) {
    auto img = [&](int x, int z) -> int {
        switch (g) {
        case GateKind::H:
            return z | (x << 1);
        case GateKind::S:
        case GateKind::SDG:
            return x | ((z ^ x) << 1);
        default:
            return x | (z << 1);
        }
    };
    int cx = img(m & 1, (m >> 1) & 1);
    int cz = img((m >> 2) & 1, (m >> 3) & 1);
    return static_cast<Local>(cx | (cz << 2));
}

// Shortest H/S word for each of the six elements, found by breadth-first search.
const std::array<std::vector<GateKind>, 16> &local_words() {
    static const auto table = [] {
        std::array<std::vector<GateKind>, 16> words;
        std::array<bool, 16> seen{};
        std::vector<Local> frontier{LOCAL_ID};
        seen[LOCAL_ID] = true;
        while (!frontier.empty()) {
            std::vector<Local> next;
            for (Local m : frontier) {
                for (GateKind g : {GateKind::H, GateKind::S}) {
                    Local t = local_apply(m, g);
                    if (!seen[t]) {
                        seen[t] = true;
                        words[t] = words[m];
                        words[t].push_back(g);
                        next.push_back(t);
                    }
                }
            }
            frontier = std::move(next);
        }
        return words;
    }();
    return table;
}

}  // namespace

Circuit simplify_single_qubit_runs(const Circuit &c) {
    std::size_t n = c.num_qubits;
    std::vector<Local> pending(n, LOCAL_ID);
    Circuit out(n);
    auto flush = [&](std::size_t q) {
        for (GateKind g : local_words()[pending[q]]) {
            out.append(Gate::single(g, q));
        }
        pending[q] = LOCAL_ID;
    };
    for (const auto &g : c.gates) {
        if (g.kind == GateKind::PAULI) {
            continue;
        }
        if (g.is_single_qubit()) {
            pending[g.qubits[0]] = local_apply(pending[g.qubits[0]], g.kind);
            continue;
        }
        if (g.is_mq()) {
            for (std::size_t q = 0; q < n; q++) {
                flush(q);
            }
        } else {
            for (std::size_t q : g.qubits) {
                flush(q);
            }
        }
        out.append(g);
    }
    for (std::size_t q = 0; q < n; q++) {
        flush(q);
    }
    return out;
}

std::vector<MqLayer> cx_layers(const SymmetricPair &pair, CxVariant variant) {
    SymmetricPair p = pair.as_s2s1();
    F2Matrix s1_inv = invert(p.s1);
    F2Matrix s2_inv = invert(p.s2);
    if (variant == CxVariant::Primary) {
        return {
            {MqBasis::X, p.s1},
            {MqBasis::Z, s1_inv},
            {MqBasis::X, p.s1 + s2_inv},
            {MqBasis::Z, p.s2},
            {MqBasis::X, s2_inv},
        };
    }
    return {
        {MqBasis::Z, s1_inv},
        {MqBasis::X, p.s1},
        {MqBasis::Z, p.s2 + s1_inv},
        {MqBasis::X, s2_inv},
        {MqBasis::Z, p.s2},
    };
}

F2Matrix layers_matrix(std::size_t n, const std::vector<MqLayer> &layers) {
    F2Matrix s = F2Matrix::identity(2 * n);
    for (const auto &layer : layers) {
        s = gen_mq(layer.basis, layer.xi).matrix() * s;
    }
    return s;
}

void emit_layer(Circuit &c, const MqLayer &layer) {
    std::size_t n = c.num_qubits;
    if (layer.xi.rows() != n || layer.xi.cols() != n) {
        throw DimensionMismatch("layer width differs from circuit width");
    }
    if (!layer.xi.is_symmetric()) {
        throw NonSymmetricXi();
    }
    // The gate's pair terms also shift the diagonal by the row degree; S (or
    // its X-basis conjugate) restores the requested diagonal.
    bool entangling = !layer.xi.is_diagonal();
    if (entangling) {
        c.append(Gate::mq(layer.basis, layer.xi));
    }
    for (std::size_t k = 0; k < n; k++) {
        bool d = layer.xi.get(k, k);
        if (entangling) {
            std::size_t deg = layer.xi.row_vec(k).popcount() - (d ? 1 : 0);
            d ^= deg & 1;
        }
        if (!d) {
            continue;
        }
        if (layer.basis == MqBasis::Z) {
            c.append(Gate::single(GateKind::S, k));
        } else {
            c.append(Gate::single(GateKind::H, k));
            c.append(Gate::single(GateKind::S, k));
            c.append(Gate::single(GateKind::H, k));
        }
    }
}

PauliCorrection solve_pauli_correction(const SymplecticOp &target, const Circuit &candidate) {
    SymplecticOp got = to_symplectic(candidate);
    if (got.num_qubits() != target.num_qubits()) {
        throw DimensionMismatch("correction target width differs");
    }
    auto p = equal_up_to_pauli(target, got);
    if (!p) {
        throw SymplecticMismatch();
    }
    return PauliCorrection{p->z, p->x};
}

CompiledResult synthesize_cx_pair(const F2Matrix &m, const SymmetricPair &pair, CxVariant variant) {
    std::size_t n = m.rows();
    SymmetricPair p = pair.as_s2s1();
    CompiledResult r;
    r.circuit = Circuit(n);
    r.s1 = p.s1;
    r.s2 = p.s2;
    if (p.s1.is_identity()) {
        r.variant = CompileVariant::SymmetricShortcut;
    } else {
        r.variant = variant == CxVariant::Primary ? CompileVariant::Primary : CompileVariant::Alternate;
    }
    for (const auto &layer : cx_layers(p, variant)) {
        emit_layer(r.circuit, layer);
    }
    finish_with_correction(r, gen_linear(m));
    return r;
}

CompiledResult synthesize_cx(const F2Matrix &m, const PairChooser &choose) {
    F2Matrix b = invert(m).transpose();
    return synthesize_cx_pair(m, choose_pair(choose, b), CxVariant::Primary);
}

CompiledResult synthesize_cx_alt(const F2Matrix &m, const PairChooser &choose) {
    F2Matrix b = invert(m).transpose();
    return synthesize_cx_pair(m, choose_pair(choose, b), CxVariant::Alternate);
}

CanonicalForm canonical_form(const SymplecticOp &op) {
    std::size_t n = op.num_qubits();
    F2Matrix s = op.matrix();
    CanonicalForm f;
    f.cz1 = F2Matrix::zeros(n);

    if (s.block(0, n, n, n).is_zero()) {
        // [[A, 0], [C, A^-T]] = Z(C A^-1) . D(A)
        f.cx = s.block(0, 0, n, n);
        f.cz2 = s.block(n, 0, n, n) * invert(f.cx);
        return f;
    }

    // Pick x-coordinates on the pivot set of the Z-image span and z-coordinates
    // elsewhere; the Z images are then a graph over those coordinates.
    F2Matrix w = s.block(0, n, 2 * n, n).transpose();
    std::vector<bool> pivot(n, false);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; col++) {
        std::size_t r = rank;
        while (r < n && !w.get(r, col)) {
            r++;
        }
        if (r == n) {
            continue;
        }
        w.swap_rows(r, rank);
        for (std::size_t i = 0; i < n; i++) {
            if (i != rank && w.get(i, col)) {
                w.add_row(rank, i);
            }
        }
        pivot[col] = true;
        rank++;
    }
    std::vector<std::size_t> q;
    for (std::size_t k = 0; k < n; k++) {
        if (!pivot[k]) {
            q.push_back(k);
        }
    }

    // T = H_Q S = Z(xi2) . H . Z(xi1) . D(M) = [[xi1 M, M^-T], [(xi2 xi1 + I) M, xi2 M^-T]]
    F2Matrix t = swap_xz_rows(s, q);
    auto nb = try_invert(t.block(0, n, n, n));
    if (!nb) {
        throw std::logic_error("Hadamard subset did not produce an invertible block");
    }
    F2Matrix nt = t.block(0, n, n, n).transpose();
    f.cx = nb->transpose();
    f.cz1 = t.block(0, 0, n, n) * nt;
    f.cz2 = t.block(n, n, n, n) * *nb;
    for (std::size_t k = 0; k < n; k++) {
        f.l2.push_back(Gate::single(GateKind::H, k));
    }
    for (std::size_t k : q) {
        f.l3.push_back(Gate::single(GateKind::H, k));
    }
    return f;
}

Circuit recompose(std::size_t n, const CanonicalForm &form) {
    Circuit c(n);
    auto add_cz_layer = [&](const F2Matrix &xi) {
        for (std::size_t j = 0; j < n; j++) {
            if (xi.get(j, j)) {
                c.append(Gate::single(GateKind::S, j));
            }
            for (std::size_t k = j + 1; k < n; k++) {
                if (xi.get(j, k)) {
                    c.append(Gate::cz(j, k));
                }
            }
        }
    };
    for (const auto &g : form.l1) {
        c.append(g);
    }
    c.append(cnot_circuit(n, gauss_cnot_synthesis(form.cx)));
    add_cz_layer(form.cz1);
    for (const auto &g : form.l2) {
        c.append(g);
    }
    add_cz_layer(form.cz2);
    for (const auto &g : form.l3) {
        c.append(g);
    }
    return c;
}

CompiledResult compile_clifford(const SymplecticOp &op, const PairChooser &choose) {
    std::size_t n = op.num_qubits();
    CanonicalForm form = canonical_form(op);
    SymmetricPair pair = choose_pair(choose, invert(form.cx).transpose());

    // The alternate ordering ends in a Z layer, which absorbs cz1, and cz2 as
    // well when no single-qubit layer separates them.
    auto layers = cx_layers(pair, CxVariant::Alternate);
    layers.back().xi += form.cz1;
    bool fold_cz2 = form.l2.empty();
    if (fold_cz2) {
        layers.back().xi += form.cz2;
    }

    CompiledResult r;
    r.circuit = Circuit(n);
    r.s1 = pair.s1;
    r.s2 = pair.s2;
    r.variant = CompileVariant::Merged;
    for (const auto &g : form.l1) {
        r.circuit.append(g);
    }
    for (const auto &layer : layers) {
        emit_layer(r.circuit, layer);
    }
    for (const auto &g : form.l2) {
        r.circuit.append(g);
    }
    if (!fold_cz2) {
        emit_layer(r.circuit, {MqBasis::Z, form.cz2});
    }
    for (const auto &g : form.l3) {
        r.circuit.append(g);
    }
    finish_with_correction(r, op);
    return r;
}

MergedMqz merge_cz(const Gate &g1, const Gate &g2) {
    if (g1.kind != GateKind::MQZ || g2.kind != GateKind::MQZ) {
        throw std::invalid_argument("merge_cz needs two MQZ gates");
    }
    const F2Matrix &a = *g1.xi;
    const F2Matrix &b = *g2.xi;
    if (a.rows() != b.rows()) {
        throw DimensionMismatch("merge_cz widths differ");
    }
    std::size_t n = a.rows();
    // Each pair term present in both doubles to exp(-i pi/2 Z_j Z_k) ~ Z_j Z_k.
    PauliString residue(n);
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t k = j + 1; k < n; k++) {
            if (a.get(j, k) && b.get(j, k)) {
                residue.z.flip(j);
                residue.z.flip(k);
            }
        }
    }
    return MergedMqz{Gate::mq(MqBasis::Z, a + b), residue};
}

}  // namespace cliffmq
