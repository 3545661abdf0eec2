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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliffmq/f2matrix.hpp"
#include "cliffmq/symplectic.hpp"

namespace cliffmq {

enum class GateKind : std::uint8_t { H, S, SDG, X, Y, Z, CNOT, CZ, MQX, MQZ, PAULI };

std::string_view gate_name(GateKind kind);

/// One instruction of a circuit.
///
/// MQX/MQZ carry a symmetric xi and act on every qubit:
///     exp(-i pi/2 sum_k xi_kk P_k - i pi/4 sum_{k>j} xi_kj P_k P_j).
/// PAULI carries masks (mu, eta) and applies exp(i pi/2 sum mu_k Z_k) exp(i pi/2 sum eta_k X_k).
struct Gate {
    GateKind kind;
    std::vector<std::size_t> qubits;
    std::optional<F2Matrix> xi;
    std::optional<BitVec> mu;
    std::optional<BitVec> eta;

    static Gate single(GateKind kind, std::size_t q);
    static Gate cnot(std::size_t control, std::size_t target);
    static Gate cz(std::size_t a, std::size_t b);
    static Gate mq(MqBasis basis, F2Matrix xi);
    static Gate pauli(BitVec mu, BitVec eta);

    bool is_mq() const {
        return kind == GateKind::MQX || kind == GateKind::MQZ;
    }
    bool is_single_qubit() const {
        return kind <= GateKind::Z;
    }

    bool operator==(const Gate &) const = default;
};

struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(std::size_t n) : num_qubits(n) {
    }

    void append(Gate g);
    void append(const Circuit &other);

    bool operator==(const Circuit &) const = default;
};

/// Number of MQX/MQZ gates.
std::size_t count_mq(const Circuit &c);

/// Circuit text format:
///     qubits <n>
///     H|S|SDG|X|Y|Z <q>
///     CNOT <control> <target>
///     CZ <a> <b>
///     MQX|MQZ <row0>;<row1>;...
///     PAULI <mu bits> <eta bits>
/// '#' starts a comment. Keywords are case-insensitive on input.
Circuit parse_circuit(std::istream &in);
Circuit parse_circuit(std::string_view text);
std::string serialize(const Circuit &c);
std::string serialize(const Gate &g);

/// Conjugates p by the gate's unitary: p <- U p U^dagger.
void conjugate_by_gate(const Gate &g, PauliString &p);
/// op <- gate after op.
void apply_gate(SymplecticOp &op, const Gate &g);
SymplecticOp gate_op(std::size_t n, const Gate &g);
/// Gate 0 acts first, so the result is S(g_last) ... S(g_0).
SymplecticOp to_symplectic(const Circuit &c);

/// M with |v> -> |Mv> for a CNOT-only circuit. Throws NonLinearGate otherwise.
F2Matrix linear_layer_matrix(const Circuit &c);
Circuit cnot_circuit(std::size_t n, std::span<const CnotStep> steps);

/// Relabels qubit q as perm[q] in every gate.
Circuit relabel(const Circuit &c, std::span<const std::size_t> perm);

enum class CompileVariant : std::uint8_t { Primary, Alternate, SymmetricShortcut, Merged };

std::string_view variant_name(CompileVariant v);

/// Output of the synthesis routines. s1/s2 are the symmetric factors used for
/// the CX part (B = s2 * s1). `permutation`, when set, means the circuit
/// realizes the input with qubit q relabelled as permutation[q].
struct CompiledResult {
    Circuit circuit;
    std::size_t mq_count = 0;
    F2Matrix s1;
    F2Matrix s2;
    std::optional<std::vector<std::size_t>> permutation;
    CompileVariant variant = CompileVariant::Primary;
};

}  // namespace cliffmq
