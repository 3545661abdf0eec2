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

#include <functional>
#include <vector>

#include "cliffmq/circuit.hpp"
#include "cliffmq/f2matrix.hpp"
#include "cliffmq/symfactor.hpp"
#include "cliffmq/symplectic.hpp"

namespace cliffmq {

/// One entangling layer with symplectic matrix gen_mq(basis, xi).
struct MqLayer {
    MqBasis basis;
    F2Matrix xi;

    bool operator==(const MqLayer &) const = default;
};

enum class CxVariant : std::uint8_t {
    /// X(S1) Z(S1^-1) X(S1 + S2^-1) Z(S2) X(S2^-1), first gate first.
    Primary,
    /// Z(S1^-1) X(S1) Z(S2 + S1^-1) X(S2^-1) Z(S2). Ends in a Z layer.
    Alternate,
};

/// Layers (temporal order) whose product is gen_linear(M) where B = M^{-T} = pair.product().
std::vector<MqLayer> cx_layers(const SymmetricPair &pair, CxVariant variant);

/// Product of the layers' generator matrices, first layer applied first.
F2Matrix layers_matrix(std::size_t n, const std::vector<MqLayer> &layers);

/// Appends gates realizing gen_mq(layer) up to a Pauli. A layer without
/// off-diagonal entries becomes single-qubit gates; a zero layer emits nothing.
void emit_layer(Circuit &c, const MqLayer &layer);

/// Replaces each maximal run of single-qubit gates on a qubit by a shortest
/// H/S word with the same action up to Pauli. Pauli gates are dropped, so the
/// result needs a fresh sign correction.
Circuit simplify_single_qubit_runs(const Circuit &c);

/// exp(i pi/2 sum mu_k Z_k) exp(i pi/2 sum eta_k X_k).
struct PauliCorrection {
    BitVec mu;
    BitVec eta;

    bool is_identity() const {
        return !mu.any() && !eta.any();
    }
    Gate gate() const {
        return Gate::pauli(mu, eta);
    }
    bool operator==(const PauliCorrection &) const = default;
};

/// The unique correction that, appended to `candidate`, reproduces the signs of `target`.
/// Throws SymplecticMismatch.
PauliCorrection solve_pauli_correction(const SymplecticOp &target, const Circuit &candidate);

/// Chooses the symmetric pair for a given B. Defaults to factor_symmetric_pair.
using PairChooser = std::function<SymmetricPair(const F2Matrix &b)>;

/// The CNOT layer |v> -> |Mv> from a fixed pair (B = M^{-T} = s2 s1), Pauli-corrected.
CompiledResult synthesize_cx_pair(const F2Matrix &m, const SymmetricPair &pair, CxVariant variant);
/// Throws SingularMatrix.
CompiledResult synthesize_cx(const F2Matrix &m, const PairChooser &choose = {});
CompiledResult synthesize_cx_alt(const F2Matrix &m, const PairChooser &choose = {});

/// op = L3 . Z(cz2) . L2 . Z(cz1) . gen_linear(cx) . L1 up to a Pauli.
/// Layers are in temporal order: l1 acts first.
struct CanonicalForm {
    std::vector<Gate> l1;
    F2Matrix cx;
    F2Matrix cz1;
    std::vector<Gate> l2;
    F2Matrix cz2;
    std::vector<Gate> l3;
};

CanonicalForm canonical_form(const SymplecticOp &op);
/// The canonical form as an ordinary circuit (CNOT, CZ and single-qubit gates), without Pauli fix.
Circuit recompose(std::size_t n, const CanonicalForm &form);

/// At most six MQ gates plus single-qubit layers, exact including signs.
CompiledResult compile_clifford(const SymplecticOp &op, const PairChooser &choose = {});

struct MergedMqz {
    Gate gate;
    /// MQZ(xi1) MQZ(xi2) = MQZ(xi1 + xi2) * residue, up to global phase.
    PauliString residue;
};
MergedMqz merge_cz(const Gate &g1, const Gate &g2);

}  // namespace cliffmq
