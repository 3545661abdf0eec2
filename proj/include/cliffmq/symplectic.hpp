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
#include <optional>
#include <string>
#include <vector>

#include "cliffmq/f2matrix.hpp"

namespace cliffmq {

/// i^phase * (X^x_0 Z^z_0) (x) ... (x) (X^x_{n-1} Z^z_{n-1}).
///
/// The phase is relative to the X-before-Z ordering, so Y_k = i X_k Z_k has
/// phase 1 with both bits set. Hermitian strings satisfy phase == |x & z| mod 2.
struct PauliString {
    BitVec x;
    BitVec z;
    std::uint8_t phase = 0;

    PauliString() = default;
    explicit PauliString(std::size_t n) : x(n), z(n) {
    }
    PauliString(BitVec x_bits, BitVec z_bits, std::uint8_t ph = 0)
        : x(std::move(x_bits)), z(std::move(z_bits)), phase(ph & 3) {
    }

    /// Parse "+XIZY", "-iZZ" etc. Letters are per qubit; Y means the Hermitian Y.
    static PauliString from_str(const std::string &text);
    static PauliString single(std::size_t n, std::size_t q, char pauli);

    std::size_t num_qubits() const {
        return x.size();
    }
    /// Phase written relative to the Hermitian letter form (Y as a letter): 0 -> +, 1 -> +i, 2 -> -, 3 -> -i.
    std::uint8_t letter_phase() const {
        return static_cast<std::uint8_t>((phase + 4 - (x & z).popcount() % 4) & 3);
    }
    bool hermitian() const {
        return (letter_phase() & 1) == 0;
    }
    bool is_identity_up_to_phase() const {
        return !x.any() && !z.any();
    }

    /// this <- this * rhs
    PauliString &operator*=(const PauliString &rhs);
    PauliString operator*(const PauliString &rhs) const {
        PauliString r = *this;
        r *= rhs;
        return r;
    }
    bool commutes(const PauliString &o) const;

    std::string str() const;
    bool operator==(const PauliString &) const = default;
};

/// Symplectic form u^T Omega v over GF(2): 0 when the Paulis commute.
bool pairing(const BitVec &u, const BitVec &v);

/// A Clifford operator up to global phase, stored as the images of the
/// generators X_0..X_{n-1}, Z_0..Z_{n-1} under conjugation.
///
/// The symplectic matrix S has column j equal to the (x|z) vector of image j,
/// so Pauli vectors transform as v -> S v. The sign vector r holds the
/// Hermitian sign of each image.
class SymplecticOp {
   public:
    SymplecticOp() = default;
    explicit SymplecticOp(std::size_t n);

    static SymplecticOp identity(std::size_t n) {
        return SymplecticOp(n);
    }
    /// Builds the op with symplectic matrix s (2n x 2n) and sign bits r (length 2n).
    static SymplecticOp from_matrix(const F2Matrix &s, const BitVec &r);
    static SymplecticOp from_matrix(const F2Matrix &s) {
        return from_matrix(s, BitVec(s.rows()));
    }
    /// The Pauli operator p itself (as a Clifford), up to phase.
    static SymplecticOp from_pauli(const PauliString &p);

    std::size_t num_qubits() const {
        return n_;
    }
    const PauliString &image(std::size_t generator) const {
        return images_[generator];
    }
    const PauliString &x_image(std::size_t q) const {
        return images_[q];
    }
    const PauliString &z_image(std::size_t q) const {
        return images_[n_ + q];
    }
    std::vector<PauliString> &images() {
        return images_;
    }

    F2Matrix matrix() const;
    BitVec signs() const;

    bool operator==(const SymplecticOp &) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<PauliString> images_;
};

bool check_symplectic(const F2Matrix &s);
bool check_symplectic(const SymplecticOp &op);

/// The 2n x 2n matrix [[0, I], [I, 0]] (Omega over GF(2)).
F2Matrix omega(std::size_t n);

enum class MqBasis : std::uint8_t { X, Z };

/// Generalized CZ / CX generator with symplectic matrix [[I, 0], [xi, I]] (Z)
/// or [[I, xi], [0, I]] (X) and all generator signs +.
SymplecticOp gen_mq(MqBasis basis, const F2Matrix &xi);
/// Symplectic matrix of CNOT control->target: [[I + E_tc, 0], [0, I + E_ct]].
SymplecticOp gen_cnot(std::size_t n, std::size_t control, std::size_t target);
/// Block-diagonal [[a, 0], [0, a^{-T}]] with + signs.
SymplecticOp gen_linear(const F2Matrix &a);

/// "Apply g, then f."
SymplecticOp compose(const SymplecticOp &f, const SymplecticOp &g);
SymplecticOp inverse(const SymplecticOp &op);
PauliString conjugate_pauli(const SymplecticOp &op, const PauliString &p);

/// When f and g share a symplectic matrix, returns the Pauli P with f = P g.
std::optional<PauliString> equal_up_to_pauli(const SymplecticOp &f, const SymplecticOp &g);

}  // namespace cliffmq
