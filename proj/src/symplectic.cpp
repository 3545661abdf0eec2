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

#include "cliffmq/symplectic.hpp"

#include <stdexcept>

#include "cliffmq/errors.hpp"

namespace cliffmq {

PauliString PauliString::from_str(const std::string &text) {
    std::size_t k = 0;
    std::uint8_t letter = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        letter = text[k] == '-' ? 2 : 0;
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        letter = (letter + 1) & 3;
        k++;
    }
    std::size_t n = text.size() - k;
    PauliString p(n);
    for (std::size_t q = 0; q < n; q++) {
        switch (text[k + q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.x.set(q, true);
                break;
            case 'Z':
                p.z.set(q, true);
                break;
            case 'Y':
                p.x.set(q, true);
                p.z.set(q, true);
                break;
            default:
                throw std::invalid_argument("bad Pauli letter in '" + text + "'");
        }
    }
    p.phase = static_cast<std::uint8_t>((letter + (p.x & p.z).popcount()) & 3);
    return p;
}

PauliString PauliString::single(std::size_t n, std::size_t q, char pauli) {
    std::string s(n, 'I');
    s.at(q) = pauli;
    return from_str(s);
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    // (i^p X^a Z^b)(i^q X^c Z^d) = i^(p+q) (-1)^(b.c) X^(a+c) Z^(b+d)
    std::uint8_t sign = z.dot(rhs.x) ? 2 : 0;
    phase = static_cast<std::uint8_t>((phase + rhs.phase + sign) & 3);
    x ^= rhs.x;
    z ^= rhs.z;
    return *this;
}

bool PauliString::commutes(const PauliString &o) const {
    return x.dot(o.z) == z.dot(o.x);
}

std::string PauliString::str() const {
    static const char *prefix[] = {"+", "+i", "-", "-i"};
    std::string s = prefix[letter_phase()];
    for (std::size_t q = 0; q < num_qubits(); q++) {
        s += "IXZY"[x.get(q) + 2 * z.get(q)];
    }
    return s;
}

bool pairing(const BitVec &u, const BitVec &v) {
    if (u.size() != v.size() || u.size() % 2) {
        throw DimensionMismatch("pairing needs equal even-length vectors");
    }
    std::size_t n = u.size() / 2;
    bool acc = false;
    for (std::size_t k = 0; k < n; k++) {
        acc ^= (u.get(k) && v.get(n + k)) ^ (u.get(n + k) && v.get(k));
    }
    return acc;
}

SymplecticOp::SymplecticOp(std::size_t n) : n_(n) {
    images_.reserve(2 * n);
    for (std::size_t q = 0; q < n; q++) {
        images_.push_back(PauliString::single(n, q, 'X'));
    }
    for (std::size_t q = 0; q < n; q++) {
        images_.push_back(PauliString::single(n, q, 'Z'));
    }
}

SymplecticOp SymplecticOp::from_matrix(const F2Matrix &s, const BitVec &r) {
    if (!s.square() || s.rows() % 2 || r.size() != s.rows()) {
        throw DimensionMismatch("symplectic matrix must be 2n x 2n with 2n signs");
    }
    std::size_t n = s.rows() / 2;
    SymplecticOp op(n);
    for (std::size_t j = 0; j < 2 * n; j++) {
        PauliString p(n);
        for (std::size_t k = 0; k < n; k++) {
            p.x.set(k, s.get(k, j));
            p.z.set(k, s.get(n + k, j));
        }
        p.phase = static_cast<std::uint8_t>((2 * r.get(j) + (p.x & p.z).popcount()) & 3);
        op.images_[j] = std::move(p);
    }
    return op;
}

SymplecticOp SymplecticOp::from_pauli(const PauliString &p) {
    std::size_t n = p.num_qubits();
    SymplecticOp op(n);
    for (std::size_t q = 0; q < n; q++) {
        if (p.z.get(q)) {
            op.images_[q].phase ^= 2;
        }
        if (p.x.get(q)) {
            op.images_[n + q].phase ^= 2;
        }
    }
    return op;
}

F2Matrix SymplecticOp::matrix() const {
    F2Matrix s(2 * n_, 2 * n_);
    for (std::size_t j = 0; j < 2 * n_; j++) {
        const auto &p = images_[j];
        for (std::size_t k = 0; k < n_; k++) {
            if (p.x.get(k)) {
                s.set(k, j, true);
            }
            if (p.z.get(k)) {
                s.set(n_ + k, j, true);
            }
        }
    }
    return s;
}

BitVec SymplecticOp::signs() const {
    BitVec r(2 * n_);
    for (std::size_t j = 0; j < 2 * n_; j++) {
        std::uint8_t lp = images_[j].letter_phase();
        if (lp & 1) {
            throw std::logic_error("generator image is not Hermitian");
        }
        r.set(j, lp == 2);
    }
    return r;
}

F2Matrix omega(std::size_t n) {
    F2Matrix w(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; k++) {
        w.set(k, n + k, true);
        w.set(n + k, k, true);
    }
    return w;
}

bool check_symplectic(const F2Matrix &s) {
    if (!s.square() || s.rows() % 2) {
        return false;
    }
    F2Matrix w = omega(s.rows() / 2);
    return s.transpose() * w * s == w;
}

bool check_symplectic(const SymplecticOp &op) {
    return check_symplectic(op.matrix());
}

SymplecticOp gen_mq(MqBasis basis, const F2Matrix &xi) {
    if (!xi.square() || !xi.is_symmetric()) {
        throw NonSymmetricXi();
    }
    std::size_t n = xi.rows();
    F2Matrix id = F2Matrix::identity(n);
    F2Matrix zero = F2Matrix::zeros(n);
    if (basis == MqBasis::Z) {
        return SymplecticOp::from_matrix(F2Matrix::from_blocks(id, zero, xi, id));
    }
    return SymplecticOp::from_matrix(F2Matrix::from_blocks(id, xi, zero, id));
}

SymplecticOp gen_cnot(std::size_t n, std::size_t control, std::size_t target) {
    if (control >= n || target >= n) {
        throw std::out_of_range("CNOT qubit out of range");
    }
    if (control == target) {
        throw std::invalid_argument("CNOT control equals target");
    }
    F2Matrix a = F2Matrix::identity(n) + F2Matrix::elementary(n, target, control);
    F2Matrix b = F2Matrix::identity(n) + F2Matrix::elementary(n, control, target);
    F2Matrix zero = F2Matrix::zeros(n);
    return SymplecticOp::from_matrix(F2Matrix::from_blocks(a, zero, zero, b));
}

SymplecticOp gen_linear(const F2Matrix &a) {
    F2Matrix zero = F2Matrix::zeros(a.rows());
    return SymplecticOp::from_matrix(F2Matrix::from_blocks(a, zero, zero, invert(a).transpose()));
}

PauliString conjugate_pauli(const SymplecticOp &op, const PauliString &p) {
    std::size_t n = op.num_qubits();
    if (p.num_qubits() != n) {
        throw DimensionMismatch("Pauli and operator sizes differ");
    }
    PauliString out(n);
    out.phase = p.phase;
    for (std::size_t q = 0; q < n; q++) {
        if (p.x.get(q)) {
            out *= op.x_image(q);
        }
    }
    for (std::size_t q = 0; q < n; q++) {
        if (p.z.get(q)) {
            out *= op.z_image(q);
        }
    }
    return out;
}

SymplecticOp compose(const SymplecticOp &f, const SymplecticOp &g) {
    if (f.num_qubits() != g.num_qubits()) {
        throw DimensionMismatch("composing operators on different qubit counts");
    }
    SymplecticOp out = g;
    for (auto &img : out.images()) {
        img = conjugate_pauli(f, img);
    }
    return out;
}

std::optional<PauliString> equal_up_to_pauli(const SymplecticOp &f, const SymplecticOp &g) {
    if (f.num_qubits() != g.num_qubits()) {
        throw DimensionMismatch("comparing operators on different qubit counts");
    }
    std::size_t n = f.num_qubits();
    F2Matrix s = g.matrix();
    if (f.matrix() != s) {
        return std::nullopt;
    }
    BitVec d = f.signs() ^ g.signs();
    // pairing(P, S e_j) = d_j for every generator j has the solution P = S (d_z | d_x).
    BitVec swapped(2 * n);
    for (std::size_t k = 0; k < n; k++) {
        swapped.set(k, d.get(n + k));
        swapped.set(n + k, d.get(k));
    }
    BitVec v = s * swapped;
    PauliString p(n);
    for (std::size_t k = 0; k < n; k++) {
        p.x.set(k, v.get(k));
        p.z.set(k, v.get(n + k));
    }
    p.phase = static_cast<std::uint8_t>((p.x & p.z).popcount() & 3);
    return p;
}

SymplecticOp inverse(const SymplecticOp &op) {
    std::size_t n = op.num_qubits();
    F2Matrix w = omega(n);
    F2Matrix s_inv = w * op.matrix().transpose() * w;
    SymplecticOp guess = SymplecticOp::from_matrix(s_inv);
    auto residue = equal_up_to_pauli(compose(op, guess), SymplecticOp::identity(n));
    if (!residue) {
        throw std::logic_error("operator is not symplectic");
    }
    return compose(guess, SymplecticOp::from_pauli(*residue));
}

}  // namespace cliffmq
