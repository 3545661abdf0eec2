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

#include "cliffmq/circuit.hpp"
#include "cliffmq/errors.hpp"
#include "cliffmq/oracle.hpp"
#include "cliffmq/symplectic.hpp"
#include "support/generators.hpp"

using namespace cliffmq;
using cliffmq::testing::random_clifford_circuit;

namespace {

PauliString pauli_from_index(std::size_t n, std::size_t idx) {
    PauliString p(n);
    for (std::size_t q = 0; q < n; q++) {
        std::size_t letter = (idx >> (2 * q)) & 3;
        p.x.set(q, letter == 1 || letter == 2);
        p.z.set(q, letter == 2 || letter == 3);
    }
    // Hermitian: Y = i X Z.
    p.phase = static_cast<std::uint8_t>((p.x & p.z).popcount() & 3);
    return p;
}

// Dense unitary whose conjugation action is gen_mq(basis, xi) with + signs:
// CZ and S for the Z basis, the Hadamard conjugate of CZ and Sdg for X.
Circuit algebraic_mq_circuit(MqBasis basis, const F2Matrix &xi) {
    std::size_t n = xi.rows();
    Circuit c(n);
    if (basis == MqBasis::X) {
        for (std::size_t q = 0; q < n; q++) {
            c.append(Gate::single(GateKind::H, q));
        }
    }
    for (std::size_t j = 0; j < n; j++) {
        if (xi.get(j, j)) {
            c.append(Gate::single(basis == MqBasis::Z ? GateKind::S : GateKind::SDG, j));
        }
        for (std::size_t k = j + 1; k < n; k++) {
            if (xi.get(j, k)) {
                c.append(Gate::cz(j, k));
            }
        }
    }
    if (basis == MqBasis::X) {
        for (std::size_t q = 0; q < n; q++) {
            c.append(Gate::single(GateKind::H, q));
        }
    }
    return c;
}

void expect_dense_conjugation(const SymplecticOp &op, const DenseUnitary &u) {
    std::size_t n = op.num_qubits();
    DenseUnitary ud = u.adjoint();
    for (std::size_t idx = 0; idx < (std::size_t{1} << (2 * n)); idx++) {
        PauliString p = pauli_from_index(n, idx);
        DenseUnitary lhs = u * pauli_matrix(p) * ud;
        DenseUnitary rhs = pauli_matrix(conjugate_pauli(op, p));
        ASSERT_TRUE(approx_equal(lhs, rhs)) << p.str() << " -> " << conjugate_pauli(op, p).str();
    }
}

}  // namespace

TEST(symplectic, pauli_product_matches_dense) {
    std::mt19937_64 rng(1);
    for (std::size_t n = 1; n <= 4; n++) {
        for (int t = 0; t < 50; t++) {
            PauliString a = pauli_from_index(n, rng() % (1u << (2 * n)));
            PauliString b = pauli_from_index(n, rng() % (1u << (2 * n)));
            a.phase = rng() & 3;
            b.phase = rng() & 3;
            DenseUnitary expected = pauli_matrix(a) * pauli_matrix(b);
            EXPECT_TRUE(approx_equal(pauli_matrix(a * b), expected));
            bool commute = approx_equal(pauli_matrix(a * b), pauli_matrix(b * a));
            EXPECT_EQ(a.commutes(b), commute);
        }
    }
}

TEST(symplectic, pauli_string_text) {
    PauliString p = PauliString::from_str("+XIZY");
    EXPECT_EQ(p.num_qubits(), 4u);
    EXPECT_TRUE(p.hermitian());
    EXPECT_EQ(p.str(), "+XIZY");
    EXPECT_EQ(PauliString::from_str("-iZZ").str(), "-iZZ");
    EXPECT_EQ(PauliString::from_str("Y") * PauliString::from_str("Y"), PauliString::from_str("+I"));
}

TEST(symplectic, pairing_matches_commutation) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 500; t++) {
        std::size_t n = 1 + rng() % 6;
        PauliString a = pauli_from_index(n, rng() % (1u << (2 * n)));
        PauliString b = pauli_from_index(n, rng() % (1u << (2 * n)));
        BitVec u(2 * n);
        BitVec v(2 * n);
        for (std::size_t q = 0; q < n; q++) {
            u.set(q, a.x.get(q));
            u.set(n + q, a.z.get(q));
            v.set(q, b.x.get(q));
            v.set(n + q, b.z.get(q));
        }
        EXPECT_EQ(pairing(u, v), !a.commutes(b));
    }
}

TEST(symplectic, check_symplectic_examples) {
    EXPECT_TRUE(check_symplectic(SymplecticOp::identity(3)));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; t++) {
        std::size_t n = 1 + rng() % 10;
        F2Matrix xi = random_symmetric(n, rng);
        EXPECT_TRUE(check_symplectic(gen_mq(MqBasis::Z, xi)));
        EXPECT_TRUE(check_symplectic(gen_mq(MqBasis::X, xi)));
    }
}

TEST(symplectic, single_bit_flips) {
    // Flipping S_ab keeps S symplectic exactly when S^T Omega e_a is the unit
    // vector e_b. For the identity that is 2n of the 4n^2 positions.
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; t++) {
        const std::size_t n = 1 + t % 4;
        F2Matrix s = t < 4 ? F2Matrix::identity(2 * n) : to_symplectic(random_clifford_circuit(n, rng)).matrix();
        F2Matrix sto = s.transpose() * omega(n);
        std::size_t survivors = 0;
        std::size_t expected = 0;
        for (std::size_t a = 0; a < 2 * n; a++) {
            for (std::size_t b = 0; b < 2 * n; b++) {
                F2Matrix f = s;
                f.flip(a, b);
                survivors += check_symplectic(f);
                expected += sto.col_vec(a) == BitVec::unit(2 * n, b);
            }
        }
        if (t < 4) {
            EXPECT_EQ(expected, 2 * n);
        }
        EXPECT_EQ(survivors, expected);
    }
}

TEST(symplectic, gen_mq_examples) {
    EXPECT_EQ(gen_mq(MqBasis::Z, F2Matrix::zeros(3)), SymplecticOp::identity(3));
    F2Matrix xi = F2Matrix::elementary(2, 0, 1) + F2Matrix::elementary(2, 1, 0);
    F2Matrix s = gen_mq(MqBasis::Z, xi).matrix();
    EXPECT_EQ(s.block(2, 0, 2, 2), xi);
    EXPECT_TRUE(s.block(0, 0, 2, 2).is_identity());
    EXPECT_TRUE(s.block(0, 2, 2, 2).is_zero());
    EXPECT_TRUE(s.block(2, 2, 2, 2).is_identity());
    EXPECT_EQ(gen_mq(MqBasis::X, xi).matrix().block(0, 2, 2, 2), xi);
    EXPECT_THROW(gen_mq(MqBasis::Z, F2Matrix::elementary(2, 0, 1)), NonSymmetricXi);

    // A diagonal entry acts as a square-root rotation with + signs.
    F2Matrix e00 = F2Matrix::elementary(1, 0, 0);
    EXPECT_EQ(conjugate_pauli(gen_mq(MqBasis::Z, e00), PauliString::from_str("X")), PauliString::from_str("+Y"));
    EXPECT_EQ(conjugate_pauli(gen_mq(MqBasis::X, e00), PauliString::from_str("Z")), PauliString::from_str("+Y"));
}

TEST(symplectic, gen_mq_matches_dense_cz_and_s) {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 4; n++) {
        for (int t = 0; t < 4; t++) {
            F2Matrix xi = random_symmetric(n, rng);
            for (MqBasis b : {MqBasis::X, MqBasis::Z}) {
                expect_dense_conjugation(gen_mq(b, xi), dense_unitary(algebraic_mq_circuit(b, xi)));
            }
        }
    }
}

TEST(symplectic, gen_cnot) {
    F2Matrix s = gen_cnot(2, 0, 1).matrix();
    EXPECT_EQ(s.block(0, 0, 2, 2), F2Matrix::from_rows({"10", "11"}));
    EXPECT_EQ(s.block(2, 2, 2, 2), F2Matrix::from_rows({"11", "01"}));
    EXPECT_EQ(compose(gen_cnot(3, 0, 2), gen_cnot(3, 0, 2)), SymplecticOp::identity(3));
    EXPECT_EQ(conjugate_pauli(gen_cnot(2, 0, 1), PauliString::from_str("XI")), PauliString::from_str("+XX"));

    // 0->2 then 0->1: A blocks multiply in reverse temporal order.
    SymplecticOp both = compose(gen_cnot(3, 0, 1), gen_cnot(3, 0, 2));
    EXPECT_EQ(both.matrix().block(0, 0, 3, 3),
              gen_cnot(3, 0, 1).matrix().block(0, 0, 3, 3) * gen_cnot(3, 0, 2).matrix().block(0, 0, 3, 3));
    Circuit c(3);
    c.append(Gate::cnot(0, 2));
    c.append(Gate::cnot(0, 1));
    expect_dense_conjugation(both, dense_unitary(c));
    EXPECT_THROW(gen_cnot(2, 1, 1), std::invalid_argument);
}

TEST(symplectic, compose_examples) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; t++) {
        std::size_t n = 1 + rng() % 8;
        SymplecticOp op = to_symplectic(random_clifford_circuit(n, rng));
        EXPECT_EQ(compose(op, SymplecticOp::identity(n)), op);
        EXPECT_EQ(compose(SymplecticOp::identity(n), op), op);
        F2Matrix xi = random_symmetric(n, rng);
        SymplecticOp sq = compose(gen_mq(MqBasis::Z, xi), gen_mq(MqBasis::Z, xi));
        EXPECT_TRUE(sq.matrix().is_identity());
    }
}

TEST(symplectic, compose_preserves_form) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 1000; t++) {
        std::size_t n = 2 + rng() % 31;
        SymplecticOp op = SymplecticOp::identity(n);
        for (int k = 0; k < 4; k++) {
            std::size_t a = rng() % n;
            std::size_t b = (a + 1 + rng() % (n - 1)) % n;
            SymplecticOp g = (rng() & 1) ? gen_cnot(n, a, b) : gen_mq(rng() & 1 ? MqBasis::X : MqBasis::Z,
                                                                     random_symmetric(n, rng));
            op = compose(g, op);
        }
        ASSERT_TRUE(check_symplectic(op));
    }
}

TEST(symplectic, composition_associative) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; t++) {
        std::size_t n = 1 + rng() % 6;
        SymplecticOp a = to_symplectic(random_clifford_circuit(n, rng));
        SymplecticOp b = to_symplectic(random_clifford_circuit(n, rng));
        SymplecticOp c = to_symplectic(random_clifford_circuit(n, rng));
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    }
}

TEST(symplectic, mq_additivity) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; t++) {
        std::size_t n = 1 + rng() % 12;
        F2Matrix a = random_symmetric(n, rng);
        F2Matrix b = random_symmetric(n, rng);
        for (MqBasis basis : {MqBasis::X, MqBasis::Z}) {
            EXPECT_EQ(compose(gen_mq(basis, a), gen_mq(basis, b)).matrix(), gen_mq(basis, a + b).matrix());
        }
    }
}

TEST(symplectic, pairing_preserved) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 200; t++) {
        std::size_t n = 1 + rng() % 8;
        F2Matrix s = to_symplectic(random_clifford_circuit(n, rng)).matrix();
        BitVec u(2 * n);
        BitVec v(2 * n);
        for (std::size_t k = 0; k < 2 * n; k++) {
            u.set(k, rng() & 1);
            v.set(k, rng() & 1);
        }
        EXPECT_EQ(pairing(s * u, s * v), pairing(u, v));
    }
}

TEST(symplectic, inverse) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; t++) {
        std::size_t n = 1 + rng() % 10;
        SymplecticOp op = to_symplectic(random_clifford_circuit(n, rng));
        EXPECT_EQ(compose(op, inverse(op)), SymplecticOp::identity(n));
        EXPECT_EQ(compose(inverse(op), op), SymplecticOp::identity(n));
    }
}

TEST(symplectic, equal_up_to_pauli) {
    std::mt19937_64 rng(12);
    std::size_t n = 3;
    SymplecticOp g = to_symplectic(random_clifford_circuit(n, rng));
    auto same = equal_up_to_pauli(g, g);
    ASSERT_TRUE(same.has_value());
    EXPECT_TRUE(same->is_identity_up_to_phase());

    SymplecticOp f = compose(SymplecticOp::from_pauli(PauliString::from_str("ZII")), g);
    auto p = equal_up_to_pauli(f, g);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->z, BitVec::from_string("100"));
    EXPECT_FALSE(p->x.any());

    SymplecticOp other = compose(gen_cnot(n, 0, 1), g);
    EXPECT_FALSE(equal_up_to_pauli(other, g).has_value());
}

TEST(symplectic, generator_signs_against_dense) {
    // Exhaustive over all Pauli strings for every generator constructor, n <= 4.
    for (std::size_t n = 2; n <= 4; n++) {
        for (std::size_t a = 0; a < n; a++) {
            for (std::size_t b = 0; b < n; b++) {
                if (a == b) {
                    continue;
                }
                Circuit c(n);
                c.append(Gate::cnot(a, b));
                expect_dense_conjugation(gen_cnot(n, a, b), dense_unitary(c));
            }
        }
        std::mt19937_64 rng(n);
        F2Matrix m = random_invertible(n, rng);
        expect_dense_conjugation(gen_linear(m), dense_unitary(cnot_circuit(n, gauss_cnot_synthesis(m))));
    }
}
