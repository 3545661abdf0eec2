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

#include <complex>
#include <vector>

#include "cliffmq/circuit.hpp"
#include "cliffmq/symfactor.hpp"
#include "cliffmq/symplectic.hpp"

namespace cliffmq {

using cplx = std::complex<double>;

inline constexpr std::size_t MAX_DENSE_QUBITS = 10;
inline constexpr double DENSE_TOL = 1e-9;

/// 2^n x 2^n complex matrix, row-major. Basis index bit k is qubit k.
struct DenseUnitary {
    std::size_t n = 0;
    std::vector<cplx> entries;

    std::size_t dim() const {
        return std::size_t{1} << n;
    }
    cplx &at(std::size_t r, std::size_t c) {
        return entries[r * dim() + c];
    }
    cplx at(std::size_t r, std::size_t c) const {
        return entries[r * dim() + c];
    }

    static DenseUnitary identity(std::size_t n);
    DenseUnitary operator*(const DenseUnitary &o) const;
    DenseUnitary adjoint() const;
};

/// Gate unitaries multiplied in temporal order. Throws TooManyQubits above 10 qubits.
DenseUnitary dense_unitary(const Circuit &c);
/// U <- G U for a single gate.
void apply_dense(DenseUnitary &u, const Gate &g);
/// i^phase X^x Z^z as a dense matrix.
DenseUnitary pauli_matrix(const PauliString &p);

bool is_unitary(const DenseUnitary &u, double tol = DENSE_TOL);
/// |tr(U^dagger V)| = 2^n within tol.
bool equal_up_to_global_phase(const DenseUnitary &u, const DenseUnitary &v, double tol = DENSE_TOL);
/// Entrywise equality within tol.
bool approx_equal(const DenseUnitary &u, const DenseUnitary &v, double tol = DENSE_TOL);

/// Equal symplectic matrices and equal sign vectors.
bool tableau_equivalent(const Circuit &a, const Circuit &b);

/// Every symmetric invertible (s1, s2) with s2 s1 = b (tagged S2S1) or s1 s2 = b
/// (tagged S1S2). Throws TooLarge above 4 qubits. Empty when b is singular.
std::vector<SymmetricPair> brute_force_pairs(const F2Matrix &b);

/// All symmetric n x n matrices, n <= 4.
std::vector<F2Matrix> all_symmetric(std::size_t n);

}  // namespace cliffmq
