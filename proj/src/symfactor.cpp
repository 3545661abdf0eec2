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

#include "cliffmq/symfactor.hpp"

#include <stdexcept>

#include "cliffmq/errors.hpp"

namespace cliffmq {

namespace {

// A B-cyclic block: Krylov vectors v, Bv, ..., B^{m-1} v and the recurrence
// B^m v = sum_j coeff[j] B^j v.
struct CyclicBlock {
    std::vector<BitVec> krylov;
    std::vector<bool> coeff;
};

// Krylov sequence of v under b until the first linear dependency.
CyclicBlock krylov_block(const F2Matrix &b, const BitVec &v) {
    std::size_t n = b.rows();
    struct EchelonRow {
        BitVec vec;
        std::size_t pivot;
        BitVec combo;
    };
    std::vector<EchelonRow> ech;
    CyclicBlock block;
    BitVec cur = v;
    while (true) {
        std::size_t m = block.krylov.size();
        BitVec red = cur;
        BitVec combo(n + 1);
        combo.set(m, true);
        for (const auto &row : ech) {
            if (red.get(row.pivot)) {
                red ^= row.vec;
                combo ^= row.combo;
            }
        }
        if (!red.any()) {
            block.coeff.resize(m);
            for (std::size_t j = 0; j < m; j++) {
                block.coeff[j] = combo.get(j);
            }
            return block;
        }
        std::size_t pivot = 0;
        while (!red.get(pivot)) {
            pivot++;
        }
        ech.push_back({std::move(red), pivot, std::move(combo)});
        block.krylov.push_back(cur);
        cur = b * cur;
    }
}

// True when the block's recurrence polynomial annihilates every vector of the subspace.
bool annihilates(const F2Matrix &b, const CyclicBlock &block, const std::vector<BitVec> &subspace) {
    std::size_t m = block.krylov.size();
    for (const auto &u : subspace) {
        BitVec acc(u.size());
        BitVec power = u;
        for (std::size_t j = 0; j < m; j++) {
            if (block.coeff[j]) {
                acc ^= power;
            }
            power = b * power;
        }
        acc ^= power;
        if (acc.any()) {
            return false;
        }
    }
    return true;
}

// Hankel sequence s_k = f(B^k v) for the functional with s_k = [k == m-1] on k < m.
std::vector<bool> hankel_sequence(const std::vector<bool> &coeff, std::size_t len) {
    std::size_t m = coeff.size();
    std::vector<bool> s(len, false);
    s[m - 1] = true;
    for (std::size_t k = m; k < len; k++) {
        bool acc = false;
        for (std::size_t j = 0; j < m; j++) {
            acc ^= coeff[j] && s[k - m + j];
        }
        s[k] = acc;
    }
    return s;
}

}  // namespace

bool SymmetricPair::valid_for(const F2Matrix &b) const {
    return s1.is_symmetric() && s2.is_symmetric() && s1.invertible() && s2.invertible() && product() == b;
}

SymmetricPair SymmetricPair::as_s2s1() const {
    if (order == ProductOrder::S2S1) {
        return *this;
    }
    return SymmetricPair{s2, s1, ProductOrder::S2S1};
}

SymmetricPair factor_symmetric_pair(const F2Matrix &b) {
    if (!b.square()) {
        throw DimensionMismatch("factorization of a non-square matrix");
    }
    if (!b.invertible()) {
        throw SingularMatrix();
    }
    std::size_t n = b.rows();
    if (b.is_symmetric()) {
        return SymmetricPair{F2Matrix::identity(n), b, ProductOrder::S2S1};
    }

    F2Matrix bt = b.transpose();
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::vector<BitVec> subspace;
    for (std::size_t k = 0; k < n; k++) {
        subspace.push_back(BitVec::unit(n, k));
    }

    std::vector<CyclicBlock> blocks;
    while (!subspace.empty()) {
        std::size_t d = subspace.size();
        std::optional<CyclicBlock> found;
        for (std::size_t attempt = 0; attempt < 256 * (n + 1) && !found; attempt++) {
            BitVec v(n);
            for (std::size_t j = 0; j < d; j++) {
                if (rng() & 1) {
                    v ^= subspace[j];
                }
            }
            if (!v.any()) {
                continue;
            }
            CyclicBlock block = krylov_block(b, v);
            if (annihilates(b, block, subspace)) {
                found = std::move(block);
            }
        }
        if (!found) {
            throw std::logic_error("no maximal vector found for cyclic decomposition");
        }
        std::size_t m = found->krylov.size();

        // Functional f with f(B^i v) = [i == m-1], then the invariant complement
        // {x in subspace : f(B^i x) = 0 for i < m}.
        F2Matrix kr(m, n);
        for (std::size_t i = 0; i < m; i++) {
            kr.set_row(i, found->krylov[i]);
        }
        auto f = solve(kr, BitVec::unit(m, m - 1));
        if (!f) {
            throw std::logic_error("Krylov vectors are dependent");
        }
        F2Matrix g(m, d);
        BitVec fi = *f;
        for (std::size_t i = 0; i < m; i++) {
            for (std::size_t j = 0; j < d; j++) {
                g.set(i, j, fi.dot(subspace[j]));
            }
            fi = bt * fi;
        }
        std::vector<BitVec> next;
        for (const auto &y : kernel_basis(g)) {
            BitVec u(n);
            for (std::size_t j = 0; j < d; j++) {
                if (y.get(j)) {
                    u ^= subspace[j];
                }
            }
            next.push_back(std::move(u));
        }
        if (next.size() != d - m) {
            throw std::logic_error("invariant complement has the wrong dimension");
        }
        subspace = std::move(next);
        blocks.push_back(std::move(*found));
    }

    // B P = P C with C block companion; H C is symmetric for the block Hankel H.
    F2Matrix p(n, n);
    F2Matrix h(n, n);
    F2Matrix hc(n, n);
    std::size_t off = 0;
    for (const auto &block : blocks) {
        std::size_t m = block.krylov.size();
        auto s = hankel_sequence(block.coeff, 2 * m);
        for (std::size_t i = 0; i < m; i++) {
            for (std::size_t r = 0; r < n; r++) {
                if (block.krylov[i].get(r)) {
                    p.set(r, off + i, true);
                }
            }
            for (std::size_t j = 0; j < m; j++) {
                h.set(off + i, off + j, s[i + j]);
                hc.set(off + i, off + j, s[i + j + 1]);
            }
        }
        off += m;
    }
    F2Matrix p_inv = invert(p);
    SymmetricPair pair{p_inv.transpose() * hc * p_inv, p * invert(h) * p.transpose(), ProductOrder::S2S1};
    if (!pair.valid_for(b)) {
        throw std::logic_error("symmetric factorization failed validation");
    }
    return pair;
}

SymmetricPair pair_from_intertwiner(const F2Matrix &b, const F2Matrix &k) {
    return SymmetricPair{k * b, invert(k), ProductOrder::S2S1};
}

F2Matrix intertwiner_of(const SymmetricPair &pair) {
    return invert(pair.as_s2s1().s2);
}

IntertwinerBasis intertwiner_space(const F2Matrix &b) {
    if (!b.square()) {
        throw DimensionMismatch("intertwiners of a non-square matrix");
    }
    if (!b.invertible()) {
        throw SingularMatrix();
    }
    std::size_t n = b.rows();
    // Unknowns are the upper triangle of K; equations are (KB)_ij = (KB)_ji for i < j.
    std::vector<std::size_t> index(n * n);
    std::size_t vars = 0;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i; j < n; j++) {
            index[i * n + j] = index[j * n + i] = vars++;
        }
    }
    F2Matrix eq(n * (n - 1) / 2, vars);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            for (std::size_t l = 0; l < n; l++) {
                if (b.get(l, j)) {
                    eq.flip(row, index[i * n + l]);
                }
                if (b.get(l, i)) {
                    eq.flip(row, index[j * n + l]);
                }
            }
            row++;
        }
    }
    IntertwinerBasis out;
    for (const auto &v : kernel_basis(eq)) {
        F2Matrix k(n, n);
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < n; j++) {
                if (v.get(index[i * n + j])) {
                    k.set(i, j, true);
                }
            }
        }
        out.basis.push_back(std::move(k));
    }
    return out;
}

std::optional<SymmetricPair> perturb_factorization(const SymmetricPair &pair, const IntertwinerBasis &basis,
                                                   std::span<const std::size_t> moves) {
    if (moves.empty()) {
        return pair;
    }
    F2Matrix b = pair.product();
    F2Matrix k = intertwiner_of(pair);
    for (std::size_t m : moves) {
        k += basis.basis.at(m);
    }
    if (!k.invertible()) {
        return std::nullopt;
    }
    return pair_from_intertwiner(b, k);
}

F2Matrix random_intertwiner(const IntertwinerBasis &basis, std::size_t n, std::mt19937_64 &rng) {
    F2Matrix k(n, n);
    for (const auto &e : basis.basis) {
        if (rng() & 1) {
            k += e;
        }
    }
    return k;
}

}  // namespace cliffmq
