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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace cliffmq {

using word_t = std::uint64_t;
inline constexpr std::size_t WORD_BITS = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
    return (bits + WORD_BITS - 1) / WORD_BITS;
}

/// Packed vector over GF(2). Padding bits past `size()` are kept zero.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), words_(words_for(n), 0) {
    }
    static BitVec from_string(const std::string &bits);
    static BitVec unit(std::size_t n, std::size_t k) {
        BitVec v(n);
        v.set(k, true);
        return v;
    }

    std::size_t size() const {
        return n_;
    }
    bool get(std::size_t k) const {
        return (words_[k / WORD_BITS] >> (k % WORD_BITS)) & 1;
    }
    void set(std::size_t k, bool b) {
        word_t m = word_t{1} << (k % WORD_BITS);
        if (b) {
            words_[k / WORD_BITS] |= m;
        } else {
            words_[k / WORD_BITS] &= ~m;
        }
    }
    void flip(std::size_t k) {
        words_[k / WORD_BITS] ^= word_t{1} << (k % WORD_BITS);
    }
    bool operator[](std::size_t k) const {
        return get(k);
    }

    std::span<word_t> words() {
        return words_;
    }
    std::span<const word_t> words() const {
        return words_;
    }

    BitVec &operator^=(const BitVec &o);
    BitVec operator^(const BitVec &o) const {
        BitVec r = *this;
        r ^= o;
        return r;
    }
    BitVec operator&(const BitVec &o) const;

    std::size_t popcount() const;
    bool any() const;
    /// Inner product mod 2.
    bool dot(const BitVec &o) const;

    std::string str() const;
    bool operator==(const BitVec &) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<word_t> words_;
};

/// A CNOT gate as it appears in a linear reversible circuit.
struct CnotStep {
    std::size_t control;
    std::size_t target;
    bool operator==(const CnotStep &) const = default;
};

/// Dense matrix over GF(2), rows packed into 64-bit words.
class F2Matrix {
   public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    static F2Matrix zeros(std::size_t n) {
        return F2Matrix(n, n);
    }
    static F2Matrix identity(std::size_t n);
    /// The n x n matrix with a single 1 at (i, j).
    static F2Matrix elementary(std::size_t n, std::size_t i, std::size_t j);
    /// Rows given as strings of '0'/'1'.
    static F2Matrix from_rows(const std::vector<std::string> &rows);
    static F2Matrix permutation(std::span<const std::size_t> perm);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool square() const {
        return rows_ == cols_;
    }

    bool get(std::size_t r, std::size_t c) const {
        return (row(r)[c / WORD_BITS] >> (c % WORD_BITS)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool b) {
        word_t m = word_t{1} << (c % WORD_BITS);
        auto w = row(r);
        if (b) {
            w[c / WORD_BITS] |= m;
        } else {
            w[c / WORD_BITS] &= ~m;
        }
    }
    void flip(std::size_t r, std::size_t c) {
        row(r)[c / WORD_BITS] ^= word_t{1} << (c % WORD_BITS);
    }

    std::span<word_t> row(std::size_t r) {
        return {data_.data() + r * stride_, stride_};
    }
    std::span<const word_t> row(std::size_t r) const {
        return {data_.data() + r * stride_, stride_};
    }
    BitVec row_vec(std::size_t r) const;
    BitVec col_vec(std::size_t c) const;
    void set_row(std::size_t r, const BitVec &v);

    /// row[dst] ^= row[src]
    void add_row(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    F2Matrix &operator+=(const F2Matrix &o);
    F2Matrix operator+(const F2Matrix &o) const {
        F2Matrix r = *this;
        r += o;
        return r;
    }
    F2Matrix operator*(const F2Matrix &o) const;
    BitVec operator*(const BitVec &v) const;

    F2Matrix transpose() const;
    F2Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const F2Matrix &b);
    /// [[a, b], [c, d]]
    static F2Matrix from_blocks(const F2Matrix &a, const F2Matrix &b, const F2Matrix &c, const F2Matrix &d);

    std::size_t rank() const;
    bool invertible() const {
        return square() && rank() == rows_;
    }
    bool is_zero() const;
    bool is_identity() const;
    bool is_symmetric() const;
    /// True when every off-diagonal entry is zero.
    bool is_diagonal() const;
    BitVec diagonal() const;

    std::string str() const;
    bool operator==(const F2Matrix &) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<word_t> data_;
};

/// Inverse, or nullopt when singular.
std::optional<F2Matrix> try_invert(const F2Matrix &a);
/// Inverse; throws SingularMatrix.
F2Matrix invert(const F2Matrix &a);

bool is_symmetric(const F2Matrix &a);

/// Basis of {x : a x = 0}.
std::vector<BitVec> kernel_basis(const F2Matrix &a);
/// Some x with a x = b, or nullopt when inconsistent.
std::optional<BitVec> solve(const F2Matrix &a, const BitVec &b);

/// CNOT list (temporal order) realizing |v> -> |Mv>; at most n^2 steps.
std::vector<CnotStep> gauss_cnot_synthesis(const F2Matrix &m);
/// The computational-basis action matrix of a CNOT list in temporal order.
F2Matrix cnot_list_matrix(std::size_t n, std::span<const CnotStep> steps);

/// Uniform element of GL(n, F2) by rejection sampling.
F2Matrix random_invertible(std::size_t n, std::mt19937_64 &rng);
/// Uniform matrix (not necessarily invertible).
F2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng);
F2Matrix random_symmetric(std::size_t n, std::mt19937_64 &rng);

/// Fixture text format: "rows cols" then one 0/1 line per row.
void write_matrix(std::ostream &out, const F2Matrix &m);
F2Matrix read_matrix(std::istream &in);

std::ostream &operator<<(std::ostream &out, const F2Matrix &m);
std::ostream &operator<<(std::ostream &out, const BitVec &v);

}  // namespace cliffmq
