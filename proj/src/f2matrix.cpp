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

#include "cliffmq/f2matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "cliffmq/errors.hpp"

namespace cliffmq {

namespace {

word_t tail_mask(std::size_t bits) {
    std::size_t r = bits % WORD_BITS;
    return r == 0 ? ~word_t{0} : (word_t{1} << r) - 1;
}

void require_same_shape(const F2Matrix &a, const F2Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("matrix shapes differ");
    }
}

}  // namespace

BitVec BitVec::from_string(const std::string &bits) {
    BitVec v(bits.size());
    for (std::size_t k = 0; k < bits.size(); k++) {
        if (bits[k] != '0' && bits[k] != '1') {
            throw std::invalid_argument("bit string contains '" + std::string(1, bits[k]) + "'");
        }
        v.set(k, bits[k] == '1');
    }
    return v;
}

BitVec &BitVec::operator^=(const BitVec &o) {
    if (o.n_ != n_) {
        throw DimensionMismatch("bit vector lengths differ");
    }
    for (std::size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= o.words_[w];
    }
    return *this;
}

BitVec BitVec::operator&(const BitVec &o) const {
    if (o.n_ != n_) {
        throw DimensionMismatch("bit vector lengths differ");
    }
    BitVec r(n_);
    for (std::size_t w = 0; w < words_.size(); w++) {
        r.words_[w] = words_[w] & o.words_[w];
    }
    return r;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (word_t w : words_) {
        c += std::popcount(w);
    }
    return c;
}

bool BitVec::any() const {
    return std::any_of(words_.begin(), words_.end(), [](word_t w) { return w != 0; });
}

bool BitVec::dot(const BitVec &o) const {
    if (o.n_ != n_) {
        throw DimensionMismatch("bit vector lengths differ");
    }
    word_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & o.words_[w];
    }
    return std::popcount(acc) & 1;
}

std::string BitVec::str() const {
    std::string s(n_, '0');
    for (std::size_t k = 0; k < n_; k++) {
        if (get(k)) {
            s[k] = '1';
        }
    }
    return s;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

F2Matrix F2Matrix::elementary(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= n || j >= n) {
        throw std::out_of_range("elementary matrix index out of range");
    }
    F2Matrix m(n, n);
    m.set(i, j, true);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<std::string> &rows) {
    std::size_t nc = rows.empty() ? 0 : rows[0].size();
    F2Matrix m(rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != nc) {
            throw DimensionMismatch("ragged matrix rows");
        }
        m.set_row(r, BitVec::from_string(rows[r]));
    }
    return m;
}

F2Matrix F2Matrix::permutation(std::span<const std::size_t> perm) {
    std::size_t n = perm.size();
    F2Matrix m(n, n);
    for (std::size_t k = 0; k < n; k++) {
        m.set(perm[k], k, true);
    }
    return m;
}

BitVec F2Matrix::row_vec(std::size_t r) const {
    BitVec v(cols_);
    std::copy(row(r).begin(), row(r).end(), v.words().begin());
    return v;
}

BitVec F2Matrix::col_vec(std::size_t c) const {
    BitVec v(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        if (get(r, c)) {
            v.set(r, true);
        }
    }
    return v;
}

void F2Matrix::set_row(std::size_t r, const BitVec &v) {
    if (v.size() != cols_) {
        throw DimensionMismatch("row length differs from column count");
    }
    std::copy(v.words().begin(), v.words().end(), row(r).begin());
}

void F2Matrix::add_row(std::size_t src, std::size_t dst) {
    auto s = row(src);
    auto d = row(dst);
    for (std::size_t w = 0; w < stride_; w++) {
        d[w] ^= s[w];
    }
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a != b) {
        std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
    }
}

F2Matrix &F2Matrix::operator+=(const F2Matrix &o) {
    require_same_shape(*this, o);
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] ^= o.data_[k];
    }
    return *this;
}

F2Matrix F2Matrix::operator*(const F2Matrix &o) const {
    if (cols_ != o.rows_) {
        throw DimensionMismatch("inner dimensions differ");
    }
    F2Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; i++) {
        auto dst = r.row(i);
        auto src = row(i);
        for (std::size_t w = 0; w < stride_; w++) {
            word_t bits = src[w];
            while (bits) {
                std::size_t k = w * WORD_BITS + std::countr_zero(bits);
                bits &= bits - 1;
                auto orow = o.row(k);
                for (std::size_t v = 0; v < r.stride_; v++) {
                    dst[v] ^= orow[v];
                }
            }
        }
    }
    return r;
}

BitVec F2Matrix::operator*(const BitVec &v) const {
    if (v.size() != cols_) {
        throw DimensionMismatch("vector length differs from column count");
    }
    BitVec out(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        word_t acc = 0;
        auto src = row(r);
        for (std::size_t w = 0; w < stride_; w++) {
            acc ^= src[w] & v.words()[w];
        }
        if (std::popcount(acc) & 1) {
            out.set(r, true);
        }
    }
    return out;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        auto src = row(r);
        for (std::size_t w = 0; w < stride_; w++) {
            word_t bits = src[w];
            while (bits) {
                std::size_t c = w * WORD_BITS + std::countr_zero(bits);
                bits &= bits - 1;
                t.set(c, r, true);
            }
        }
    }
    return t;
}

F2Matrix F2Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        throw std::out_of_range("block out of range");
    }
    F2Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; r++) {
        for (std::size_t c = 0; c < nc; c++) {
            if (get(r0 + r, c0 + c)) {
                b.set(r, c, true);
            }
        }
    }
    return b;
}

void F2Matrix::set_block(std::size_t r0, std::size_t c0, const F2Matrix &b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
        throw std::out_of_range("block out of range");
    }
    for (std::size_t r = 0; r < b.rows_; r++) {
        for (std::size_t c = 0; c < b.cols_; c++) {
            set(r0 + r, c0 + c, b.get(r, c));
        }
    }
}

F2Matrix F2Matrix::from_blocks(const F2Matrix &a, const F2Matrix &b, const F2Matrix &c, const F2Matrix &d) {
    if (a.rows_ != b.rows_ || c.rows_ != d.rows_ || a.cols_ != c.cols_ || b.cols_ != d.cols_) {
        throw DimensionMismatch("incompatible block shapes");
    }
    F2Matrix m(a.rows_ + c.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(0, a.cols_, b);
    m.set_block(a.rows_, 0, c);
    m.set_block(a.rows_, a.cols_, d);
    return m;
}

std::size_t F2Matrix::rank() const {
    F2Matrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; c++) {
        std::size_t p = r;
        while (p < rows_ && !m.get(p, c)) {
            p++;
        }
        if (p == rows_) {
            continue;
        }
        m.swap_rows(p, r);
        for (std::size_t i = r + 1; i < rows_; i++) {
            if (m.get(i, c)) {
                m.add_row(r, i);
            }
        }
        r++;
    }
    return r;
}

bool F2Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](word_t w) { return w == 0; });
}

bool F2Matrix::is_identity() const {
    return square() && *this == identity(rows_);
}

bool F2Matrix::is_symmetric() const {
    if (!square()) {
        throw DimensionMismatch("symmetry test on a non-square matrix");
    }
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t j = i + 1; j < cols_; j++) {
            if (get(i, j) != get(j, i)) {
                return false;
            }
        }
    }
    return true;
}

bool F2Matrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t w = 0; w < stride_; w++) {
            word_t bits = row(i)[w];
            if (i / WORD_BITS == w) {
                bits &= ~(word_t{1} << (i % WORD_BITS));
            }
            if (bits) {
                return false;
            }
        }
    }
    return true;
}

BitVec F2Matrix::diagonal() const {
    std::size_t n = std::min(rows_, cols_);
    BitVec d(n);
    for (std::size_t k = 0; k < n; k++) {
        d.set(k, get(k, k));
    }
    return d;
}

std::string F2Matrix::str() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; r++) {
        s += row_vec(r).str();
        s += '\n';
    }
    return s;
}

std::optional<F2Matrix> try_invert(const F2Matrix &a) {
    if (!a.square()) {
        throw DimensionMismatch("inverse of a non-square matrix");
    }
    std::size_t n = a.rows();
    F2Matrix m = a;
    F2Matrix inv = F2Matrix::identity(n);
    for (std::size_t c = 0; c < n; c++) {
        std::size_t p = c;
        while (p < n && !m.get(p, c)) {
            p++;
        }
        if (p == n) {
            return std::nullopt;
        }
        m.swap_rows(p, c);
        inv.swap_rows(p, c);
        for (std::size_t i = 0; i < n; i++) {
            if (i != c && m.get(i, c)) {
                m.add_row(c, i);
                inv.add_row(c, i);
            }
        }
    }
    return inv;
}

F2Matrix invert(const F2Matrix &a) {
    auto inv = try_invert(a);
    if (!inv) {
        throw SingularMatrix();
    }
    return std::move(*inv);
}

bool is_symmetric(const F2Matrix &a) {
    return a.is_symmetric();
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(F2Matrix &m, std::size_t col_limit) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < col_limit && r < m.rows(); c++) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        m.swap_rows(p, r);
        for (std::size_t i = 0; i < m.rows(); i++) {
            if (i != r && m.get(i, c)) {
                m.add_row(r, i);
            }
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

}  // namespace

std::vector<BitVec> kernel_basis(const F2Matrix &a) {
    F2Matrix m = a;
    auto pivots = rref(m, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(m.cols());
        v.set(f, true);
        for (std::size_t r = 0; r < pivots.size(); r++) {
            if (m.get(r, f)) {
                v.set(pivots[r], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVec> solve(const F2Matrix &a, const BitVec &b) {
    if (b.size() != a.rows()) {
        throw DimensionMismatch("right-hand side length differs from row count");
    }
    F2Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t c = 0; c < a.cols(); c++) {
            if (a.get(r, c)) {
                aug.set(r, c, true);
            }
        }
        aug.set(r, a.cols(), b.get(r));
    }
    auto pivots = rref(aug, a.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); r++) {
        if (aug.get(r, a.cols())) {
            return std::nullopt;
        }
    }
    BitVec x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); r++) {
        x.set(pivots[r], aug.get(r, a.cols()));
    }
    return x;
}

std::vector<CnotStep> gauss_cnot_synthesis(const F2Matrix &m) {
    if (!m.square()) {
        throw DimensionMismatch("CNOT synthesis of a non-square matrix");
    }
    std::size_t n = m.rows();
    F2Matrix w = m;
    // Row operation "row t += row c" is left multiplication by the matrix of CNOT c->t.
    std::vector<CnotStep> ops;
    for (std::size_t c = 0; c < n; c++) {
        if (!w.get(c, c)) {
            std::size_t p = c + 1;
            while (p < n && !w.get(p, c)) {
                p++;
            }
            if (p == n) {
                throw SingularMatrix();
            }
            w.add_row(p, c);
            ops.push_back({p, c});
        }
        for (std::size_t i = 0; i < n; i++) {
            if (i != c && w.get(i, c)) {
                w.add_row(c, i);
                ops.push_back({c, i});
            }
        }
    }
    // ops_k ... ops_1 M = I, so M = ops_1 ... ops_k: the last op acts first.
    std::reverse(ops.begin(), ops.end());
    return ops;
}

F2Matrix cnot_list_matrix(std::size_t n, std::span<const CnotStep> steps) {
    F2Matrix m = F2Matrix::identity(n);
    for (const auto &s : steps) {
        if (s.control >= n || s.target >= n || s.control == s.target) {
            throw std::out_of_range("bad CNOT step");
        }
        m.add_row(s.control, s.target);
    }
    return m;
}

F2Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
    F2Matrix m(rows, cols);
    word_t last = tail_mask(cols);
    for (std::size_t r = 0; r < rows; r++) {
        auto w = m.row(r);
        for (std::size_t k = 0; k < w.size(); k++) {
            w[k] = rng();
        }
        if (!w.empty()) {
            w.back() &= last;
        }
    }
    return m;
}

F2Matrix random_invertible(std::size_t n, std::mt19937_64 &rng) {
    while (true) {
        F2Matrix m = random_matrix(n, n, rng);
        if (m.rank() == n) {
            return m;
        }
    }
}

F2Matrix random_symmetric(std::size_t n, std::mt19937_64 &rng) {
    F2Matrix m = random_matrix(n, n, rng);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < i; j++) {
            m.set(i, j, m.get(j, i));
        }
    }
    return m;
}

void write_matrix(std::ostream &out, const F2Matrix &m) {
    out << m.rows() << ' ' << m.cols() << '\n' << m.str();
}

F2Matrix read_matrix(std::istream &in) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    if (!(in >> rows >> cols)) {
        throw std::runtime_error("matrix header must be 'rows cols'");
    }
    F2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; r++) {
        std::string line;
        if (!(in >> line) || line.size() != cols) {
            throw std::runtime_error("matrix row " + std::to_string(r) + " malformed");
        }
        m.set_row(r, BitVec::from_string(line));
    }
    return m;
}

std::ostream &operator<<(std::ostream &out, const F2Matrix &m) {
    write_matrix(out, m);
    return out;
}

std::ostream &operator<<(std::ostream &out, const BitVec &v) {
    return out << v.str();
}

}  // namespace cliffmq
