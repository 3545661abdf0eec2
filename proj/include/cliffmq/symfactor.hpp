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

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "cliffmq/f2matrix.hpp"

namespace cliffmq {

/// Which product of the two factors reproduces B.
enum class ProductOrder { S1S2, S2S1 };

/// B written as a product of two symmetric invertible matrices.
struct SymmetricPair {
    F2Matrix s1;
    F2Matrix s2;
    ProductOrder order = ProductOrder::S2S1;

    F2Matrix product() const {
        return order == ProductOrder::S2S1 ? s2 * s1 : s1 * s2;
    }
    /// Symmetry, invertibility and product all hold for b.
    bool valid_for(const F2Matrix &b) const;
    /// The same factorization re-expressed so that B = s2 * s1.
    SymmetricPair as_s2s1() const;

    bool operator==(const SymmetricPair &) const = default;
};

/// Spans {K symmetric : K B = B^T K}. Any invertible K in the span gives
/// the factorization B = K^{-1} (K B).
struct IntertwinerBasis {
    std::vector<F2Matrix> basis;
};

/// Constructive factorization B = S2 S1 through a cyclic decomposition of B.
/// Throws SingularMatrix.
SymmetricPair factor_symmetric_pair(const F2Matrix &b);

/// Pair (S1, S2) = (K B, K^{-1}) for an invertible intertwiner K.
SymmetricPair pair_from_intertwiner(const F2Matrix &b, const F2Matrix &k);
/// The K of a pair (K = S2^{-1} in the S2 S1 convention).
F2Matrix intertwiner_of(const SymmetricPair &pair);

IntertwinerBasis intertwiner_space(const F2Matrix &b);

/// Adds the selected basis elements to the pair's K. Empty when the new K is singular.
std::optional<SymmetricPair> perturb_factorization(const SymmetricPair &pair, const IntertwinerBasis &basis,
                                                   std::span<const std::size_t> moves);

/// Uniformly random element of the span (possibly singular).
F2Matrix random_intertwiner(const IntertwinerBasis &basis, std::size_t n, std::mt19937_64 &rng);

}  // namespace cliffmq
