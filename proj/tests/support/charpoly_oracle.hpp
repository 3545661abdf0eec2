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

#include "cliffmq/f2matrix.hpp"

namespace cliffmq::testing {

/// Sum of |eigenvalues| of a symmetric 0/1 matrix, computed from the exact
/// characteristic polynomial: Faddeev-LeVerrier over the rationals, square-free
/// factorization, then Sturm-sequence root isolation and bisection.
double charpoly_nuclear_norm(const F2Matrix &xi);

/// Integer coefficients of det(t I - A), lowest degree first.
std::vector<long long> charpoly(const F2Matrix &a);

}  // namespace cliffmq::testing
