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

#include <random>

#include "cliffmq/circuit.hpp"
#include "cliffmq/f2matrix.hpp"

namespace cliffmq::testing {

/// Random gate of any kind (MQ gates with random symmetric xi, PAULI with random masks).
Gate random_gate(std::size_t n, std::mt19937_64 &rng);
Circuit random_circuit(std::size_t n, std::size_t len, std::mt19937_64 &rng);

/// Random word in H, S, CNOT and Paulis; long enough to scramble.
Circuit random_clifford_circuit(std::size_t n, std::mt19937_64 &rng);
Circuit random_cnot_circuit(std::size_t n, std::size_t len, std::mt19937_64 &rng);

/// Random invertible symmetric matrix.
F2Matrix random_symmetric_invertible(std::size_t n, std::mt19937_64 &rng);

}  // namespace cliffmq::testing
