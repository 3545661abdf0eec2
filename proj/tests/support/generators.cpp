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

#include "generators.hpp"

namespace cliffmq::testing {

namespace {

std::size_t pick(std::size_t n, std::mt19937_64 &rng) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::pair<std::size_t, std::size_t> pick_two(std::size_t n, std::mt19937_64 &rng) {
    std::size_t a = pick(n, rng);
    std::size_t b = pick(n - 1, rng);
    if (b >= a) {
        b++;
    }
    return {a, b};
}

BitVec random_bits(std::size_t n, std::mt19937_64 &rng) {
    BitVec v(n);
    for (std::size_t k = 0; k < n; k++) {
        v.set(k, rng() & 1);
    }
    return v;
}

}  // namespace

Gate random_gate(std::size_t n, std::mt19937_64 &rng) {
    static const GateKind singles[] = {GateKind::H, GateKind::S, GateKind::SDG,
                                       GateKind::X, GateKind::Y, GateKind::Z};
    std::size_t kind = pick(n >= 2 ? 11 : 9, rng);
    if (kind < 6) {
        return Gate::single(singles[kind], pick(n, rng));
    }
    if (kind == 6) {
        return Gate::mq(MqBasis::X, random_symmetric(n, rng));
    }
    if (kind == 7) {
        return Gate::mq(MqBasis::Z, random_symmetric(n, rng));
    }
    if (kind == 8) {
        return Gate::pauli(random_bits(n, rng), random_bits(n, rng));
    }
    auto [a, b] = pick_two(n, rng);
    return kind == 9 ? Gate::cnot(a, b) : Gate::cz(a, b);
}

Circuit random_circuit(std::size_t n, std::size_t len, std::mt19937_64 &rng) {
    Circuit c(n);
    for (std::size_t k = 0; k < len; k++) {
        c.append(random_gate(n, rng));
    }
    return c;
}

Circuit random_clifford_circuit(std::size_t n, std::mt19937_64 &rng) {
    Circuit c(n);
    std::size_t len = 8 * n * n + 8;
    for (std::size_t k = 0; k < len; k++) {
        std::size_t kind = pick(n >= 2 ? 5 : 4, rng);
        std::size_t q = pick(n, rng);
        switch (kind) {
            case 0:
                c.append(Gate::single(GateKind::H, q));
                break;
            case 1:
                c.append(Gate::single(GateKind::S, q));
                break;
            case 2:
                c.append(Gate::single(GateKind::X, q));
                break;
            case 3:
                c.append(Gate::single(GateKind::Z, q));
                break;
            default: {
                auto [a, b] = pick_two(n, rng);
                c.append(Gate::cnot(a, b));
            }
        }
    }
    return c;
}

Circuit random_cnot_circuit(std::size_t n, std::size_t len, std::mt19937_64 &rng) {
    Circuit c(n);
    for (std::size_t k = 0; k < len; k++) {
        auto [a, b] = pick_two(n, rng);
        c.append(Gate::cnot(a, b));
    }
    return c;
}

F2Matrix random_symmetric_invertible(std::size_t n, std::mt19937_64 &rng) {
    while (true) {
        F2Matrix m = random_symmetric(n, rng);
        if (m.invertible()) {
            return m;
        }
    }
}

}  // namespace cliffmq::testing
