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

#include "cliffmq/oracle.hpp"

#include <cmath>
#include <numbers>

#include "cliffmq/errors.hpp"

namespace cliffmq {

namespace {

constexpr cplx I_UNIT{0.0, 1.0};

void scale_row(DenseUnitary &u, std::size_t r, cplx f) {
    std::size_t d = u.dim();
    for (std::size_t c = 0; c < d; c++) {
        u.entries[r * d + c] *= f;
    }
}

void swap_row(DenseUnitary &u, std::size_t a, std::size_t b) {
    std::size_t d = u.dim();
    for (std::size_t c = 0; c < d; c++) {
        std::swap(u.entries[a * d + c], u.entries[b * d + c]);
    }
}

bool bit(std::size_t r, std::size_t q) {
    return (r >> q) & 1;
}

void apply_h(DenseUnitary &u, std::size_t q) {
    std::size_t d = u.dim();
    const double h = 1.0 / std::numbers::sqrt2;
    for (std::size_t r = 0; r < d; r++) {
        if (bit(r, q)) {
            continue;
        }
        std::size_t r1 = r | (std::size_t{1} << q);
        for (std::size_t c = 0; c < d; c++) {
            cplx a = u.entries[r * d + c];
            cplx b = u.entries[r1 * d + c];
            u.entries[r * d + c] = (a + b) * h;
            u.entries[r1 * d + c] = (a - b) * h;
        }
    }
}

void apply_x(DenseUnitary &u, std::size_t q) {
    for (std::size_t r = 0; r < u.dim(); r++) {
        if (!bit(r, q)) {
            swap_row(u, r, r | (std::size_t{1} << q));
        }
    }
}

void apply_z(DenseUnitary &u, std::size_t q, cplx f) {
    for (std::size_t r = 0; r < u.dim(); r++) {
        if (bit(r, q)) {
            scale_row(u, r, f);
        }
    }
}

// exp(-i pi/2 sum xi_kk Z_k - i pi/4 sum_{j<k} xi_jk Z_j Z_k), diagonal.
void apply_mqz(DenseUnitary &u, const F2Matrix &xi) {
    std::size_t n = u.n;
    for (std::size_t r = 0; r < u.dim(); r++) {
        int quarter_turns = 0;
        for (std::size_t j = 0; j < n; j++) {
            int zj = bit(r, j) ? -1 : 1;
            if (xi.get(j, j)) {
                quarter_turns += 2 * zj;
            }
            for (std::size_t k = j + 1; k < n; k++) {
                if (xi.get(j, k)) {
                    quarter_turns += zj * (bit(r, k) ? -1 : 1);
                }
            }
        }
        double theta = quarter_turns * std::numbers::pi / 4.0;
        scale_row(u, r, std::polar(1.0, -theta));
    }
}

}  // namespace

DenseUnitary DenseUnitary::identity(std::size_t n) {
    DenseUnitary u;
    u.n = n;
    u.entries.assign(u.dim() * u.dim(), 0.0);
    for (std::size_t k = 0; k < u.dim(); k++) {
        u.at(k, k) = 1.0;
    }
    return u;
}

DenseUnitary DenseUnitary::operator*(const DenseUnitary &o) const {
    std::size_t d = dim();
    DenseUnitary r;
    r.n = n;
    r.entries.assign(d * d, 0.0);
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t k = 0; k < d; k++) {
            cplx a = at(i, k);
            if (a == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < d; j++) {
                r.entries[i * d + j] += a * o.entries[k * d + j];
            }
        }
    }
    return r;
}

DenseUnitary DenseUnitary::adjoint() const {
    DenseUnitary r = *this;
    for (std::size_t i = 0; i < dim(); i++) {
        for (std::size_t j = 0; j < dim(); j++) {
            r.at(i, j) = std::conj(at(j, i));
        }
    }
    return r;
}

void apply_dense(DenseUnitary &u, const Gate &g) {
    switch (g.kind) {
        case GateKind::H:
            apply_h(u, g.qubits[0]);
            break;
        case GateKind::S:
            apply_z(u, g.qubits[0], I_UNIT);
            break;
        case GateKind::SDG:
            apply_z(u, g.qubits[0], -I_UNIT);
            break;
        case GateKind::X:
            apply_x(u, g.qubits[0]);
            break;
        case GateKind::Y:
            // Y = i X Z
            apply_z(u, g.qubits[0], -1.0);
            apply_x(u, g.qubits[0]);
            for (std::size_t r = 0; r < u.dim(); r++) {
                scale_row(u, r, I_UNIT);
            }
            break;
        case GateKind::Z:
            apply_z(u, g.qubits[0], -1.0);
            break;
        case GateKind::CNOT: {
            std::size_t c = g.qubits[0];
            std::size_t t = g.qubits[1];
            for (std::size_t r = 0; r < u.dim(); r++) {
                if (bit(r, c) && !bit(r, t)) {
                    swap_row(u, r, r | (std::size_t{1} << t));
                }
            }
            break;
        }
        case GateKind::CZ:
            for (std::size_t r = 0; r < u.dim(); r++) {
                if (bit(r, g.qubits[0]) && bit(r, g.qubits[1])) {
                    scale_row(u, r, -1.0);
                }
            }
            break;
        case GateKind::MQZ:
            apply_mqz(u, *g.xi);
            break;
        case GateKind::MQX:
            for (std::size_t q = 0; q < u.n; q++) {
                apply_h(u, q);
            }
            apply_mqz(u, *g.xi);
            for (std::size_t q = 0; q < u.n; q++) {
                apply_h(u, q);
            }
            break;
        case GateKind::PAULI:
            // exp(i pi/2 Z) = iZ and exp(i pi/2 X) = iX; the X factor acts first.
            for (std::size_t q = 0; q < u.n; q++) {
                if (g.eta->get(q)) {
                    apply_x(u, q);
                    for (std::size_t r = 0; r < u.dim(); r++) {
                        scale_row(u, r, I_UNIT);
                    }
                }
            }
            for (std::size_t q = 0; q < u.n; q++) {
                if (g.mu->get(q)) {
                    apply_z(u, q, -1.0);
                    for (std::size_t r = 0; r < u.dim(); r++) {
                        scale_row(u, r, I_UNIT);
                    }
                }
            }
            break;
    }
}

DenseUnitary dense_unitary(const Circuit &c) {
    if (c.num_qubits > MAX_DENSE_QUBITS) {
        throw TooManyQubits("dense simulation supports at most 10 qubits");
    }
    DenseUnitary u = DenseUnitary::identity(c.num_qubits);
    for (const auto &g : c.gates) {
        apply_dense(u, g);
    }
    return u;
}

DenseUnitary pauli_matrix(const PauliString &p) {
    std::size_t n = p.num_qubits();
    if (n > MAX_DENSE_QUBITS) {
        throw TooManyQubits("dense simulation supports at most 10 qubits");
    }
    DenseUnitary u;
    u.n = n;
    u.entries.assign(u.dim() * u.dim(), 0.0);
    std::size_t xm = 0;
    std::size_t zm = 0;
    for (std::size_t q = 0; q < n; q++) {
        xm |= std::size_t{p.x.get(q)} << q;
        zm |= std::size_t{p.z.get(q)} << q;
    }
    static const cplx powers[4] = {1.0, I_UNIT, -1.0, -I_UNIT};
    for (std::size_t r = 0; r < u.dim(); r++) {
        int sign = std::popcount(zm & r) & 1 ? 2 : 0;
        u.at(r ^ xm, r) = powers[(p.phase + sign) & 3];
    }
    return u;
}

bool is_unitary(const DenseUnitary &u, double tol) {
    DenseUnitary p = u.adjoint() * u;
    return approx_equal(p, DenseUnitary::identity(u.n), tol);
}

bool equal_up_to_global_phase(const DenseUnitary &u, const DenseUnitary &v, double tol) {
    if (u.n != v.n) {
        return false;
    }
    cplx tr = 0.0;
    for (std::size_t k = 0; k < u.entries.size(); k++) {
        tr += std::conj(u.entries[k]) * v.entries[k];
    }
    return std::abs(std::abs(tr) - static_cast<double>(u.dim())) <= tol;
}

bool approx_equal(const DenseUnitary &u, const DenseUnitary &v, double tol) {
    if (u.n != v.n) {
        return false;
    }
    for (std::size_t k = 0; k < u.entries.size(); k++) {
        if (std::abs(u.entries[k] - v.entries[k]) > tol) {
            return false;
        }
    }
    return true;
}

bool tableau_equivalent(const Circuit &a, const Circuit &b) {
    if (a.num_qubits != b.num_qubits) {
        return false;
    }
    return to_symplectic(a) == to_symplectic(b);
}

std::vector<F2Matrix> all_symmetric(std::size_t n) {
    if (n > 4) {
        throw TooLarge("symmetric enumeration supports at most 4 qubits");
    }
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i; j < n; j++) {
            slots.emplace_back(i, j);
        }
    }
    std::vector<F2Matrix> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); mask++) {
        F2Matrix m(n, n);
        for (std::size_t s = 0; s < slots.size(); s++) {
            if ((mask >> s) & 1) {
                m.set(slots[s].first, slots[s].second, true);
                m.set(slots[s].second, slots[s].first, true);
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<SymmetricPair> brute_force_pairs(const F2Matrix &b) {
    if (b.rows() > 4) {
        throw TooLarge("brute-force factorization supports at most 4 qubits");
    }
    std::vector<SymmetricPair> out;
    if (!b.invertible()) {
        return out;
    }
    for (const auto &k : all_symmetric(b.rows())) {
        auto k_inv = try_invert(k);
        if (!k_inv) {
            continue;
        }
        F2Matrix rest = *k_inv * b;
        if (rest.is_symmetric()) {
            out.push_back({rest, k, ProductOrder::S2S1});
            out.push_back({k, rest, ProductOrder::S1S2});
        }
    }
    return out;
}

}  // namespace cliffmq
