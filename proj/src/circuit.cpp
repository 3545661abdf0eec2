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

#include "cliffmq/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include "cliffmq/errors.hpp"

namespace cliffmq {

namespace {

struct KeywordEntry {
    std::string_view name;
    GateKind kind;
};

constexpr KeywordEntry KEYWORDS[] = {
    {"H", GateKind::H},       {"S", GateKind::S},     {"SDG", GateKind::SDG}, {"X", GateKind::X},
    {"Y", GateKind::Y},       {"Z", GateKind::Z},     {"CNOT", GateKind::CNOT}, {"CZ", GateKind::CZ},
    {"MQX", GateKind::MQX},   {"MQZ", GateKind::MQZ}, {"PAULI", GateKind::PAULI},
};

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    return s;
}

void check_gate(std::size_t n, const Gate &g) {
    for (std::size_t q : g.qubits) {
        if (q >= n) {
            throw std::out_of_range("gate qubit " + std::to_string(q) + " out of range");
        }
    }
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
        throw std::invalid_argument("two-qubit gate on a single qubit");
    }
    if (g.is_mq() && g.xi->rows() != n) {
        throw DimensionMismatch("xi size differs from circuit width");
    }
    if (g.kind == GateKind::PAULI && (g.mu->size() != n || g.eta->size() != n)) {
        throw DimensionMismatch("Pauli masks differ from circuit width");
    }
}

// p <- p * (i Q) for a two-term Pauli product Q. Used by the pi/4 rotations.
void mul_i_zz(PauliString &p, std::size_t j, std::size_t k) {
    p.phase = static_cast<std::uint8_t>((p.phase + 1) & 3);
    p.z.flip(j);
    p.z.flip(k);
}

void mul_i_xx(PauliString &p, std::size_t j, std::size_t k) {
    bool sign = p.z.get(j) ^ p.z.get(k);
    p.phase = static_cast<std::uint8_t>((p.phase + 1 + 2 * sign) & 3);
    p.x.flip(j);
    p.x.flip(k);
}

void conj_h(PauliString &p, std::size_t q) {
    bool a = p.x.get(q);
    bool b = p.z.get(q);
    if (a && b) {
        p.phase = static_cast<std::uint8_t>((p.phase + 2) & 3);
    }
    p.x.set(q, b);
    p.z.set(q, a);
}

void conj_cnot(PauliString &p, std::size_t c, std::size_t t) {
    if (p.x.get(c)) {
        p.x.flip(t);
    }
    if (p.z.get(t)) {
        p.z.flip(c);
    }
}

void conj_mq(PauliString &p, const F2Matrix &xi, bool z_basis) {
    std::size_t n = xi.rows();
    // Every term commutes with every other, so the rotations can be applied in any order.
    const BitVec &probe = z_basis ? p.x : p.z;
    for (std::size_t k = 0; k < n; k++) {
        if (xi.get(k, k) && probe.get(k)) {
            p.phase = static_cast<std::uint8_t>((p.phase + 2) & 3);
        }
    }
    BitVec snapshot = probe;
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t k = j + 1; k < n; k++) {
            if (xi.get(j, k) && (snapshot.get(j) != snapshot.get(k))) {
                if (z_basis) {
                    mul_i_zz(p, j, k);
                } else {
                    mul_i_xx(p, j, k);
                }
            }
        }
    }
}

std::size_t parse_index(const std::string &tok, std::size_t n, std::size_t line) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError(line, "expected a qubit index, got '" + tok + "'");
    }
    std::size_t q = std::stoull(tok);
    if (q >= n) {
        throw QubitOutOfRange(line, q);
    }
    return q;
}

BitVec parse_bits(const std::string &tok, std::size_t n, std::size_t line) {
    if (tok.size() != n || tok.find_first_not_of("01") != std::string::npos) {
        throw ParseError(line, "expected " + std::to_string(n) + " bits, got '" + tok + "'");
    }
    return BitVec::from_string(tok);
}

}  // namespace

std::string_view gate_name(GateKind kind) {
    for (const auto &e : KEYWORDS) {
        if (e.kind == kind) {
            return e.name;
        }
    }
    return "?";
}

Gate Gate::single(GateKind kind, std::size_t q) {
    if (kind > GateKind::Z) {
        throw std::invalid_argument("not a single-qubit gate kind");
    }
    return Gate{kind, {q}, std::nullopt, std::nullopt, std::nullopt};
}

Gate Gate::cnot(std::size_t control, std::size_t target) {
    if (control == target) {
        throw std::invalid_argument("CNOT control equals target");
    }
    return Gate{GateKind::CNOT, {control, target}, std::nullopt, std::nullopt, std::nullopt};
}

Gate Gate::cz(std::size_t a, std::size_t b) {
    if (a == b) {
        throw std::invalid_argument("CZ on a single qubit");
    }
    return Gate{GateKind::CZ, {a, b}, std::nullopt, std::nullopt, std::nullopt};
}

Gate Gate::mq(MqBasis basis, F2Matrix xi) {
    if (!xi.square() || !xi.is_symmetric()) {
        throw NonSymmetricXi();
    }
    return Gate{basis == MqBasis::Z ? GateKind::MQZ : GateKind::MQX, {}, std::move(xi), std::nullopt, std::nullopt};
}

Gate Gate::pauli(BitVec mu, BitVec eta) {
    if (mu.size() != eta.size()) {
        throw DimensionMismatch("Pauli masks differ in length");
    }
    return Gate{GateKind::PAULI, {}, std::nullopt, std::move(mu), std::move(eta)};
}

void Circuit::append(Gate g) {
    check_gate(num_qubits, g);
    gates.push_back(std::move(g));
}

void Circuit::append(const Circuit &other) {
    if (other.num_qubits != num_qubits) {
        throw DimensionMismatch("appending a circuit of different width");
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

std::size_t count_mq(const Circuit &c) {
    return std::count_if(c.gates.begin(), c.gates.end(), [](const Gate &g) { return g.is_mq(); });
}

Circuit parse_circuit(std::istream &in) {
    std::optional<Circuit> circuit;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        line++;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.resize(hash);
        }
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        std::string kw = upper(tok[0]);
        if (!circuit) {
            if (kw != "QUBITS" || tok.size() != 2 ||
                tok[1].find_first_not_of("0123456789") != std::string::npos) {
                throw ParseError(line, "expected header 'qubits <n>'");
            }
            circuit.emplace(std::stoull(tok[1]));
            continue;
        }
        std::size_t n = circuit->num_qubits;
        const KeywordEntry *entry = nullptr;
        for (const auto &e : KEYWORDS) {
            if (e.name == kw) {
                entry = &e;
            }
        }
        if (!entry) {
            throw ParseError(line, "unknown gate '" + tok[0] + "'");
        }
        GateKind kind = entry->kind;
        auto expect_args = [&](std::size_t k) {
            if (tok.size() != k + 1) {
                throw ParseError(line, std::string(entry->name) + " takes " + std::to_string(k) + " argument(s)");
            }
        };
        if (kind <= GateKind::Z) {
            expect_args(1);
            circuit->gates.push_back(Gate::single(kind, parse_index(tok[1], n, line)));
        } else if (kind == GateKind::CNOT || kind == GateKind::CZ) {
            expect_args(2);
            std::size_t a = parse_index(tok[1], n, line);
            std::size_t b = parse_index(tok[2], n, line);
            if (a == b) {
                throw ParseError(line, "two-qubit gate needs distinct qubits");
            }
            circuit->gates.push_back(kind == GateKind::CNOT ? Gate::cnot(a, b) : Gate::cz(a, b));
        } else if (kind == GateKind::MQX || kind == GateKind::MQZ) {
            expect_args(1);
            std::vector<std::string> rows;
            std::stringstream rs(tok[1]);
            for (std::string r; std::getline(rs, r, ';');) {
                rows.push_back(r);
            }
            if (rows.size() != n) {
                throw ParseError(line, "xi needs " + std::to_string(n) + " rows");
            }
            F2Matrix xi(n, n);
            for (std::size_t r = 0; r < n; r++) {
                xi.set_row(r, parse_bits(rows[r], n, line));
            }
            if (!xi.is_symmetric()) {
                throw XiNotSymmetric(line);
            }
            circuit->gates.push_back(Gate::mq(kind == GateKind::MQZ ? MqBasis::Z : MqBasis::X, std::move(xi)));
        } else {
            expect_args(2);
            circuit->gates.push_back(Gate::pauli(parse_bits(tok[1], n, line), parse_bits(tok[2], n, line)));
        }
    }
    if (!circuit) {
        throw ParseError(line, "missing 'qubits <n>' header");
    }
    return std::move(*circuit);
}

Circuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_circuit(in);
}

std::string serialize(const Gate &g) {
    std::string s(gate_name(g.kind));
    if (g.is_mq()) {
        s += ' ';
        for (std::size_t r = 0; r < g.xi->rows(); r++) {
            if (r) {
                s += ';';
            }
            s += g.xi->row_vec(r).str();
        }
    } else if (g.kind == GateKind::PAULI) {
        s += ' ' + g.mu->str() + ' ' + g.eta->str();
    } else {
        for (std::size_t q : g.qubits) {
            s += ' ' + std::to_string(q);
        }
    }
    return s;
}

std::string serialize(const Circuit &c) {
    std::string s = "qubits " + std::to_string(c.num_qubits) + "\n";
    for (const auto &g : c.gates) {
        s += serialize(g);
        s += '\n';
    }
    return s;
}

void conjugate_by_gate(const Gate &g, PauliString &p) {
    auto add_phase = [&](unsigned k) { p.phase = static_cast<std::uint8_t>((p.phase + k) & 3); };
    switch (g.kind) {
        case GateKind::H:
            conj_h(p, g.qubits[0]);
            break;
        case GateKind::S: {
            // X -> Y = iXZ
            std::size_t q = g.qubits[0];
            if (p.x.get(q)) {
                add_phase(1);
                p.z.flip(q);
            }
            break;
        }
        case GateKind::SDG: {
            // X -> -Y = -iXZ
            std::size_t q = g.qubits[0];
            if (p.x.get(q)) {
                add_phase(3);
                p.z.flip(q);
            }
            break;
        }
        case GateKind::X:
            if (p.z.get(g.qubits[0])) {
                add_phase(2);
            }
            break;
        case GateKind::Z:
            if (p.x.get(g.qubits[0])) {
                add_phase(2);
            }
            break;
        case GateKind::Y:
            if (p.x.get(g.qubits[0]) != p.z.get(g.qubits[0])) {
                add_phase(2);
            }
            break;
        case GateKind::CNOT:
            conj_cnot(p, g.qubits[0], g.qubits[1]);
            break;
        case GateKind::CZ:
            conj_h(p, g.qubits[1]);
            conj_cnot(p, g.qubits[0], g.qubits[1]);
            conj_h(p, g.qubits[1]);
            break;
        case GateKind::MQX:
        case GateKind::MQZ:
            conj_mq(p, *g.xi, g.kind == GateKind::MQZ);
            break;
        case GateKind::PAULI:
            // Conjugation by Z^mu X^eta negates p when it anticommutes.
            if (p.x.dot(*g.mu) != p.z.dot(*g.eta)) {
                add_phase(2);
            }
            break;
    }
}

void apply_gate(SymplecticOp &op, const Gate &g) {
    check_gate(op.num_qubits(), g);
    for (auto &img : op.images()) {
        conjugate_by_gate(g, img);
    }
}

SymplecticOp gate_op(std::size_t n, const Gate &g) {
    SymplecticOp op(n);
    apply_gate(op, g);
    return op;
}

SymplecticOp to_symplectic(const Circuit &c) {
    SymplecticOp op(c.num_qubits);
    for (const auto &g : c.gates) {
        apply_gate(op, g);
    }
    return op;
}

F2Matrix linear_layer_matrix(const Circuit &c) {
    std::vector<CnotStep> steps;
    for (const auto &g : c.gates) {
        if (g.kind != GateKind::CNOT) {
            throw NonLinearGate("linear layer contains " + std::string(gate_name(g.kind)));
        }
        steps.push_back({g.qubits[0], g.qubits[1]});
    }
    return cnot_list_matrix(c.num_qubits, steps);
}

Circuit cnot_circuit(std::size_t n, std::span<const CnotStep> steps) {
    Circuit c(n);
    for (const auto &s : steps) {
        c.append(Gate::cnot(s.control, s.target));
    }
    return c;
}

Circuit relabel(const Circuit &c, std::span<const std::size_t> perm) {
    if (perm.size() != c.num_qubits) {
        throw DimensionMismatch("permutation size differs from circuit width");
    }
    F2Matrix p = F2Matrix::permutation(perm);
    F2Matrix pt = p.transpose();
    Circuit out(c.num_qubits);
    for (Gate g : c.gates) {
        for (auto &q : g.qubits) {
            q = perm[q];
        }
        if (g.xi) {
            g.xi = p * *g.xi * pt;
        }
        if (g.mu) {
            g.mu = p * *g.mu;
            g.eta = p * *g.eta;
        }
        out.gates.push_back(std::move(g));
    }
    return out;
}

std::string_view variant_name(CompileVariant v) {
    switch (v) {
        case CompileVariant::Primary:
            return "primary";
        case CompileVariant::Alternate:
            return "alternate";
        case CompileVariant::SymmetricShortcut:
            return "symmetric";
        case CompileVariant::Merged:
            return "merged";
    }
    return "?";
}

}  // namespace cliffmq
