// Copyright 2026 The mbgate Authors
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

#include "mbgate/catalog.hpp"

#include <cmath>
#include <numbers>

#include "mbgate/errors.hpp"
#include "mbgate/gates.hpp"
#include "mbgate/printed_tables.hpp"

namespace mbgate {

namespace {

const Complex kI(0.0, 1.0);
const double kRoot = 1.0 / std::sqrt(2.0);

StateVector single_ket(char symbol) {
    switch (symbol) {
        case '0':
            return StateVector(1, {1.0, 0.0});
        case '1':
            return StateVector(1, {0.0, 1.0});
        case '+':
            return StateVector(1, {kRoot, kRoot});
        case '-':
            return StateVector(1, {kRoot, -kRoot});
        case 'm':
            return StateVector(1, {kRoot, -kI * kRoot});
        default:
            throw UsageError(std::string("unknown ket symbol '") + symbol + "'");
    }
}

GatePattern base(std::string name, std::size_t num_qubits, Unitary target, std::string target_name) {
    GatePattern p;
    p.name = std::move(name);
    p.num_qubits = num_qubits;
    p.target = std::move(target);
    p.target_name = std::move(target_name);
    return p;
}

MeasurementGroup explicit_group(std::string name, QubitSubset qubits, std::vector<StateVector> vectors,
                                std::vector<OutcomeLabel> labels) {
    MeasurementGroup g;
    g.name = std::move(name);
    g.basis.num_measured_qubits = qubits.size();
    g.qubits = std::move(qubits);
    g.basis.vectors = std::move(vectors);
    g.labels = std::move(labels);
    return g;
}

StateVector pair_state(LinkResource r) {
    switch (r) {
        case LinkResource::H:
            return h_pair();
        case LinkResource::PhiPlus:
            return bell_phi_plus();
        case LinkResource::PhiMinus:
            return bell_phi_minus();
        case LinkResource::PsiPlus:
            return bell_psi_plus();
        case LinkResource::PsiMinus:
            return bell_psi_minus();
    }
    return h_pair();
}

CorrectionOp single_wire_op(std::initializer_list<Elementary> word) {
    CorrectionOp op;
    for (auto e : word) {
        op.factors.push_back({e, {0}});
    }
    if (op.factors.empty()) {
        op.factors.push_back({Elementary::I, {}});
    }
    return op;
}

}  // namespace

StateVector product_ket(std::string_view symbols) {
    StateVector s;
    for (char c : symbols) {
        s = tensor(s, single_ket(c));
    }
    return s;
}

MeasurementGroup templated_group(std::string name, QubitSubset qubits, std::string_view ops,
                                 std::string_view plus, std::string_view minus) {
    std::size_t k = qubits.size();
    if (ops.size() != k || plus.size() != k || minus.size() != k) {
        throw UsageError("basis template length does not match the group size");
    }
    std::vector<std::size_t> flip_qubits;
    std::vector<char> flip_kind;
    for (std::size_t q = 0; q < k; ++q) {
        char c = ops[q];
        if (c == 'x' || c == 'z') {
            flip_qubits.push_back(q);
            flip_kind.push_back(c);
        } else if (c != 'i') {
            throw UsageError(std::string("unknown basis operator symbol '") + c + "'");
        }
    }
    StateVector tp = product_ket(plus);
    StateVector tm = product_ket(minus);
    MeasurementGroup g;
    g.name = std::move(name);
    g.basis.num_measured_qubits = k;
    g.labels = signed_bit_labels(flip_qubits.size());
    for (const auto &label : g.labels) {
        StateVector v(k);
        for (std::size_t a = 0; a < v.dim(); ++a) {
            v[a] = tp[a] + static_cast<double>(label.sign) * tm[a];
        }
        for (std::size_t b = 0; b < flip_qubits.size(); ++b) {
            if (label.values[b]) {
                Matrix m = flip_kind[b] == 'x' ? gates::pauli_x() : gates::pauli_z();
                v = apply_matrix(v, m, QubitSubset{flip_qubits[b]});
            }
        }
        g.basis.vectors.push_back(v.normalized());
    }
    g.qubits = std::move(qubits);
    return g;
}

StateVector ket_terms(std::size_t num_qubits, const std::vector<std::pair<Complex, std::string>> &terms) {
    return from_ket_expression(num_qubits, terms);
}

StateVector h_pair() { return ket_terms(2, {{1.0, "00"}, {1.0, "01"}, {1.0, "10"}, {-1.0, "11"}}); }
StateVector bell_phi_plus() { return ket_terms(2, {{1.0, "00"}, {1.0, "11"}}); }
StateVector bell_phi_minus() { return ket_terms(2, {{1.0, "00"}, {-1.0, "11"}}); }
StateVector bell_psi_plus() { return ket_terms(2, {{1.0, "01"}, {1.0, "10"}}); }
StateVector bell_psi_minus() { return ket_terms(2, {{1.0, "01"}, {-1.0, "10"}}); }

GatePattern single_qubit_pattern(const Unitary &u) {
    if (u.num_qubits() != 1) {
        throw UsageError("single-qubit pattern needs a 2x2 unitary");
    }
    // A = 0 (input), B = 1, C = 2 (output).
    GatePattern p = base("single-qubit", 3, u, "U");
    p.input_wires = {0};
    p.resources.push_back({{1, 2}, h_pair()});
    p.output_wires = {2};
    const Matrix paulis[4] = {gates::pauli_x(), gates::pauli_y(), gates::pauli_z(), gates::identity(1)};
    std::vector<StateVector> vectors;
    for (const auto &s : paulis) {
        Matrix op = u.matrix().adjoint() * s;
        vectors.push_back(apply_matrix(h_pair(), op, QubitSubset{0}));
    }
    p.groups.push_back(explicit_group("alpha", {0, 1}, vectors, numbered_labels(4)));
    CorrectionTable t;
    t.group_sizes = {4};
    t.entries[{0}] = single_wire_op({Elementary::SigmaX});
    t.entries[{1}] = single_wire_op({Elementary::SigmaZ, Elementary::SigmaX});
    t.entries[{2}] = single_wire_op({Elementary::SigmaZ});
    t.entries[{3}] = single_wire_op({});
    p.corrections = t;
    return p;
}

GatePattern phase_gate_pattern() {
    GatePattern p = base("phase", 3, Unitary(gates::phase()), "Up");
    p.input_wires = {0};
    p.resources.push_back({{1, 2}, bell_phi_plus()});
    p.output_wires = {2};
    std::vector<StateVector> vectors = {
        ket_terms(2, {{1.0, "00"}, {kI, "11"}}),
        ket_terms(2, {{1.0, "00"}, {-kI, "11"}}),
        ket_terms(2, {{1.0, "01"}, {kI, "10"}}),
        ket_terms(2, {{1.0, "01"}, {-kI, "10"}}),
    };
    p.groups.push_back(explicit_group("alpha", {0, 1}, vectors, numbered_labels(4)));
    p.corrections = printed_table(2);
    return p;
}

GatePattern pi8_gate_pattern() {
    GatePattern p = base("pi8", 3, Unitary(gates::pi8()), "T");
    p.input_wires = {0};
    p.resources.push_back({{1, 2}, bell_phi_plus()});
    p.output_wires = {2};
    Complex w = std::polar(1.0, -std::numbers::pi / 4.0);
    Complex v = std::polar(1.0, 3.0 * std::numbers::pi / 4.0);
    std::vector<StateVector> vectors = {
        ket_terms(2, {{1.0, "00"}, {w, "11"}}),
        ket_terms(2, {{1.0, "00"}, {v, "11"}}),
        ket_terms(2, {{1.0, "01"}, {w, "10"}}),
        ket_terms(2, {{1.0, "01"}, {v, "10"}}),
    };
    p.groups.push_back(explicit_group("alpha", {0, 1}, vectors, numbered_labels(4)));
    p.corrections = printed_table(3);
    return p;
}

// Register: a b e e' c c' d d' = 0..7; outputs c, d.
GatePattern controlled_z_configuration(LinkResource link, AlphaBasis alpha) {
    GatePattern p = base("cz", 8, Unitary(gates::cz()), "CZ");
    p.input_wires = {0, 1};
    p.resources.push_back({{2, 3}, pair_state(link)});
    p.resources.push_back({{4, 5}, bell_phi_plus()});
    p.resources.push_back({{6, 7}, bell_phi_plus()});
    if (alpha == AlphaBasis::Ghz) {
        p.groups.push_back(templated_group("alpha", {0, 2, 5}, "xxi", "000", "111"));
    } else {
        p.groups.push_back(templated_group("alpha", {0, 2, 5}, "xzi", "0+0", "1-1"));
    }
    p.groups.push_back(templated_group("beta", {1, 3, 7}, "xxi", "000", "111"));
    p.output_wires = {4, 6};
    return p;
}

GatePattern controlled_z_pattern(CzRow row) {
    if (row == CzRow::HRow) {
        return controlled_z_configuration(LinkResource::H, AlphaBasis::Ghz);
    }
    GatePattern p = controlled_z_configuration(LinkResource::PhiPlus, AlphaBasis::PlusMinus);
    p.name = "cz-bell";
    return p;
}

// Register: a b c c' d d' = 0..5.
GatePattern cz_without_link_pattern(PairBasis basis) {
    GatePattern p = base("cz-no-ee", 6, Unitary(gates::cz()), "CZ");
    p.input_wires = {0, 1};
    p.resources.push_back({{2, 3}, bell_phi_plus()});
    p.resources.push_back({{4, 5}, bell_phi_plus()});
    if (basis == PairBasis::Bell) {
        p.groups.push_back(templated_group("alpha", {0, 3}, "xi", "00", "11"));
        p.groups.push_back(templated_group("beta", {1, 5}, "xi", "00", "11"));
    } else {
        p.groups.push_back(templated_group("alpha", {0, 3}, "xi", "0+", "1-"));
        p.groups.push_back(templated_group("beta", {1, 5}, "xi", "0+", "1-"));
    }
    p.output_wires = {2, 4};
    p.notes.push_back(std::string("pair basis: ") + (basis == PairBasis::Bell ? "bell" : "h"));
    return p;
}

// Register: a, b, then e_k e'_k for k = 1..n, then c c' d d'.
GatePattern chain_cz_pattern(std::size_t n) {
    if (n < 1) {
        throw UsageError("chain length must be at least 1");
    }
    std::size_t c = 2 + 2 * n;
    GatePattern p = base("chain-cz", c + 4, Unitary(gates::cz()), "CZ");
    p.input_wires = {0, 1};
    std::vector<std::size_t> alpha = {0};
    std::vector<std::size_t> beta = {1};
    for (std::size_t k = 0; k < n; ++k) {
        p.resources.push_back({{2 + 2 * k, 3 + 2 * k}, h_pair()});
        alpha.push_back(2 + 2 * k);
        beta.push_back(3 + 2 * k);
    }
    p.resources.push_back({{c, c + 1}, bell_phi_plus()});
    p.resources.push_back({{c + 2, c + 3}, bell_phi_plus()});
    alpha.push_back(c + 1);
    beta.push_back(c + 3);
    std::string ops(n + 1, 'x');
    ops += 'i';
    std::string zeros(n + 2, '0');
    std::string ones(n + 2, '1');
    p.groups.push_back(templated_group("alpha", alpha, ops, zeros, ones));
    p.groups.push_back(templated_group("beta", beta, ops, zeros, ones));
    p.output_wires = {c, c + 2};
    double sign = n % 2 == 1 ? -1.0 : 1.0;
    p.predicted_target = Unitary(gates::diagonal({1.0, 1.0, 1.0, sign}));
    p.notes.push_back("chain length " + std::to_string(n) + "; predicted sign on |11> is " +
                      (n % 2 == 1 ? "-1" : "+1"));
    return p;
}

// Register: a b c d e f g m h n i p = 0..11; outputs m n p.
GatePattern triple_cz_pattern() {
    GatePattern p = base("triple-cz", 12, Unitary(gates::triple_cz()), "CCZ'");
    p.input_wires = {0, 1, 2};
    p.resources.push_back({{3, 4, 5}, ket_terms(3, {{1.0, "000"}, {1.0, "111"}})});
    p.resources.push_back({{6, 7}, bell_phi_plus()});
    p.resources.push_back({{8, 9}, bell_phi_plus()});
    p.resources.push_back({{10, 11}, bell_phi_plus()});
    p.groups.push_back(templated_group("alpha", {0, 3, 6}, "xzi", "0+0", "1-1"));
    p.groups.push_back(templated_group("beta", {1, 4, 8}, "xxi", "000", "111"));
    p.groups.push_back(templated_group("gamma", {2, 5, 10}, "xzi", "0+0", "1-1"));
    p.output_wires = {7, 9, 11};
    return p;
}

GatePattern controlled_phase_pattern() {
    GatePattern p = base("controlled-phase", 8, Unitary(gates::controlled_phase()), "CP");
    p.input_wires = {0, 1};
    p.resources.push_back({{2, 3}, bell_phi_plus()});
    p.resources.push_back({{4, 5}, bell_phi_plus()});
    p.resources.push_back({{6, 7}, bell_phi_plus()});
    p.groups.push_back(templated_group("alpha", {0, 2, 5}, "xzi", "0+0", "1m1"));
    p.groups.push_back(templated_group("beta", {1, 3, 7}, "xxi", "000", "111"));
    p.output_wires = {4, 6};
    p.vocabulary = Vocabulary::Clifford;
    p.corrections = printed_table(4);
    return p;
}

// Register: a b e e' c c' d d' d'' = 0..8; outputs c, d.
GatePattern cnot_pattern() {
    GatePattern p = base("cnot", 9, Unitary(gates::cnot()), "CNOT");
    p.input_wires = {0, 1};
    p.resources.push_back({{2, 3}, bell_phi_plus()});
    p.resources.push_back({{4, 5}, bell_phi_plus()});
    p.resources.push_back(
        {{6, 7, 8}, ket_terms(3, {{1.0, "000"}, {1.0, "110"}, {1.0, "101"}, {-1.0, "011"}})});
    p.groups.push_back(templated_group("alpha", {0, 2, 5, 8}, "xzxi", "0+00", "1-11"));
    p.groups.push_back(templated_group("beta", {1, 3, 7}, "xxi", "000", "111"));
    p.output_wires = {4, 6};
    p.corrections = printed_table(5);
    return p;
}

// Register: a b e e' c c' c'' d d' = 0..8; outputs c, d.
GatePattern swap_pattern(SwapResource resource) {
    GatePattern p = base("swap", 9, Unitary(gates::swap()), "SWAP");
    p.input_wires = {0, 1};
    p.resources.push_back({{2, 3}, bell_phi_plus()});
    StateVector ccc = ket_terms(3, {{1.0, "000"}, {1.0, "101"}, {1.0, "010"}, {-1.0, "111"}});
    if (resource == SwapResource::HadamardOnMiddle) {
        ccc = apply_matrix(ccc, gates::hadamard(), QubitSubset{1});
        p.notes.push_back("Hadamard applied to c'");
    }
    p.resources.push_back({{4, 5, 6}, ccc});
    p.resources.push_back({{7, 8}, bell_phi_plus()});
    p.groups.push_back(templated_group("alpha", {0, 2, 5, 8}, "xzix", "0+00", "1-11"));
    p.groups.push_back(templated_group("beta", {1, 3, 6}, "xxi", "000", "111"));
    p.output_wires = {4, 7};
    p.corrections = printed_table(6);
    return p;
}

// Register: a b c d e f g m h n i i' i'' p = 0..13; outputs m n p.
GatePattern toffoli_pattern(ToffoliVariant variant) {
    GatePattern p = base("toffoli", 14, Unitary(gates::toffoli()), "Toffoli");
    p.input_wires = {0, 1, 2};
    p.resources.push_back({{3, 4, 5}, ket_terms(3, {{1.0, "000"}, {1.0, "111"}})});
    p.resources.push_back({{6, 7}, bell_phi_plus()});
    p.resources.push_back({{8, 9}, bell_phi_plus()});
    // Ket order (i, p, i', i'').
    p.resources.push_back({{10, 13, 11, 12},
                           ket_terms(4, {{1.0, "0000"},
                                         {1.0, "1100"},
                                         {1.0, "0010"},
                                         {-1.0, "1110"},
                                         {1.0, "0001"},
                                         {1.0, "1101"},
                                         {-1.0, "0111"},
                                         {1.0, "1011"}})});
    bool literal = variant == ToffoliVariant::Literal;
    // Basis over (a, d, i'', g).
    p.groups.push_back(templated_group("alpha", {0, 3, 12, 6}, "xzix", "0+00", literal ? "1-01" : "1-11"));
    p.groups.push_back(templated_group("beta", {1, 4, 11, 8}, "xxix", "0000", "1111"));
    p.groups.push_back(templated_group("gamma", {2, 5, 10}, "xzi", "0+0", "1-1"));
    p.output_wires = {7, 9, 13};
    p.vocabulary = Vocabulary::Propagated;
    p.notes.push_back(std::string("alpha variant: ") + (literal ? "literal" : "corrected"));
    return p;
}

// Register: a b c d e f g m i i' i'' p h h' h'' n = 0..15; outputs m n p.
GatePattern fredkin_pattern(FredkinVariant variant) {
    GatePattern p = base("fredkin", 16, Unitary(gates::fredkin()), "Fredkin");
    p.input_wires = {0, 1, 2};
    p.resources.push_back({{3, 4, 5}, ket_terms(3, {{1.0, "000"}, {1.0, "111"}})});
    p.resources.push_back({{6, 7}, bell_phi_plus()});
    // Ket order (i, p, i', i'').
    p.resources.push_back({{8, 11, 9, 10},
                           ket_terms(4, {{1.0, "0000"},
                                         {1.0, "1100"},
                                         {1.0, "0010"},
                                         {-1.0, "1110"},
                                         {1.0, "0001"},
                                         {-1.0, "1001"},
                                         {-1.0, "0111"},
                                         {1.0, "1111"}})});
    // Ket order (n, h', h, h'').
    p.resources.push_back({{15, 13, 12, 14},
                           ket_terms(4, {{1.0, "0000"},
                                         {1.0, "0100"},
                                         {1.0, "0001"},
                                         {-1.0, "1101"},
                                         {1.0, "1010"},
                                         {1.0, "1110"},
                                         {1.0, "0011"},
                                         {1.0, "1111"}})});
    bool literal = variant == FredkinVariant::Literal;
    // Basis over (a, d, h'', i'', g).
    p.groups.push_back(templated_group("alpha", {0, 3, 14, 10, 6}, literal ? "xzxix" : "xzixx", "0+000", "1-111"));
    p.groups.push_back(templated_group("beta", {1, 4, 9, 12}, "xxix", "0000", "1111"));
    p.groups.push_back(templated_group("gamma", {2, 5, 13, 8}, "xzxi", "0+00", "1-11"));
    p.output_wires = {7, 15, 11};
    p.vocabulary = Vocabulary::Propagated;
    p.notes.push_back(std::string("alpha variant: ") + (literal ? "literal" : "flip-i"));
    return p;
}

Unitary parameterized_link_operator(Complex k, Complex kt, Complex p, Complex m, Complex n) {
    for (Complex z : {k, kt, p, m, n}) {
        if (std::abs(std::abs(z) - 1.0) > 1e-10) {
            throw UsageError("phase parameters must have unit modulus");
        }
    }
    // Same wiring as the CZ construction; all pairs (|00> + phase |11>).
    auto pair = [](Complex z) { return ket_terms(2, {{1.0, "00"}, {z, "11"}}); };
    StateVector alpha = product_ket("0+0");
    StateVector alpha_minus = product_ket("1-1");
    for (std::size_t a = 0; a < alpha.dim(); ++a) {
        alpha[a] += k * alpha_minus[a];
    }
    alpha = alpha.normalized();
    StateVector beta = ket_terms(3, {{1.0, "000"}, {kt, "111"}});
    Matrix columns(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        StateVector in(2);
        in[j] = 1.0;
        StateVector full = compose(8, {{{0, 1}, in}, {{2, 3}, pair(p)}, {{4, 5}, pair(m)}, {{6, 7}, pair(n)}});
        // Measure alpha on a e c' (0 2 5), leaving b e' c d d' = 1 3 4 6 7.
        StateVector r1 = partial_inner(full, alpha, {0, 2, 5});
        // beta on b e' d' -> positions 0 1 4 of the residual; leaves c d.
        StateVector r2 = partial_inner(r1, beta, {0, 1, 4});
        for (std::size_t i = 0; i < 4; ++i) {
            columns(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r2[i];
        }
    }
    Complex scale = columns(0, 0);
    return Unitary(columns / scale, 1e-9);
}

Matrix parameterized_link_formula(Complex k, Complex kt, Complex p, Complex m, Complex n) {
    return gates::diagonal({1.0, n * p * std::conj(kt), m * std::conj(k), -m * n * p * std::conj(k * kt)});
}

const std::vector<CatalogEntry> &catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"single-qubit", "single-qubit [--u <file>]", "one-qubit gate from a 2x2 unitary (default Hadamard)"},
        {"phase", "phase", "phase gate diag(1, i)"},
        {"pi8", "pi8", "pi/8 gate diag(1, e^{i pi/4})"},
        {"cz", "cz [--resource h|bell] [--basis ghz|plus-minus]", "controlled-Z through a linked pair"},
        {"cz-bell", "cz-bell", "controlled-Z with a Bell link and the |0+0>/|1-1> alpha basis"},
        {"cz-no-ee", "cz-no-ee [--basis bell|h]", "controlled-Z wiring without the link pair"},
        {"chain-cz", "chain-cz --n <length>", "controlled-Z through a chain of linked pairs"},
        {"triple-cz", "triple-cz", "three-qubit diagonal with -1 on |011> and |110>"},
        {"controlled-phase", "controlled-phase", "controlled phase diag(1,1,1,i)"},
        {"cnot", "cnot", "controlled-NOT, control on the first output"},
        {"swap", "swap [--variant plain|hadamard]", "two-qubit swap"},
        {"toffoli", "toffoli [--variant corrected|literal|auto]", "Toffoli"},
        {"fredkin", "fredkin [--variant literal|flip-i]", "controlled swap, control on the first output"},
    };
    return entries;
}

}  // namespace mbgate
