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

#include "mbgate/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

#include "mbgate/errors.hpp"

namespace mbgate {

namespace {

std::size_t bit_of(std::size_t num_qubits, std::size_t q) { return std::size_t{1} << (num_qubits - 1 - q); }

// offsets[s] is the register index contribution of local index s over `qubits`,
// with qubits[0] as the most significant local bit.
std::vector<std::size_t> scatter_table(std::size_t num_qubits, const std::vector<std::size_t> &qubits) {
    std::size_t k = qubits.size();
    std::vector<std::size_t> offsets(std::size_t{1} << k, 0);
    for (std::size_t s = 0; s < offsets.size(); ++s) {
        std::size_t full = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (s & (std::size_t{1} << (k - 1 - j))) {
                full |= bit_of(num_qubits, qubits[j]);
            }
        }
        offsets[s] = full;
    }
    return offsets;
}

std::vector<std::size_t> complement(std::size_t num_qubits, const QubitSubset &subset) {
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if (!subset.contains(q)) {
            rest.push_back(q);
        }
    }
    return rest;
}

bool is_power_of_two(std::size_t d) { return d != 0 && (d & (d - 1)) == 0; }

std::size_t log2_exact(std::size_t d) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < d) {
        ++n;
    }
    return n;
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits)
    : num_qubits_(num_qubits), amplitudes_(std::size_t{1} << num_qubits, Complex(0.0, 0.0)) {}

StateVector::StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
        throw UsageError("amplitude count " + std::to_string(amplitudes_.size()) + " does not match " +
                         std::to_string(num_qubits) + " qubits");
    }
}

double StateVector::norm_squared() const {
    double t = 0.0;
    for (const auto &a : amplitudes_) {
        t += std::norm(a);
    }
    return t;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

bool StateVector::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

StateVector StateVector::normalized() const {
    double n = norm();
    if (n == 0.0) {
        throw DegenerateExpressionError("cannot normalize the zero vector");
    }
    StateVector out = *this;
    for (auto &a : out.amplitudes_) {
        a /= n;
    }
    return out;
}

Eigen::VectorXcd StateVector::to_eigen() const {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(dim()));
    for (std::size_t k = 0; k < dim(); ++k) {
        v(static_cast<Eigen::Index>(k)) = amplitudes_[k];
    }
    return v;
}

StateVector StateVector::from_eigen(const Eigen::VectorXcd &v) {
    std::size_t d = static_cast<std::size_t>(v.size());
    if (!is_power_of_two(d)) {
        throw UsageError("vector length is not a power of two");
    }
    std::vector<Complex> amps(v.data(), v.data() + d);
    return StateVector(log2_exact(d), std::move(amps));
}

std::string StateVector::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < dim(); ++k) {
        const Complex &a = amplitudes_[k];
        if (std::abs(a) < 1e-12) {
            continue;
        }
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%s(%.6f%+.6fi)|", first ? "" : " + ", a.real(), a.imag());
        out << buf;
        for (std::size_t q = 0; q < num_qubits_; ++q) {
            out << ((k & bit_of(num_qubits_, q)) ? '1' : '0');
        }
        out << ">";
        first = false;
    }
    if (first) {
        out << "0";
    }
    return out.str();
}

Unitary::Unitary(Matrix m, double tol) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
        throw UsageError("unitary must be square");
    }
    std::size_t d = static_cast<std::size_t>(m_.rows());
    if (!is_power_of_two(d)) {
        throw UsageError("unitary dimension " + std::to_string(d) + " is not a power of two");
    }
    Matrix g = m_.adjoint() * m_;
    double dev = (g - Matrix::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff();
    if (dev > tol) {
        throw UsageError("matrix is not unitary (max |U^dag U - I| entry = " + std::to_string(dev) + ")");
    }
    num_qubits_ = log2_exact(d);
}

Unitary Unitary::adjoint() const { return Unitary(m_.adjoint()); }

QubitSubset::QubitSubset(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    std::set<std::size_t> seen(indices_.begin(), indices_.end());
    if (seen.size() != indices_.size()) {
        throw UsageError("qubit subset has duplicate indices");
    }
}

QubitSubset::QubitSubset(std::initializer_list<std::size_t> indices)
    : QubitSubset(std::vector<std::size_t>(indices)) {}

bool QubitSubset::contains(std::size_t q) const {
    return std::find(indices_.begin(), indices_.end(), q) != indices_.end();
}

void QubitSubset::check_within(std::size_t num_qubits) const {
    for (auto q : indices_) {
        if (q >= num_qubits) {
            throw UsageError("qubit index " + std::to_string(q) + " outside a register of " +
                             std::to_string(num_qubits) + " qubits");
        }
    }
}

StateVector make_basis_state(std::size_t num_qubits, std::string_view bits) {
    if (bits.size() != num_qubits) {
        throw UsageError("bit string '" + std::string(bits) + "' does not have " + std::to_string(num_qubits) +
                         " symbols");
    }
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw UsageError("bit string '" + std::string(bits) + "' contains a symbol other than 0/1");
        }
        index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    StateVector s(num_qubits);
    s[index] = 1.0;
    return s;
}

StateVector from_ket_expression(std::size_t num_qubits,
                                const std::vector<std::pair<Complex, std::string>> &terms) {
    StateVector s(num_qubits);
    for (const auto &[coeff, bits] : terms) {
        StateVector b = make_basis_state(num_qubits, bits);
        for (std::size_t k = 0; k < s.dim(); ++k) {
            s[k] += coeff * b[k];
        }
    }
    if (s.norm_squared() < 1e-300) {
        throw DegenerateExpressionError("ket expression sums to the zero vector");
    }
    // Leave unit vectors untouched so serialized kets round-trip bit for bit.
    return s.is_normalized(1e-15) ? s : s.normalized();
}

StateVector tensor(const StateVector &a, const StateVector &b) {
    StateVector out(a.num_qubits() + b.num_qubits());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return out;
}

StateVector compose(std::size_t num_qubits, const std::vector<std::pair<QubitSubset, StateVector>> &pieces) {
    std::vector<bool> used(num_qubits, false);
    for (const auto &[subset, piece] : pieces) {
        subset.check_within(num_qubits);
        if (subset.size() != piece.num_qubits()) {
            throw UsageError("piece has " + std::to_string(piece.num_qubits()) + " qubits but is placed on " +
                             std::to_string(subset.size()));
        }
        for (auto q : subset.indices()) {
            if (used[q]) {
                throw UsageError("qubit " + std::to_string(q) + " is placed twice");
            }
            used[q] = true;
        }
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) {
        throw UsageError("some register qubit has no piece");
    }
    // Start from the first piece and grow by tensoring; then permute once.
    StateVector acc;
    std::vector<std::size_t> order_of_acc;
    for (const auto &[subset, piece] : pieces) {
        acc = tensor(acc, piece);
        order_of_acc.insert(order_of_acc.end(), subset.indices().begin(), subset.indices().end());
    }
    // acc qubit k sits on register position order_of_acc[k].
    std::vector<std::size_t> order(num_qubits);
    for (std::size_t k = 0; k < num_qubits; ++k) {
        order[order_of_acc[k]] = k;
    }
    return permute_qubits(acc, order);
}

StateVector permute_qubits(const StateVector &state, const std::vector<std::size_t> &order) {
    std::size_t n = state.num_qubits();
    if (order.size() != n) {
        throw UsageError("permutation size mismatch");
    }
    QubitSubset check(order);
    check.check_within(n);
    std::vector<std::size_t> offsets = scatter_table(n, order);
    StateVector out(n);
    for (std::size_t k = 0; k < out.dim(); ++k) {
        out[k] = state[offsets[k]];
    }
    return out;
}

StateVector apply_matrix(const StateVector &state, const Matrix &m, const QubitSubset &targets) {
    std::size_t n = state.num_qubits();
    targets.check_within(n);
    std::size_t k = targets.size();
    if (static_cast<std::size_t>(m.rows()) != (std::size_t{1} << k) || m.rows() != m.cols()) {
        throw UsageError("operator of dimension " + std::to_string(m.rows()) + " applied to " + std::to_string(k) +
                         " target qubits");
    }
    std::vector<std::size_t> t_off = scatter_table(n, targets.indices());
    std::vector<std::size_t> r_off = scatter_table(n, complement(n, targets));
    std::size_t local = t_off.size();
    StateVector out(n);
    std::vector<Complex> buf(local);
    for (std::size_t base : r_off) {
        for (std::size_t s = 0; s < local; ++s) {
            buf[s] = state[base | t_off[s]];
        }
        for (std::size_t r = 0; r < local; ++r) {
            Complex acc = 0.0;
            for (std::size_t s = 0; s < local; ++s) {
                acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) * buf[s];
            }
            out[base | t_off[r]] = acc;
        }
    }
    return out;
}

StateVector apply_unitary(const StateVector &state, const Unitary &u, const QubitSubset &targets) {
    return apply_matrix(state, u.matrix(), targets);
}

StateVector partial_inner(const StateVector &state, const StateVector &basis_vector, const QubitSubset &measured) {
    std::size_t n = state.num_qubits();
    measured.check_within(n);
    if (basis_vector.num_qubits() != measured.size()) {
        throw UsageError("basis vector has " + std::to_string(basis_vector.num_qubits()) +
                         " qubits but measures " + std::to_string(measured.size()));
    }
    std::vector<std::size_t> m_off = scatter_table(n, measured.indices());
    std::vector<std::size_t> rest = complement(n, measured);
    std::vector<std::size_t> r_off = scatter_table(n, rest);
    StateVector out(rest.size());
    // Skip basis-vector zeros; GHZ-like vectors have few nonzero amplitudes.
    std::vector<std::pair<std::size_t, Complex>> support;
    for (std::size_t s = 0; s < m_off.size(); ++s) {
        if (basis_vector[s] != Complex(0.0, 0.0)) {
            support.emplace_back(m_off[s], std::conj(basis_vector[s]));
        }
    }
    for (std::size_t r = 0; r < r_off.size(); ++r) {
        Complex acc = 0.0;
        for (const auto &[off, c] : support) {
            acc += c * state[r_off[r] | off];
        }
        out[r] = acc;
    }
    return out;
}

ProjectionResult project(const StateVector &state, const StateVector &basis_vector, const QubitSubset &measured) {
    ProjectionResult res;
    res.residual = partial_inner(state, basis_vector, measured);
    res.probability = res.residual.norm_squared();
    if (res.probability > Tolerances::kZeroProbability) {
        res.post_state = res.residual.normalized();
    }
    std::size_t n = state.num_qubits();
    res.index_map.assign(n, std::numeric_limits<std::size_t>::max());
    std::size_t next = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (!measured.contains(q)) {
            res.index_map[q] = next++;
        }
    }
    return res;
}

Complex inner(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw UsageError("inner product of states with " + std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + " qubits");
    }
    Complex acc = 0.0;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double fidelity_up_to_phase(const StateVector &a, const StateVector &b) { return std::abs(inner(a, b)); }

BasisValidation validate_basis(const MeasurementBasis &basis) {
    BasisValidation v;
    v.count = basis.vectors.size();
    v.expected_count = std::size_t{1} << basis.num_measured_qubits;
    bool sizes_ok = true;
    for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
        if (basis.vectors[i].num_qubits() != basis.num_measured_qubits) {
            v.problems.push_back("vector " + std::to_string(i) + " has " +
                                 std::to_string(basis.vectors[i].num_qubits()) + " qubits, expected " +
                                 std::to_string(basis.num_measured_qubits));
            sizes_ok = false;
        }
    }
    if (sizes_ok) {
        for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
            v.max_norm_deviation =
                std::max(v.max_norm_deviation, std::abs(basis.vectors[i].norm() - 1.0));
            for (std::size_t j = i + 1; j < basis.vectors.size(); ++j) {
                v.max_overlap = std::max(v.max_overlap, std::abs(inner(basis.vectors[i], basis.vectors[j])));
            }
        }
    }
    if (v.count != v.expected_count) {
        v.problems.push_back("completeness violation: " + std::to_string(v.count) + " vectors, expected " +
                             std::to_string(v.expected_count));
    }
    if (v.max_overlap > Tolerances::kOrthonormality) {
        v.problems.push_back("orthogonality violation: max overlap " + std::to_string(v.max_overlap));
    }
    if (v.max_norm_deviation > Tolerances::kOrthonormality) {
        v.problems.push_back("normalization violation: max deviation " + std::to_string(v.max_norm_deviation));
    }
    v.passed = v.problems.empty();
    return v;
}

StateVector align_phase(const StateVector &s) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < s.dim(); ++k) {
        if (std::abs(s[k]) > std::abs(s[best]) + 1e-12) {
            best = k;
        }
    }
    StateVector out = s;
    if (std::abs(s[best]) == 0.0) {
        return out;
    }
    Complex phase = std::conj(s[best]) / std::abs(s[best]);
    for (auto &a : out.amplitudes()) {
        a *= phase;
    }
    return out;
}

}  // namespace mbgate
