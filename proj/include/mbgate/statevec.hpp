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

#ifndef MBGATE_STATEVEC_HPP
#define MBGATE_STATEVEC_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace mbgate {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Numerical thresholds shared by every module.
struct Tolerances {
    static constexpr double kOrthonormality = 1e-10;
    static constexpr double kUnitarity = 1e-10;
    static constexpr double kZeroProbability = 1e-12;
    static constexpr double kFidelityGap = 1e-9;
    static constexpr double kSuspiciousProbability = 1e-6;
};

/// Dense amplitudes over an n-qubit register.
///
/// Qubit 0 is the leftmost symbol of a ket string and the most significant
/// bit of the amplitude index.
class StateVector {
   public:
    StateVector() = default;
    /// All-zero amplitudes (callers fill them in).
    explicit StateVector(std::size_t num_qubits);
    StateVector(std::size_t num_qubits, std::vector<Complex> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex> &amplitudes() const { return amplitudes_; }
    std::vector<Complex> &amplitudes() { return amplitudes_; }
    Complex operator[](std::size_t k) const { return amplitudes_[k]; }
    Complex &operator[](std::size_t k) { return amplitudes_[k]; }

    double norm_squared() const;
    double norm() const;
    bool is_normalized(double tol = Tolerances::kOrthonormality) const;
    /// Throws DegenerateExpressionError on a zero vector.
    StateVector normalized() const;

    Eigen::VectorXcd to_eigen() const;
    static StateVector from_eigen(const Eigen::VectorXcd &v);

    std::string str() const;

   private:
    std::size_t num_qubits_ = 0;
    std::vector<Complex> amplitudes_{Complex(1.0, 0.0)};
};

/// A checked unitary matrix on a power-of-two dimensional space.
class Unitary {
   public:
    Unitary() = default;
    /// Throws UsageError unless the matrix is square, of power-of-two size
    /// and unitary within tolerance.
    explicit Unitary(Matrix m, double tol = Tolerances::kUnitarity);

    const Matrix &matrix() const { return m_; }
    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    std::size_t num_qubits() const { return num_qubits_; }
    Unitary adjoint() const;

   private:
    Matrix m_ = Matrix::Identity(1, 1);
    std::size_t num_qubits_ = 0;
};

/// Ordered distinct register positions.
class QubitSubset {
   public:
    QubitSubset() = default;
    /// Throws UsageError on duplicates.
    QubitSubset(std::vector<std::size_t> indices);
    QubitSubset(std::initializer_list<std::size_t> indices);

    const std::vector<std::size_t> &indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    std::size_t operator[](std::size_t k) const { return indices_[k]; }
    bool contains(std::size_t q) const;
    /// Throws UsageError if any index is outside the register.
    void check_within(std::size_t num_qubits) const;

    bool operator==(const QubitSubset &other) const = default;

   private:
    std::vector<std::size_t> indices_;
};

/// A complete orthonormal measurement basis over k qubits.
struct MeasurementBasis {
    std::size_t num_measured_qubits = 0;
    std::vector<StateVector> vectors;
};

struct BasisValidation {
    double max_overlap = 0.0;
    double max_norm_deviation = 0.0;
    std::size_t count = 0;
    std::size_t expected_count = 0;
    std::vector<std::string> problems;
    bool passed = false;
};

struct ProjectionResult {
    double probability = 0.0;
    /// Renormalized residual on the unmeasured qubits; empty on a null outcome.
    std::optional<StateVector> post_state;
    /// Residual before renormalization.
    StateVector residual;
    /// new_index[old] for unmeasured qubits, or SIZE_MAX for measured ones.
    std::vector<std::size_t> index_map;
    bool null_outcome() const { return !post_state.has_value(); }
};

StateVector make_basis_state(std::size_t num_qubits, std::string_view bits);

/// Sums coeff|bits> over the terms and renormalizes.
StateVector from_ket_expression(std::size_t num_qubits,
                                const std::vector<std::pair<Complex, std::string>> &terms);

/// Kronecker product; qubits of `a` come first.
StateVector tensor(const StateVector &a, const StateVector &b);

/// Places each piece on the listed register positions and multiplies out.
StateVector compose(std::size_t num_qubits,
                    const std::vector<std::pair<QubitSubset, StateVector>> &pieces);

/// Reorders qubits so that qubit k of the result is qubit order[k] of `state`.
StateVector permute_qubits(const StateVector &state, const std::vector<std::size_t> &order);

StateVector apply_unitary(const StateVector &state, const Unitary &u, const QubitSubset &targets);
/// Same as apply_unitary without the unitarity requirement.
StateVector apply_matrix(const StateVector &state, const Matrix &m, const QubitSubset &targets);

/// <basis_vector|_measured |state>, not renormalized.
StateVector partial_inner(const StateVector &state, const StateVector &basis_vector,
                          const QubitSubset &measured);

ProjectionResult project(const StateVector &state, const StateVector &basis_vector,
                         const QubitSubset &measured);

Complex inner(const StateVector &a, const StateVector &b);
double fidelity_up_to_phase(const StateVector &a, const StateVector &b);

BasisValidation validate_basis(const MeasurementBasis &basis);

/// Multiplies every amplitude by a unit phase so that the largest amplitude is real positive.
StateVector align_phase(const StateVector &s);

}  // namespace mbgate

#endif
