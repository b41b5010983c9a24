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

#include "mbgate/gates.hpp"

#include <cmath>
#include <numbers>

#include "mbgate/errors.hpp"

namespace mbgate::gates {

namespace {
const Complex kI(0.0, 1.0);
}

Matrix identity(std::size_t num_qubits) {
    auto d = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
    return Matrix::Identity(d, d);
}

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

Matrix pauli_z() { return diagonal({1.0, -1.0}); }

Matrix hadamard() {
    Matrix m(2, 2);
    double r = 1.0 / std::sqrt(2.0);
    m << r, r, r, -r;
    return m;
}

Matrix phase() { return diagonal({1.0, kI}); }

Matrix pi8() { return diagonal({1.0, std::polar(1.0, std::numbers::pi / 4.0)}); }

Matrix cz() { return diagonal({1.0, 1.0, 1.0, -1.0}); }

Matrix cnot() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 1) = 1.0;
    m(2, 3) = m(3, 2) = 1.0;
    return m;
}

Matrix swap() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(3, 3) = 1.0;
    m(1, 2) = m(2, 1) = 1.0;
    return m;
}

Matrix controlled_phase() { return diagonal({1.0, 1.0, 1.0, kI}); }

Matrix toffoli() {
    Matrix m = identity(3);
    m(6, 6) = m(7, 7) = 0.0;
    m(6, 7) = m(7, 6) = 1.0;
    return m;
}

Matrix fredkin() {
    Matrix m = identity(3);
    m(5, 5) = m(6, 6) = 0.0;
    m(5, 6) = m(6, 5) = 1.0;
    return m;
}

Matrix triple_cz() { return diagonal({1.0, 1.0, 1.0, -1.0, 1.0, 1.0, -1.0, 1.0}); }

Matrix diagonal(const std::vector<Complex> &entries) {
    auto d = static_cast<Eigen::Index>(entries.size());
    Matrix m = Matrix::Zero(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        m(k, k) = entries[static_cast<std::size_t>(k)];
    }
    return m;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix embed(const Matrix &op, const std::vector<std::size_t> &targets, std::size_t num_qubits) {
    auto d = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
    Matrix out(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        StateVector col(num_qubits);
        col[static_cast<std::size_t>(j)] = 1.0;
        StateVector img = apply_matrix(col, op, QubitSubset(targets));
        for (Eigen::Index i = 0; i < d; ++i) {
            out(i, j) = img[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

double phase_distance(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw UsageError("operator shapes differ");
    }
    double v = a.squaredNorm() + b.squaredNorm() - 2.0 * std::abs((b.adjoint() * a).trace());
    return std::sqrt(std::max(0.0, v));
}

bool equal_up_to_phase(const Matrix &a, const Matrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    Complex overlap = (b.adjoint() * a).trace();
    if (std::abs(overlap) < 1e-300) {
        return a.cwiseAbs().maxCoeff() <= tol && b.cwiseAbs().maxCoeff() <= tol;
    }
    Complex phase = overlap / std::abs(overlap);
    return (a - phase * b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace mbgate::gates
