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

#ifndef MBGATE_GATES_HPP
#define MBGATE_GATES_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "mbgate/statevec.hpp"

namespace mbgate::gates {

Matrix identity(std::size_t num_qubits);
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix hadamard();
/// diag(1, i)
Matrix phase();
/// diag(1, e^{i pi/4})
Matrix pi8();
Matrix cz();
/// Control is the first wire.
Matrix cnot();
Matrix swap();
/// diag(1,1,1,i)
Matrix controlled_phase();
Matrix toffoli();
/// Control is the first wire; swaps the other two.
Matrix fredkin();
/// diag(1,1,1,-1,1,1,-1,1): sign flips at |011> and |110> only.
Matrix triple_cz();
Matrix diagonal(const std::vector<Complex> &entries);

Matrix kron(const Matrix &a, const Matrix &b);

/// Embeds a k-qubit operator acting on `targets` into an m-qubit space.
Matrix embed(const Matrix &op, const std::vector<std::size_t> &targets, std::size_t num_qubits);

/// min over phases of the Frobenius distance between a and e^{i phi} b.
double phase_distance(const Matrix &a, const Matrix &b);

/// True iff a = e^{i phi} b within tol (entrywise, after aligning phase).
bool equal_up_to_phase(const Matrix &a, const Matrix &b, double tol = 1e-9);

}  // namespace mbgate::gates

#endif
