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

#include <gtest/gtest.h>

#include <cmath>

#include "mbgate/errors.hpp"
#include "mbgate/gates.hpp"
#include "mbgate/random.hpp"

using namespace mbgate;

namespace {

const double kRt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST(StateVector, BasisStateIndexIsMostSignificantFirst) {
    StateVector s = make_basis_state(3, "011");
    EXPECT_EQ(s.dim(), 8u);
    EXPECT_EQ(s[3], Complex(1.0, 0.0));
    EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(StateVector, BasisStateRejectsBadBits) {
    EXPECT_THROW(make_basis_state(2, "012"), UsageError);
    EXPECT_THROW(make_basis_state(2, "0"), UsageError);
}

TEST(StateVector, KetExpressionIsRenormalized) {
    StateVector s = from_ket_expression(2, {{1.0, "00"}, {1.0, "11"}});
    EXPECT_NEAR(std::abs(s[0] - kRt2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s[3] - kRt2), 0.0, 1e-15);
    EXPECT_THROW(from_ket_expression(2, {{1.0, "00"}, {-1.0, "00"}}), DegenerateExpressionError);
}

TEST(StateVector, ZeroVectorCannotBeNormalized) { EXPECT_THROW(StateVector(2).normalized(), DegenerateExpressionError); }

TEST(StateVector, TensorPlacesFirstFactorHigh) {
    StateVector a = make_basis_state(1, "1");
    StateVector b = make_basis_state(2, "01");
    StateVector t = tensor(a, b);
    EXPECT_EQ(t.num_qubits(), 3u);
    EXPECT_EQ(t[0b101], Complex(1.0, 0.0));
}

TEST(StateVector, ComposePlacesPiecesOnListedQubits) {
    // |1> on qubit 2, |0> on qubit 0, |1> on qubit 1.
    StateVector s = compose(3, {{QubitSubset{2}, make_basis_state(1, "1")},
                                {QubitSubset{0, 1}, make_basis_state(2, "01")}});
    EXPECT_EQ(s[0b011], Complex(1.0, 0.0));
    EXPECT_THROW(compose(3, {{QubitSubset{0, 1}, make_basis_state(2, "01")}}), UsageError);
}

TEST(StateVector, PermuteQubits) {
    StateVector s = make_basis_state(3, "110");
    // result qubit k = source qubit order[k]
    StateVector p = permute_qubits(s, {2, 0, 1});
    EXPECT_EQ(p[0b011], Complex(1.0, 0.0));
}

TEST(StateVector, ApplyUnitaryOnSubset) {
    StateVector s = make_basis_state(2, "00");
    StateVector out = apply_unitary(s, Unitary(gates::pauli_x()), QubitSubset{1});
    EXPECT_EQ(out[0b01], Complex(1.0, 0.0));
    StateVector bell = apply_unitary(apply_unitary(s, Unitary(gates::hadamard()), QubitSubset{0}),
                                     Unitary(gates::cnot()), QubitSubset{0, 1});
    EXPECT_NEAR(std::abs(bell[0] - kRt2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(bell[3] - kRt2), 0.0, 1e-15);
    // Reversed wire order makes qubit 1 the control.
    StateVector t = apply_unitary(make_basis_state(2, "01"), Unitary(gates::cnot()), QubitSubset{1, 0});
    EXPECT_EQ(t[0b11], Complex(1.0, 0.0));
}

TEST(StateVector, UnitaryChecks) {
    Matrix m = Matrix::Identity(2, 2);
    m(0, 0) = 2.0;
    EXPECT_THROW(Unitary{m}, UsageError);
    EXPECT_THROW(Unitary{Matrix::Identity(3, 3)}, UsageError);
    EXPECT_THROW(Unitary{Matrix::Identity(2, 4)}, UsageError);
    EXPECT_EQ(Unitary(gates::cz()).num_qubits(), 2u);
}

TEST(StateVector, QubitSubsetRejectsDuplicates) {
    EXPECT_THROW((QubitSubset{1, 1}), UsageError);
    EXPECT_THROW(QubitSubset({0, 3}).check_within(3), UsageError);
}

TEST(StateVector, ProjectionOnBellPair) {
    StateVector bell = from_ket_expression(2, {{1.0, "00"}, {1.0, "11"}});
    ProjectionResult r = project(bell, make_basis_state(1, "1"), QubitSubset{0});
    EXPECT_NEAR(r.probability, 0.5, 1e-15);
    ASSERT_TRUE(r.post_state);
    EXPECT_NEAR(std::abs((*r.post_state)[1]), 1.0, 1e-15);
    EXPECT_EQ(r.index_map[0], SIZE_MAX);
    EXPECT_EQ(r.index_map[1], 0u);

    ProjectionResult z = project(make_basis_state(2, "00"), make_basis_state(1, "1"), QubitSubset{1});
    EXPECT_TRUE(z.null_outcome());
    EXPECT_EQ(z.probability, 0.0);
}

TEST(StateVector, PartialInnerMatchesDirectSum) {
    std::mt19937_64 rng(7);
    StateVector s = random_state(4, rng);
    StateVector v = random_state(2, rng);
    StateVector r = partial_inner(s, v, QubitSubset{3, 1});
    for (std::size_t out = 0; out < 4; ++out) {
        Complex expect = 0.0;
        for (std::size_t m = 0; m < 4; ++m) {
            // qubit 3 is the high bit of m, qubit 1 the low bit; out = (q0, q2)
            std::size_t idx = ((out >> 1) << 3) | ((m & 1) << 2) | ((out & 1) << 1) | (m >> 1);
            expect += std::conj(v[m]) * s[idx];
        }
        EXPECT_NEAR(std::abs(r[out] - expect), 0.0, 1e-14);
    }
}

TEST(StateVector, FidelityIgnoresGlobalPhase) {
    std::mt19937_64 rng(3);
    StateVector a = random_state(3, rng);
    StateVector b = a;
    for (auto &x : b.amplitudes()) {
        x *= std::polar(1.0, 0.7);
    }
    EXPECT_NEAR(fidelity_up_to_phase(a, b), 1.0, 1e-14);
    EXPECT_NEAR(fidelity_up_to_phase(make_basis_state(1, "0"), make_basis_state(1, "1")), 0.0, 1e-15);
}

TEST(StateVector, AlignPhaseMakesLargestAmplitudeRealPositive) {
    StateVector s(1, {Complex(0.0, 0.6), Complex(0.0, -0.8)});
    StateVector a = align_phase(s);
    EXPECT_NEAR(a[1].imag(), 0.0, 1e-15);
    EXPECT_NEAR(a[1].real(), 0.8, 1e-15);
    EXPECT_NEAR(a[0].real(), -0.6, 1e-15);
}

TEST(StateVector, ValidateBasisReportsProblems) {
    MeasurementBasis bell;
    bell.num_measured_qubits = 2;
    bell.vectors = {from_ket_expression(2, {{1.0, "00"}, {1.0, "11"}}),
                    from_ket_expression(2, {{1.0, "00"}, {-1.0, "11"}}),
                    from_ket_expression(2, {{1.0, "01"}, {1.0, "10"}}),
                    from_ket_expression(2, {{1.0, "01"}, {-1.0, "10"}})};
    BasisValidation ok = validate_basis(bell);
    EXPECT_TRUE(ok.passed);
    EXPECT_LT(ok.max_overlap, 1e-15);

    MeasurementBasis short_basis = bell;
    short_basis.vectors.pop_back();
    BasisValidation missing = validate_basis(short_basis);
    EXPECT_FALSE(missing.passed);
    ASSERT_FALSE(missing.problems.empty());
    EXPECT_NE(missing.problems[0].find("completeness"), std::string::npos);

    MeasurementBasis dup = bell;
    dup.vectors[3] = dup.vectors[0];
    BasisValidation overlap = validate_basis(dup);
    EXPECT_FALSE(overlap.passed);
    EXPECT_NEAR(overlap.max_overlap, 1.0, 1e-12);
}

TEST(Random, StatesAreGenericAndSeeded) {
    std::mt19937_64 a(kDefaultSeed);
    std::mt19937_64 b(kDefaultSeed);
    for (int k = 0; k < 20; ++k) {
        StateVector x = random_state(3, a);
        StateVector y = random_state(3, b);
        EXPECT_EQ(x.amplitudes(), y.amplitudes());
        EXPECT_TRUE(x.is_normalized(1e-12));
        for (auto c : x.amplitudes()) {
            EXPECT_GT(std::abs(c), 1e-6);
        }
    }
}

TEST(Random, UnitariesAreUnitary) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 10; ++k) {
        Matrix u = random_unitary(2, rng).matrix();
        EXPECT_LT((u.adjoint() * u - Matrix::Identity(4, 4)).norm(), 1e-12);
    }
}

TEST(Gates, StandardMatrices) {
    EXPECT_EQ(gates::toffoli()(6, 7), Complex(1.0, 0.0));
    EXPECT_EQ(gates::toffoli()(7, 7), Complex(0.0, 0.0));
    EXPECT_EQ(gates::fredkin()(5, 6), Complex(1.0, 0.0));
    EXPECT_EQ(gates::cnot()(2, 3), Complex(1.0, 0.0));
    Matrix t = gates::triple_cz();
    EXPECT_EQ(t(3, 3), Complex(-1.0, 0.0));
    EXPECT_EQ(t(6, 6), Complex(-1.0, 0.0));
    EXPECT_EQ(t(7, 7), Complex(1.0, 0.0));
    EXPECT_TRUE(gates::equal_up_to_phase(gates::pauli_z() * gates::pauli_x(), Complex(0.0, 1.0) * gates::pauli_y()));
    EXPECT_FALSE(gates::equal_up_to_phase(gates::pauli_z(), gates::pauli_x()));
    EXPECT_NEAR(gates::phase_distance(gates::cz(), -gates::cz()), 0.0, 1e-12);
}

TEST(Gates, EmbedMatchesKron) {
    Matrix a = gates::kron(gates::pauli_x(), gates::identity(1));
    EXPECT_TRUE(gates::embed(gates::pauli_x(), {0}, 2).isApprox(a));
    Matrix swapped = gates::embed(gates::cnot(), {1, 0}, 2);
    EXPECT_TRUE(swapped.isApprox(gates::swap() * gates::cnot() * gates::swap()));
}
