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

#include "mbgate/dictionary.hpp"

#include <gtest/gtest.h>

#include <unordered_set>

#include "mbgate/catalog.hpp"
#include "mbgate/errors.hpp"
#include "mbgate/gates.hpp"

using namespace mbgate;

namespace {

std::vector<Matrix> pauli_strings(std::size_t m) {
    std::vector<Matrix> ones = {gates::identity(1), gates::pauli_x(), gates::pauli_y(), gates::pauli_z()};
    std::vector<Matrix> out = {gates::identity(0)};
    for (std::size_t w = 0; w < m; ++w) {
        std::vector<Matrix> next;
        for (const auto &a : out) {
            for (const auto &b : ones) {
                next.push_back(gates::kron(a, b));
            }
        }
        out = next;
    }
    return out;
}

}  // namespace

TEST(Dictionary, PauliSizes) {
    EXPECT_EQ(CorrectionDictionary::pauli(1).size(), 4u);
    EXPECT_EQ(CorrectionDictionary::pauli(2).size(), 16u);
    EXPECT_EQ(CorrectionDictionary::pauli(3).size(), 64u);
}

TEST(Dictionary, CliffordSizes) {
    // Eight single-wire classes: {I, sz, sx, Up} x {I, sx}, up to phase.
    EXPECT_EQ(CorrectionDictionary::clifford(1).size(), 8u);
    EXPECT_EQ(CorrectionDictionary::clifford(2).size(), 128u);
}

TEST(Dictionary, ContainsIdentityAndEveryPauliString) {
    for (std::size_t m = 1; m <= 3; ++m) {
        for (const auto &d : {CorrectionDictionary::pauli(m), CorrectionDictionary::clifford(m)}) {
            EXPECT_TRUE(d.contains(gates::identity(m)));
            for (const auto &p : pauli_strings(m)) {
                EXPECT_TRUE(d.contains(p));
            }
        }
    }
}

TEST(Dictionary, EntriesAreDistinctUpToPhase) {
    auto d = CorrectionDictionary::clifford(2);
    for (std::size_t a = 0; a < d.size(); ++a) {
        for (std::size_t b = a + 1; b < d.size(); ++b) {
            ASSERT_FALSE(gates::equal_up_to_phase(d.matrix(a), d.matrix(b), 1e-6)) << a << " " << b;
        }
    }
}

TEST(Dictionary, SearchOrderFewestFactorsFirst) {
    auto d = CorrectionDictionary::clifford(2);
    EXPECT_EQ(d[0].op.render(2), "I");
    for (std::size_t k = 1; k < d.size(); ++k) {
        EXPECT_LE(d[k - 1].weight, d[k].weight);
    }
    // Weight-one local entries come before U_cz alone.
    EXPECT_EQ(d[1].op.render(2), "σz⊗I");
    auto ucz = d.find_equivalent(gates::cz());
    ASSERT_TRUE(ucz);
    EXPECT_EQ(d[*ucz].family, 1);
    EXPECT_EQ(d[*ucz].op.render(2), "Ucz");
    // sz sx is the canonical spelling of the Y class.
    auto p1 = CorrectionDictionary::pauli(1);
    EXPECT_EQ(p1[*p1.find_equivalent(gates::pauli_y())].op.render(1), "σzσx");
}

TEST(Dictionary, LookupIgnoresGlobalPhase) {
    auto d = CorrectionDictionary::clifford(2);
    Matrix target = gates::cz() * gates::kron(gates::pauli_z() * gates::phase(), gates::identity(1));
    auto k = d.find_equivalent(std::polar(1.0, 1.234) * target);
    ASSERT_TRUE(k);
    EXPECT_TRUE(gates::equal_up_to_phase(d.matrix(*k), target));
    EXPECT_FALSE(d.contains(gates::kron(gates::hadamard(), gates::identity(1))));
    EXPECT_FALSE(CorrectionDictionary::pauli(2).contains(gates::cz()));
}

TEST(Dictionary, CanonicalHashIsPhaseInvariant) {
    Matrix m = gates::kron(gates::pauli_x(), gates::phase());
    EXPECT_EQ(CorrectionDictionary::canonical_hash(m),
              CorrectionDictionary::canonical_hash(std::polar(1.0, -2.0) * m));
    EXPECT_NE(CorrectionDictionary::canonical_hash(m), CorrectionDictionary::canonical_hash(gates::identity(2)));
}

TEST(Dictionary, PropagatedContainsConjugatedFrames) {
    Matrix g = gates::toffoli();
    auto d = CorrectionDictionary::propagated(3, g);
    EXPECT_GT(d.size(), CorrectionDictionary::clifford(3).size());
    ASSERT_NE(d.target(), nullptr);
    // G (X x I x I) G^dagger is a propagated Pauli, not local.
    Matrix x0 = gates::kron(gates::pauli_x(), gates::identity(2));
    Matrix conj = g * x0 * g.adjoint();
    auto k = d.find_equivalent(conj);
    ASSERT_TRUE(k);
    EXPECT_EQ(d[*k].family, 2);
    EXPECT_FALSE(CorrectionDictionary::clifford(3).contains(conj));
    // Local classes keep their local spelling.
    auto z = d.find_equivalent(gates::kron(gates::pauli_z(), gates::identity(2)));
    ASSERT_TRUE(z);
    EXPECT_EQ(d[*z].family, 0);
    EXPECT_THROW(CorrectionDictionary::propagated(2, g), UsageError);
}

TEST(Dictionary, ForPatternUsesDeclaredVocabulary) {
    EXPECT_EQ(CorrectionDictionary::for_pattern(cnot_pattern()).size(), 16u);
    EXPECT_EQ(CorrectionDictionary::for_pattern(controlled_phase_pattern()).size(), 128u);
    EXPECT_NE(CorrectionDictionary::for_pattern(toffoli_pattern()).target(), nullptr);
}
