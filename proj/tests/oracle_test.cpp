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

#include "mbgate/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "mbgate/catalog.hpp"
#include "mbgate/errors.hpp"
#include "mbgate/gates.hpp"
#include "mbgate/printed_tables.hpp"
#include "mbgate/report_io.hpp"
#include "reference_sim.hpp"

using namespace mbgate;

namespace {

StateVector generic_input(std::size_t m, std::uint64_t seed = 99) {
    std::mt19937_64 rng(seed);
    return random_state(m, rng);
}

void expect_matches_reference(const GatePattern &p, const StateVector &input) {
    auto records = enumerate_outcomes(p, input);
    auto full = refsim::full_register(p, input.amplitudes());
    ASSERT_EQ(records.size(), all_outcome_keys(p.group_sizes()).size());
    for (const auto &r : records) {
        auto ref = refsim::residual(p, full, r.key);
        for (std::size_t k = 0; k < ref.size(); ++k) {
            ASSERT_NEAR(std::abs(r.residual[k] - ref[k]), 0.0, 1e-13) << p.describe_key(r.key);
        }
    }
}

double total_probability(const std::vector<OutcomeRecord> &records) {
    double s = 0.0;
    for (const auto &r : records) {
        s += r.probability;
    }
    return s;
}

}  // namespace

TEST(Enumerate, MatchesReferenceSimulator) {
    expect_matches_reference(phase_gate_pattern(), generic_input(1));
    expect_matches_reference(controlled_z_pattern(CzRow::HRow), generic_input(2));
    expect_matches_reference(controlled_z_configuration(LinkResource::PhiPlus, AlphaBasis::Ghz), generic_input(2));
    expect_matches_reference(chain_cz_pattern(2), generic_input(2));
    expect_matches_reference(cnot_pattern(), generic_input(2));
    expect_matches_reference(swap_pattern(), generic_input(2));
    expect_matches_reference(triple_cz_pattern(), generic_input(3));
}

TEST(Enumerate, PhaseGateOnPlusIsUniform) {
    StateVector plus = from_ket_expression(1, {{1.0, "0"}, {1.0, "1"}});
    auto records = enumerate_outcomes(phase_gate_pattern(), plus);
    ASSERT_EQ(records.size(), 4u);
    for (const auto &r : records) {
        EXPECT_NEAR(r.probability, 0.25, 1e-14);
        EXPECT_TRUE(r.pre_correction_state);
        EXPECT_FALSE(r.corrected_state);
    }
    EXPECT_EQ(records[0].labels[0].str(), "(1)");
}

TEST(Enumerate, RecordsAreInLabelOrder) {
    GatePattern p = cnot_pattern();
    auto records = enumerate_outcomes(p, generic_input(2));
    for (std::size_t k = 1; k < records.size(); ++k) {
        EXPECT_LT(records[k - 1].labels, records[k].labels);
    }
}

TEST(Enumerate, HRowHasNoNullOutcomes) {
    auto records = enumerate_outcomes(controlled_z_pattern(CzRow::HRow), generic_input(2));
    ASSERT_EQ(records.size(), 64u);
    for (const auto &r : records) {
        EXPECT_GT(r.probability, 1e-12);
    }
    EXPECT_NEAR(total_probability(records), 1.0, 1e-12);
}

TEST(Enumerate, NullOutcomesFlagged) {
    // In the mismatched pair every outcome annihilates two of the four input
    // components, so a basis input makes some outcomes impossible.
    auto records = enumerate_outcomes(controlled_z_configuration(LinkResource::PhiPlus, AlphaBasis::Ghz),
                                      make_basis_state(2, "01"));
    std::size_t nulls = 0;
    for (const auto &r : records) {
        if (r.probability <= 1e-12) {
            ++nulls;
            EXPECT_FALSE(r.pre_correction_state);
        }
    }
    EXPECT_GT(nulls, 0u);
    EXPECT_NEAR(total_probability(records), 1.0, 1e-12);
}

TEST(Enumerate, InputSizeChecked) {
    EXPECT_THROW(enumerate_outcomes(cnot_pattern(), make_basis_state(1, "0")), UsageError);
    EXPECT_THROW(enumerate_outcomes(phase_gate_pattern(), StateVector(1)), UsageError);
}

TEST(Enumerate, CorrectedStatesUseTable) {
    GatePattern p = phase_gate_pattern();
    StateVector in = generic_input(1);
    auto records = enumerate_outcomes(p, in, &*p.corrections);
    StateVector expected = apply_unitary(in, p.target, QubitSubset{0});
    for (const auto &r : records) {
        ASSERT_TRUE(r.corrected_state);
        EXPECT_NEAR(fidelity_up_to_phase(expected, *r.corrected_state), 1.0, 1e-12);
    }
}

TEST(Verify, PhaseGateWithPrintedTable) {
    VerificationReport r = verify_pattern(phase_gate_pattern());
    EXPECT_TRUE(r.pass);
    EXPECT_GE(r.min_fidelity, 1.0 - 1e-9);
    EXPECT_EQ(r.input_descriptions.size(), 22u);
    EXPECT_LT(r.max_probability_error, 1e-12);
    EXPECT_EQ(r.fidelities.size(), 22u);
    EXPECT_EQ(r.fidelities[0].size(), 4u);
}

TEST(Verify, PrintedCnotTableFailsAndDerivedPasses) {
    GatePattern p = cnot_pattern();
    VerificationReport printed = verify_pattern(p);
    EXPECT_FALSE(printed.pass);
    CorrectionTable derived = derive_corrections(p, CorrectionDictionary::for_pattern(p));
    VerifyOptions o;
    o.corrections = &derived;
    VerificationReport good = verify_pattern(p, o);
    EXPECT_TRUE(good.pass);
    EXPECT_EQ(good.outcome_count, 128u);
}

TEST(Verify, MissingEntryIsStructuralError) {
    GatePattern p = phase_gate_pattern();
    CorrectionTable t = *p.corrections;
    t.entries.erase({2});
    VerifyOptions o;
    o.corrections = &t;
    try {
        verify_pattern(p, o);
        FAIL() << "expected StructuralError";
    } catch (const StructuralError &e) {
        EXPECT_NE(std::string(e.what()).find("(3)"), std::string::npos) << e.what();
    }
    GatePattern bare = toffoli_pattern();
    EXPECT_THROW(verify_pattern(bare), StructuralError);
}

TEST(Verify, ChainOfTwoLosesTheSign) {
    GatePattern p = chain_cz_pattern(2);
    DeriveOptions d;
    d.target_override = p.predicted_target;
    CorrectionTable t = derive_corrections(p, CorrectionDictionary::pauli(2), d);
    StateVector phi = from_ket_expression(2, {{1.0, "00"}, {1.0, "11"}});
    VerifyOptions o;
    o.corrections = &t;
    VerificationReport r = verify_pattern(p, {{"phi+", phi, false}}, o);
    EXPECT_FALSE(r.pass);
    EXPECT_NEAR(r.min_fidelity, 0.0, 1e-12);
}

TEST(Verify, GenericZeroProbabilityFails) {
    GatePattern p = controlled_z_configuration(LinkResource::PhiPlus, AlphaBasis::Ghz);
    // Identity corrections; what matters is how null outcomes are treated.
    CorrectionTable t{p.group_sizes(), {}};
    for (const auto &k : all_outcome_keys(t.group_sizes)) {
        t.entries[k] = CorrectionOp{{{Elementary::I, {}}}};
    }
    VerifyOptions o;
    o.corrections = &t;
    VerificationReport r = verify_pattern(p, default_inputs(2, 2, 5), o);
    EXPECT_FALSE(r.pass);
}

TEST(Derive, PhaseAndPi8MatchPrintedTables) {
    for (int id : {2, 3}) {
        GatePattern p = id == 2 ? phase_gate_pattern() : pi8_gate_pattern();
        CorrectionTable t = derive_corrections(p, CorrectionDictionary::for_pattern(p));
        TableDiff diff = compare_tables(t, printed_table(id), 1);
        EXPECT_EQ(diff.mismatches, 0u) << id;
        EXPECT_EQ(diff.total, 4u);
    }
    CorrectionTable t = derive_corrections(phase_gate_pattern(), CorrectionDictionary::pauli(1));
    EXPECT_EQ(t.find({0})->render(1), "σz");
    EXPECT_EQ(t.find({1})->render(1), "I");
    EXPECT_EQ(t.find({2})->render(1), "σzσx");
    EXPECT_EQ(t.find({3})->render(1), "σx");
}

TEST(Derive, CnotFirstCellIsIdentity) {
    GatePattern p = cnot_pattern();
    CorrectionTable t = derive_corrections(p, CorrectionDictionary::for_pattern(p));
    EXPECT_EQ(t.find(p.key_of({OutcomeLabel::parse("(0,0,0,+)"), OutcomeLabel::parse("(0,0,+)")}))->render(2),
              "I");
    EXPECT_EQ(t.entries.size(), 128u);
}

TEST(Derive, ToffoliWorkedOutcome) {
    GatePattern p = toffoli_pattern();
    CorrectionTable t = derive_corrections(p, CorrectionDictionary::for_pattern(p));
    auto key = p.key_of({OutcomeLabel::parse("(0,1,1,-)"), OutcomeLabel::parse("(0,1,0,-)"),
                         OutcomeLabel::parse("(1,1,-)")});
    Matrix expect = gates::kron(gates::kron(gates::pauli_x(), gates::pauli_z()), gates::pauli_x());
    EXPECT_TRUE(gates::equal_up_to_phase(t.find(key)->matrix(3, &p.target.matrix()), expect));
}

TEST(Derive, FailureListsOutcomeAndBestFidelity) {
    GatePattern p = chain_cz_pattern(2);
    DerivationResult r = try_derive_corrections(p, CorrectionDictionary::pauli(2));
    EXPECT_FALSE(r.complete());
    // No outcome of the even chain is correctable with Pauli frames.
    EXPECT_EQ(r.failures.size(), 256u);
    EXPECT_LT(r.failures[0].best_fidelity, 1.0 - 1e-9);
    try {
        derive_corrections(p, CorrectionDictionary::pauli(2));
        FAIL() << "expected DerivationError";
    } catch (const DerivationError &e) {
        EXPECT_NE(std::string(e.what()).find("alpha="), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("best fidelity"), std::string::npos);
    }
    EXPECT_THROW(try_derive_corrections(p, CorrectionDictionary::pauli(3)), UsageError);
}

TEST(Derive, MismatchedConfigurationIsNotCorrectable) {
    GatePattern p = controlled_z_configuration(LinkResource::PhiPlus, AlphaBasis::Ghz);
    DerivationResult r = try_derive_corrections(p, CorrectionDictionary::pauli(2));
    EXPECT_EQ(r.failures.size(), 64u);
    EXPECT_NE(r.failures[0].reason.find("not proportional to a unitary"), std::string::npos);
}

TEST(Compare, ForcedSingleCellDiff) {
    CorrectionTable printed = printed_table(2);
    CorrectionTable edited = printed;
    edited.entries[{0}] = CorrectionOp{{{Elementary::SigmaX, {0}}}};
    TableDiff d = compare_tables(edited, printed, 1);
    EXPECT_EQ(d.mismatches, 1u);
    ASSERT_EQ(d.cells.size(), 1u);
    EXPECT_EQ(d.cells[0], (std::vector<std::size_t>{0}));
    CorrectionTable shorter = printed;
    shorter.entries.erase({3});
    EXPECT_THROW(compare_tables(shorter, printed, 1), UsageError);
}

TEST(Compare, ControlledPhaseTableAgrees) {
    GatePattern p = controlled_phase_pattern();
    CorrectionTable t = derive_corrections(p, CorrectionDictionary::for_pattern(p));
    TableDiff d = compare_tables(t, printed_table(4), 2);
    EXPECT_EQ(d.total, 64u);
    EXPECT_EQ(d.mismatches, 0u);
}

TEST(Parity, OddChainsPassEvenChainsFail) {
    auto rows = parity_experiment(4);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_TRUE(rows[0].pass_vs_cz);
    EXPECT_FALSE(rows[1].pass_vs_cz);
    EXPECT_TRUE(rows[2].pass_vs_cz);
    EXPECT_FALSE(rows[3].pass_vs_cz);
    EXPECT_EQ(rows[1].derived_against, "predicted");
    for (const auto &r : rows) {
        EXPECT_TRUE(r.pass_vs_predicted) << r.n;
    }
    EXPECT_THROW(parity_experiment(0), UsageError);
}

TEST(Loss, CompatibleRowIsNotLossy) {
    LossReport r = detect_information_loss(controlled_z_pattern(CzRow::HRow));
    EXPECT_FALSE(r.lossy);
    EXPECT_TRUE(r.target_entangling);
    EXPECT_FALSE(r.interaction_lost);
    EXPECT_TRUE(r.zero_probability.empty());
    EXPECT_EQ(r.rank_histogram[4], 64u);
}

TEST(Loss, MismatchedPairAnnihilatesTwoComponents) {
    GatePattern p = controlled_z_configuration(LinkResource::PhiPlus, AlphaBasis::Ghz);
    LossReport r = detect_information_loss(p);
    EXPECT_TRUE(r.lossy);
    ASSERT_EQ(r.lossy_outcomes.size(), 64u);
    const LossOutcome &first = r.lossy_outcomes[0];
    EXPECT_EQ(first.key, (std::vector<std::size_t>{0, 0}));
    EXPECT_EQ(first.annihilated, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(first.rank, 2u);
}

TEST(Loss, MissingLinkLosesInteraction) {
    for (auto b : {PairBasis::Bell, PairBasis::HPair}) {
        LossReport r = detect_information_loss(cz_without_link_pattern(b));
        EXPECT_TRUE(r.lossy);
        EXPECT_TRUE(r.interaction_lost);
    }
}

TEST(Loss, SingleWireTargetIsNotEntangling) {
    LossReport r = detect_information_loss(phase_gate_pattern());
    EXPECT_FALSE(r.target_entangling);
    EXPECT_FALSE(r.lossy);
}

TEST(Properties, Linearity) {
    EXPECT_LT(linearity_deviation(phase_gate_pattern(), 5), 1e-12);
    EXPECT_LT(linearity_deviation(cnot_pattern(), 3), 1e-12);
    EXPECT_LT(linearity_deviation(controlled_phase_pattern(), 3), 1e-12);
}

TEST(Properties, OperatorSchmidtRank) {
    EXPECT_EQ(operator_schmidt_rank(gates::cz(), 2, 0), 2u);
    EXPECT_EQ(operator_schmidt_rank(gates::cnot(), 2, 1), 2u);
    EXPECT_EQ(operator_schmidt_rank(gates::swap(), 2, 0), 4u);
    EXPECT_EQ(operator_schmidt_rank(gates::kron(gates::hadamard(), gates::pauli_y()), 2, 0), 1u);
    EXPECT_EQ(operator_schmidt_rank(gates::toffoli(), 3, 0), 2u);
}

TEST(Properties, DeterministicReports) {
    GatePattern p = swap_pattern();
    CorrectionTable t = derive_corrections(p, CorrectionDictionary::for_pattern(p));
    VerifyOptions o;
    o.corrections = &t;
    std::string a = render_verification(p, {verify_pattern(p, o)}, OutputFormat::Json);
    std::string b = render_verification(p, {verify_pattern(p, o)}, OutputFormat::Json);
    EXPECT_EQ(a, b);
    o.seed = 5;
    EXPECT_NE(a, render_verification(p, {verify_pattern(p, o)}, OutputFormat::Json));
}

TEST(Properties, JsonReportRoundTripsExactly) {
    GatePattern p = chain_cz_pattern(2);
    DeriveOptions d;
    d.target_override = p.predicted_target;
    CorrectionTable t = derive_corrections(p, CorrectionDictionary::pauli(2), d);
    VerifyOptions o;
    o.corrections = &t;
    VerificationReport r = verify_pattern(p, o);
    auto back = verification_reports_from_json(render_verification(p, {r}, OutputFormat::Json));
    ASSERT_EQ(back.size(), 1u);
    EXPECT_EQ(back[0].pass, r.pass);
    EXPECT_EQ(back[0].min_fidelity, r.min_fidelity);
    EXPECT_EQ(back[0].fidelities, r.fidelities);
    EXPECT_EQ(back[0].min_fidelity_per_input, r.min_fidelity_per_input);
    EXPECT_EQ(back[0].worst.size(), r.worst.size());
    EXPECT_THROW(verification_reports_from_json("{}"), UsageError);
}
