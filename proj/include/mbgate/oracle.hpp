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

#ifndef MBGATE_ORACLE_HPP
#define MBGATE_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbgate/dictionary.hpp"
#include "mbgate/pattern.hpp"
#include "mbgate/random.hpp"

namespace mbgate {

struct OutcomeRecord {
    /// Per-group basis indices.
    std::vector<std::size_t> key;
    std::vector<OutcomeLabel> labels;
    double probability = 0.0;
    /// Unnormalized output-wire state; its squared norm is the probability.
    StateVector residual;
    /// Normalized residual; absent on a null outcome.
    std::optional<StateVector> pre_correction_state;
    std::optional<StateVector> corrected_state;
};

/// Every outcome in lexicographic key order.  Outputs are ordered as
/// pattern.output_wires.  When `corrections` is given each non-null record
/// also carries the corrected state; a missing entry is a StructuralError.
std::vector<OutcomeRecord> enumerate_outcomes(const GatePattern &pattern, const StateVector &input,
                                              const CorrectionTable *corrections = nullptr);

/// Per-outcome linear maps M (outputs x inputs): column j is the
/// unnormalized residual for computational basis input j.
std::vector<Matrix> outcome_maps(const GatePattern &pattern);

struct VerificationInput {
    std::string description;
    StateVector state;
    /// Random inputs have no vanishing amplitude; zero-probability outcomes
    /// on them count against the pass flag.
    bool generic = false;
};

/// Computational basis states followed by `random_count` seeded random states.
std::vector<VerificationInput> default_inputs(std::size_t num_qubits, std::size_t random_count,
                                              std::uint64_t seed);

struct FidelityCell {
    std::size_t input = 0;
    std::vector<std::size_t> key;
    double fidelity = 0.0;
};

struct TableDiff {
    std::size_t total = 0;
    std::size_t mismatches = 0;
    std::vector<std::vector<std::size_t>> cells;
};

struct VerificationReport {
    std::string pattern_name;
    std::string target_name;
    /// Which correction table was checked ("shipped", "derived", ...).
    std::string corrections_source;
    std::vector<std::string> input_descriptions;
    /// fidelities[input][outcome]; -1 marks a null outcome.
    std::vector<std::vector<double>> fidelities;
    std::vector<double> min_fidelity_per_input;
    double min_fidelity = 1.0;
    std::size_t outcome_count = 0;
    double max_probability_error = 0.0;
    std::vector<FidelityCell> zero_probability;
    std::vector<FidelityCell> suspicious;
    /// Up to 16 lowest-fidelity cells below the threshold.
    std::vector<FidelityCell> worst;
    std::size_t failing_cells = 0;
    std::optional<TableDiff> table_diff;
    bool pass = false;
};

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t random_inputs = 20;
    double fidelity_threshold = 1.0 - Tolerances::kFidelityGap;
    /// Defaults to pattern.target.
    std::optional<Unitary> target_override;
    /// Defaults to pattern.corrections.
    const CorrectionTable *corrections = nullptr;
    std::string corrections_source = "shipped";
};

VerificationReport verify_pattern(const GatePattern &pattern, const std::vector<VerificationInput> &inputs,
                                  const VerifyOptions &options = {});
VerificationReport verify_pattern(const GatePattern &pattern, const VerifyOptions &options = {});

struct DerivationFailure {
    std::vector<std::size_t> key;
    double best_fidelity = 0.0;
    std::string reason;
};

struct DerivationResult {
    /// Entries for every outcome that could be corrected.
    CorrectionTable table;
    std::vector<DerivationFailure> failures;
    std::size_t dictionary_size = 0;
    bool complete() const { return failures.empty(); }
};

struct DeriveOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t random_probes = 6;
    double fidelity_threshold = 1.0 - Tolerances::kFidelityGap;
    std::optional<Unitary> target_override;
};

DerivationResult try_derive_corrections(const GatePattern &pattern, const CorrectionDictionary &dict,
                                        const DeriveOptions &options = {});
/// Throws DerivationError listing failing outcomes and their best fidelity.
CorrectionTable derive_corrections(const GatePattern &pattern, const CorrectionDictionary &dict,
                                   const DeriveOptions &options = {});

struct LossOutcome {
    std::vector<std::size_t> key;
    double probability = 0.0;
    std::size_t rank = 0;
    /// Basis-input components mapped to zero.
    std::vector<std::size_t> annihilated;
};

struct LossReport {
    std::string pattern_name;
    std::size_t outcome_count = 0;
    std::vector<std::vector<std::size_t>> zero_probability;
    std::vector<std::vector<std::size_t>> suspicious;
    /// Surviving outcomes with at least one annihilated component.
    std::vector<LossOutcome> lossy_outcomes;
    /// rank_histogram[r] = number of surviving outcomes whose map has rank r.
    std::vector<std::size_t> rank_histogram;
    bool target_entangling = false;
    /// Every surviving outcome map factorizes across the input wires.
    bool interaction_lost = false;
    bool lossy = false;
};

LossReport detect_information_loss(const GatePattern &pattern, std::uint64_t seed = kDefaultSeed);

/// Cell-by-cell operator comparison up to global phase.  Throws UsageError
/// when the outcome index sets differ.
TableDiff compare_tables(const CorrectionTable &derived, const CorrectionTable &printed, std::size_t num_wires,
                         const Matrix *target = nullptr);

struct ParityRow {
    std::size_t n = 0;
    bool pass_vs_cz = false;
    double min_fidelity_vs_cz = 0.0;
    /// The target the corrections were derived against: "cz" or "predicted".
    std::string derived_against;
    bool pass_vs_predicted = false;
};

std::vector<ParityRow> parity_experiment(std::size_t max_n, std::uint64_t seed = kDefaultSeed);

struct VariantTrial {
    std::string variant;
    bool basis_valid = false;
    std::string basis_message;
    std::size_t derivation_failures = 0;
    std::size_t outcome_count = 0;
    bool verified = false;
    double min_fidelity = 0.0;
};

struct VariantReport {
    std::vector<VariantTrial> trials;
    /// Name of the first variant that verified, if any.
    std::optional<std::string> selected;
};

/// Tries each alpha-basis variant of the Toffoli construction in turn.
VariantReport resolve_toffoli_variant(std::uint64_t seed = kDefaultSeed, std::size_t random_inputs = 10);
/// Same for the controlled-swap construction.
VariantReport resolve_fredkin_variant(std::uint64_t seed = kDefaultSeed, std::size_t random_inputs = 10);

/// Largest deviation of M(a x + b y) from a M(x) + b M(y) over random
/// superpositions, per outcome, after aligning global phase.
double linearity_deviation(const GatePattern &pattern, std::size_t trials, std::uint64_t seed = kDefaultSeed);

/// Operator Schmidt rank of m across the cut (wire w | other wires).
std::size_t operator_schmidt_rank(const Matrix &m, std::size_t num_wires, std::size_t wire, double tol = 1e-9);

}  // namespace mbgate

#endif
