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

#ifndef MBGATE_PATTERN_HPP
#define MBGATE_PATTERN_HPP

#include <optional>
#include <string>
#include <vector>

#include "mbgate/correction.hpp"
#include "mbgate/outcome.hpp"
#include "mbgate/statevec.hpp"

namespace mbgate {

struct Resource {
    QubitSubset qubits;
    StateVector state;
};

struct MeasurementGroup {
    /// Display name, e.g. "alpha".
    std::string name;
    QubitSubset qubits;
    MeasurementBasis basis;
    /// labels[k] names basis.vectors[k].
    std::vector<OutcomeLabel> labels;
};

/// Which operators corrections may be drawn from.
enum class Vocabulary {
    /// Products of sx and sz per wire.
    Pauli,
    /// Per-wire words over {sz, sx, Up}, optionally after U_cz.
    Clifford,
    /// Clifford plus target-conjugated frames G Q G^dagger P.
    Propagated,
};

std::string_view vocabulary_name(Vocabulary v);
Vocabulary vocabulary_from_name(std::string_view name);

struct GatePattern {
    std::string name;
    std::size_t num_qubits = 0;
    QubitSubset input_wires;
    std::vector<Resource> resources;
    std::vector<MeasurementGroup> groups;
    QubitSubset output_wires;
    std::optional<CorrectionTable> corrections;
    Unitary target;
    std::string target_name;
    Vocabulary vocabulary = Vocabulary::Pauli;
    /// Gate the wiring is predicted to realize, when that differs from `target`.
    std::optional<Unitary> predicted_target;
    /// Free-form provenance lines (variant choices and similar).
    std::vector<std::string> notes;

    std::vector<std::size_t> group_sizes() const;
    std::vector<OutcomeLabel> labels_of(const std::vector<std::size_t> &key) const;
    /// Throws UsageError when a label is unknown or the count is wrong.
    std::vector<std::size_t> key_of(const std::vector<OutcomeLabel> &labels) const;
    std::string describe_key(const std::vector<std::size_t> &key) const;
};

/// Checks wiring, bases, labels, correction totality and target size.
/// Throws PatternError naming the offending part.
void validate_pattern(const GatePattern &pattern);

}  // namespace mbgate

#endif
