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

#ifndef MBGATE_CORRECTION_HPP
#define MBGATE_CORRECTION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbgate/statevec.hpp"

namespace mbgate {

enum class Elementary {
    I,
    SigmaX,
    SigmaZ,
    /// diag(1, i)
    Up,
    /// Controlled-Z on two output wires.
    Ucz,
    /// Controlled-X, control on the first listed wire.
    Cx,
    /// The pattern's target gate on all output wires.
    Gate,
    GateAdjoint,
};

/// File-format name ("sx", "ucz", ...).
std::string_view elementary_name(Elementary e);
/// Throws UsageError for an unknown name.
Elementary elementary_from_name(std::string_view name);

struct Factor {
    Elementary kind = Elementary::I;
    std::vector<std::size_t> wires;

    bool operator==(const Factor &other) const = default;
};

/// A product of elementary operators on the output wires.
///
/// Factors are stored in written order: the matrix is F_0 * F_1 * ... so the
/// last factor acts first, as in U_cz(sz Up (x) I).
struct CorrectionOp {
    std::vector<Factor> factors;

    /// Throws UsageError when a factor needs the target gate and none is given,
    /// or a wire is out of range.
    Matrix matrix(std::size_t num_wires, const Matrix *target = nullptr) const;
    bool is_local() const;
    bool is_pauli() const;
    /// Number of non-identity factors.
    std::size_t weight() const;
    std::string render(std::size_t num_wires) const;

    /// Compact notation used by the printed tables: "I", "Z,I", "ZPX,P",
    /// "C(X,ZP)".  Letters Z, X, P are sz, sx, Up in written order; commas
    /// separate wires; C(...) pre-composes U_cz on wires (0,1).
    static CorrectionOp from_compact(std::string_view text, std::size_t num_wires);

    bool operator==(const CorrectionOp &other) const = default;
};

/// Outcome-indexed corrections.  Keys are per-group basis indices.
struct CorrectionTable {
    std::vector<std::size_t> group_sizes;
    std::map<std::vector<std::size_t>, CorrectionOp> entries;

    std::size_t expected_size() const;
    bool is_total() const { return entries.size() == expected_size(); }
    const CorrectionOp *find(const std::vector<std::size_t> &key) const;
};

/// Iterates every key of a mixed-radix outcome space in lexicographic order.
std::vector<std::vector<std::size_t>> all_outcome_keys(const std::vector<std::size_t> &group_sizes);

}  // namespace mbgate

#endif
