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

#ifndef MBGATE_OUTCOME_HPP
#define MBGATE_OUTCOME_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace mbgate {

/// Structured outcome label such as (0,1,+) or (3).
///
/// `values` hold the bit indices in written order; `sign` is +1, -1, or 0
/// for unsigned labels.  Comparison is lexicographic in values then sign,
/// with + ordered before -.
struct OutcomeLabel {
    std::vector<int> values;
    int sign = 0;

    std::string str() const;
    /// Parses "(0,1,+)", "(1,0,-)" or "(3)".  Throws UsageError.
    static OutcomeLabel parse(std::string_view text);

    bool operator==(const OutcomeLabel &other) const = default;
    std::strong_ordering operator<=>(const OutcomeLabel &other) const;
};

/// All labels (b_1,...,b_k,s) in lexicographic order, + before -.
std::vector<OutcomeLabel> signed_bit_labels(std::size_t num_bits);

/// Labels (1), (2), ..., (count).
std::vector<OutcomeLabel> numbered_labels(std::size_t count);

std::string join_labels(const std::vector<OutcomeLabel> &labels);

}  // namespace mbgate

#endif
