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

#ifndef MBGATE_DICTIONARY_HPP
#define MBGATE_DICTIONARY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mbgate/correction.hpp"
#include "mbgate/pattern.hpp"

namespace mbgate {

/// Candidate corrections, one per operator class up to global phase, in
/// search order: fewer factors first, then family, then factor names.
class CorrectionDictionary {
   public:
    struct Entry {
        CorrectionOp op;
        std::size_t weight = 0;
        /// 0 local, 1 U_cz-composed, 2 target-conjugated.
        int family = 0;
    };

    /// Pauli strings only.
    static CorrectionDictionary pauli(std::size_t num_wires);
    /// Per-wire words of at most three factors over {sz, sx, Up}; for two
    /// wires also every such product after U_cz.
    static CorrectionDictionary clifford(std::size_t num_wires);
    /// Clifford plus G Q G^dagger P, with G the target, P an output Pauli
    /// string and Q a Pauli string times a product of CX(0, j) / CZ(0, j).
    static CorrectionDictionary propagated(std::size_t num_wires, const Matrix &target);
    /// The vocabulary the pattern declares.
    static CorrectionDictionary for_pattern(const GatePattern &pattern);

    std::size_t size() const { return entries_.size(); }
    std::size_t num_wires() const { return num_wires_; }
    const Entry &operator[](std::size_t k) const { return entries_[k]; }
    const std::vector<Entry> &entries() const { return entries_; }
    Matrix matrix(std::size_t k) const;
    const Matrix *target() const { return target_ ? &*target_ : nullptr; }

    /// Index of the entry equal to `m` up to global phase, if any.
    std::optional<std::size_t> find_equivalent(const Matrix &m) const;
    bool contains(const Matrix &m) const { return find_equivalent(m).has_value(); }

    /// Phase-insensitive fingerprint: divide by the phase of the first entry
    /// above 1e-6 in magnitude, round to 1e-6 and hash.
    static std::uint64_t canonical_hash(const Matrix &m);

   private:
    struct Candidate {
        CorrectionOp op;
        std::size_t weight;
        int family;
        std::string order_key;
        std::uint64_t hash;
    };
    void add_all(std::vector<Candidate> candidates);
    static std::vector<Candidate> clifford_candidates(std::size_t num_wires);

    std::size_t num_wires_ = 0;
    std::optional<Matrix> target_;
    std::vector<Entry> entries_;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> index_;
};

}  // namespace mbgate

#endif
