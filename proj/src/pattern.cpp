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

#include "mbgate/pattern.hpp"

#include <set>

#include "mbgate/errors.hpp"

namespace mbgate {

std::string_view vocabulary_name(Vocabulary v) {
    switch (v) {
        case Vocabulary::Pauli:
            return "pauli";
        case Vocabulary::Clifford:
            return "clifford";
        case Vocabulary::Propagated:
            return "propagated";
    }
    return "?";
}

Vocabulary vocabulary_from_name(std::string_view name) {
    for (auto v : {Vocabulary::Pauli, Vocabulary::Clifford, Vocabulary::Propagated}) {
        if (vocabulary_name(v) == name) {
            return v;
        }
    }
    throw UsageError("unknown correction vocabulary '" + std::string(name) + "'");
}

std::vector<std::size_t> GatePattern::group_sizes() const {
    std::vector<std::size_t> out;
    for (const auto &g : groups) {
        out.push_back(g.basis.vectors.size());
    }
    return out;
}

std::vector<OutcomeLabel> GatePattern::labels_of(const std::vector<std::size_t> &key) const {
    std::vector<OutcomeLabel> out;
    for (std::size_t g = 0; g < groups.size() && g < key.size(); ++g) {
        out.push_back(groups[g].labels.at(key[g]));
    }
    return out;
}

std::vector<std::size_t> GatePattern::key_of(const std::vector<OutcomeLabel> &labels) const {
    if (labels.size() != groups.size()) {
        throw UsageError("expected " + std::to_string(groups.size()) + " outcome labels, got " +
                         std::to_string(labels.size()));
    }
    std::vector<std::size_t> key;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto &ls = groups[g].labels;
        std::size_t k = 0;
        while (k < ls.size() && !(ls[k] == labels[g])) {
            ++k;
        }
        if (k == ls.size()) {
            throw UsageError("group '" + groups[g].name + "' has no outcome " + labels[g].str());
        }
        key.push_back(k);
    }
    return key;
}

std::string GatePattern::describe_key(const std::vector<std::size_t> &key) const {
    std::string out;
    auto labels = labels_of(key);
    for (std::size_t g = 0; g < labels.size(); ++g) {
        if (g) {
            out += " ";
        }
        out += groups[g].name + "=" + labels[g].str();
    }
    return out;
}

void validate_pattern(const GatePattern &p) {
    auto fail = [&](const std::string &what) { return PatternError("pattern '" + p.name + "': " + what); };
    auto check_range = [&](const QubitSubset &s, const std::string &what) {
        for (auto q : s.indices()) {
            if (q >= p.num_qubits) {
                throw fail(what + " uses qubit " + std::to_string(q) + " outside the " +
                           std::to_string(p.num_qubits) + "-qubit register");
            }
        }
    };

    // Preparation: inputs and resources partition the register.
    std::vector<std::string> prepared_by(p.num_qubits);
    auto claim = [&](const QubitSubset &s, const std::string &who) {
        for (auto q : s.indices()) {
            if (!prepared_by[q].empty()) {
                throw fail("disjointness violation: qubit " + std::to_string(q) + " claimed by " + prepared_by[q] +
                           " and " + who);
            }
            prepared_by[q] = who;
        }
    };
    check_range(p.input_wires, "input wires");
    claim(p.input_wires, "the inputs");
    for (std::size_t r = 0; r < p.resources.size(); ++r) {
        const auto &res = p.resources[r];
        std::string who = "resource " + std::to_string(r);
        check_range(res.qubits, who);
        if (res.state.num_qubits() != res.qubits.size()) {
            throw fail(who + " state has " + std::to_string(res.state.num_qubits()) + " qubits but " +
                       std::to_string(res.qubits.size()) + " positions");
        }
        if (!res.state.is_normalized()) {
            throw fail(who + " state is not normalized");
        }
        claim(res.qubits, who);
    }
    for (std::size_t q = 0; q < p.num_qubits; ++q) {
        if (prepared_by[q].empty()) {
            throw fail("qubit " + std::to_string(q) + " is neither an input nor part of a resource");
        }
    }

    // Measurement: groups and outputs partition the register.
    std::vector<std::string> fate(p.num_qubits);
    auto consume = [&](const QubitSubset &s, const std::string &who) {
        for (auto q : s.indices()) {
            if (!fate[q].empty()) {
                throw fail("disjointness violation: qubit " + std::to_string(q) + " used by " + fate[q] + " and " +
                           who);
            }
            fate[q] = who;
        }
    };
    for (const auto &g : p.groups) {
        std::string who = "group '" + g.name + "'";
        check_range(g.qubits, who);
        consume(g.qubits, who);
        if (g.basis.num_measured_qubits != g.qubits.size()) {
            throw fail(who + " basis is over " + std::to_string(g.basis.num_measured_qubits) + " qubits but the group has " +
                       std::to_string(g.qubits.size()));
        }
        BasisValidation v = validate_basis(g.basis);
        if (!v.passed) {
            std::string msg = who + " basis invalid:";
            for (const auto &pr : v.problems) {
                msg += " " + pr + ";";
            }
            throw fail(msg);
        }
        if (g.labels.size() != g.basis.vectors.size()) {
            throw fail(who + " has " + std::to_string(g.labels.size()) + " labels for " +
                       std::to_string(g.basis.vectors.size()) + " basis vectors");
        }
        std::set<OutcomeLabel> distinct(g.labels.begin(), g.labels.end());
        if (distinct.size() != g.labels.size()) {
            throw fail(who + " has duplicate outcome labels");
        }
    }
    check_range(p.output_wires, "output wires");
    consume(p.output_wires, "the outputs");
    for (std::size_t q = 0; q < p.num_qubits; ++q) {
        if (fate[q].empty()) {
            throw fail("qubit " + std::to_string(q) + " is neither measured nor an output");
        }
    }

    if (p.target.num_qubits() != p.output_wires.size()) {
        throw fail("target acts on " + std::to_string(p.target.num_qubits()) + " qubits but there are " +
                   std::to_string(p.output_wires.size()) + " output wires");
    }
    if (p.input_wires.size() != p.output_wires.size()) {
        throw fail("input and output wire counts differ");
    }

    if (p.corrections) {
        const auto &t = *p.corrections;
        if (t.group_sizes != p.group_sizes()) {
            throw fail("correction table shape does not match the groups");
        }
        if (!t.is_total()) {
            for (const auto &key : all_outcome_keys(t.group_sizes)) {
                if (!t.find(key)) {
                    throw fail("correction table has no entry for " + p.describe_key(key));
                }
            }
        }
        for (const auto &[key, op] : t.entries) {
            try {
                Matrix m = op.matrix(p.output_wires.size(), &p.target.matrix());
                Unitary check(m);
            } catch (const UsageError &e) {
                throw fail("correction for " + p.describe_key(key) + ": " + e.what());
            }
        }
    }
}

}  // namespace mbgate
