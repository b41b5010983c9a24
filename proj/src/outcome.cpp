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

#include "mbgate/outcome.hpp"

#include <cctype>

#include "mbgate/errors.hpp"

namespace mbgate {

std::string OutcomeLabel::str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) {
            out += ",";
        }
        out += std::to_string(values[k]);
    }
    if (sign != 0) {
        if (!values.empty()) {
            out += ",";
        }
        out += sign > 0 ? "+" : "-";
    }
    return out + ")";
}

OutcomeLabel OutcomeLabel::parse(std::string_view text) {
    auto fail = [&]() { return UsageError("malformed outcome label '" + std::string(text) + "'"); };
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    if (s.size() < 3 || s.front() != '(' || s.back() != ')') {
        throw fail();
    }
    s = s.substr(1, s.size() - 2);
    OutcomeLabel label;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        bool last = comma == std::string::npos;
        if (tok == "+" || tok == "-") {
            if (!last) {
                throw fail();
            }
            label.sign = tok == "+" ? 1 : -1;
        } else {
            if (tok.empty()) {
                throw fail();
            }
            for (char c : tok) {
                if (!std::isdigit(static_cast<unsigned char>(c))) {
                    throw fail();
                }
            }
            label.values.push_back(std::stoi(tok));
        }
        if (last) {
            break;
        }
        pos = comma + 1;
    }
    return label;
}

std::strong_ordering OutcomeLabel::operator<=>(const OutcomeLabel &other) const {
    if (auto c = values <=> other.values; c != 0) {
        return c;
    }
    // + (1) before - (-1).
    return other.sign <=> sign;
}

std::vector<OutcomeLabel> signed_bit_labels(std::size_t num_bits) {
    std::vector<OutcomeLabel> out;
    for (std::size_t b = 0; b < (std::size_t{1} << num_bits); ++b) {
        OutcomeLabel l;
        for (std::size_t j = 0; j < num_bits; ++j) {
            l.values.push_back(static_cast<int>((b >> (num_bits - 1 - j)) & 1));
        }
        for (int s : {1, -1}) {
            l.sign = s;
            out.push_back(l);
        }
    }
    return out;
}

std::vector<OutcomeLabel> numbered_labels(std::size_t count) {
    std::vector<OutcomeLabel> out;
    for (std::size_t k = 1; k <= count; ++k) {
        out.push_back(OutcomeLabel{{static_cast<int>(k)}, 0});
    }
    return out;
}

std::string join_labels(const std::vector<OutcomeLabel> &labels) {
    std::string out;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (k) {
            out += " ";
        }
        out += labels[k].str();
    }
    return out;
}

}  // namespace mbgate
