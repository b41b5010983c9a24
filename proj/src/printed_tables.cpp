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

#include "mbgate/printed_tables.hpp"

#include <numbers>
#include <sstream>

#include "mbgate/errors.hpp"

namespace mbgate {

namespace {

// One line per layout row; "|" separates cells and "||" the two printed
// half blocks.  Cell syntax is CorrectionOp::from_compact.
constexpr const char *kTable2 = "Z\nI\nZX\nX\n";
constexpr const char *kTable3 = "I\nZ\nX\nZX\n";

constexpr const char *kTable4 = R"(
I | Z,I | I,Z | Z,Z || C(X,ZP) | C(XZ,ZP) | C(X,P) | C(ZX,P)
I,Z | Z,Z | I | Z,I || C(X,P) | C(XZ,P) | C(X,PZ) | C(ZX,PZ)
C(ZP,I) | C(P,I) | C(ZP,Z) | C(P,Z) || PX,P | ZPX,P | PX,PZ | ZPX,ZP
C(ZP,Z) | C(P,Z) | C(ZP,I) | C(P,I) || PX,ZP | ZPX,ZP | PX,P | ZPX,P
C(ZP,X) | C(P,X) | C(ZP,ZX) | C(P,ZX) || PX,PX | ZPX,PX | PX,ZPX | ZPX,ZPX
C(ZP,XZ) | C(P,XZ) | C(ZP,X) | C(P,X) || PX,ZPX | ZPX,ZPX | PX,PX | ZPX,PX
I,X | Z,X | I,ZX | Z,ZX || C(X,ZPX) | C(XZ,ZPX) | C(X,PX) | C(ZX,PX)
I,XZ | Z,XZ | I,X | Z,X || C(X,PX) | C(XZ,PX) | C(X,ZPX) | C(ZX,ZPX)
)";

constexpr const char *kTable5 = R"(
I | Z,I | X,I | ZX,I | I,Z | Z,Z | X,Z | ZX,Z || X,X | ZX,X | I,X | Z,X | X,ZX | ZX,ZX | I,ZX | Z,ZX
I,Z | Z,Z | X,Z | ZX,Z | I | Z,I | X,I | ZX,I || X,ZX | ZX,ZX | I,ZX | Z,ZX | X,X | ZX,X | I,X | Z,X
Z,I | I | ZX,I | X,I | Z,Z | I,Z | ZX,Z | X,Z || ZX,X | X,X | Z,X | I,X | ZX,ZX | X,ZX | Z,ZX | I,ZX
Z,Z | I,Z | ZX,Z | X,Z | Z,I | I | ZX,I | X,I || ZX,ZX | X,ZX | Z,ZX | I,ZX | ZX,X | X,X | Z,X | I,X
I,X | Z,X | X,X | ZX,X | I,ZX | Z,ZX | X,ZX | ZX,ZX || X,I | ZX,I | I | Z,I | X,Z | ZX,Z | I,Z | Z,Z
I,ZX | Z,ZX | X,ZX | ZX,ZX | I,X | Z,X | X,X | ZX,X || X,Z | ZX,Z | I,Z | Z,Z | X,I | ZX,I | I | Z,I
Z,X | I,X | ZX,X | X,X | Z,ZX | I,ZX | ZX,ZX | X,ZX || ZX,I | X,I | Z,I | I | ZX,Z | X,Z | Z,Z | I,Z
Z,ZX | I,ZX | ZX,ZX | X,ZX | Z,X | I,X | ZX,X | X,X || ZX,Z | X,Z | Z,Z | I,Z | ZX,I | X,I | Z,I | I
)";

constexpr const char *kTable6 = R"(
I | Z,I | I,X | Z,X | I,Z | Z,Z | I,ZX | Z,ZX || I,X | Z,X | I | Z,I | I,ZX | Z,ZX | I,Z | Z,Z
I,Z | Z,Z | I,ZX | Z,ZX | I | Z,I | I,X | Z,X || I,ZX | Z,ZX | I,Z | Z,Z | I,X | Z,X | I | Z,I
Z,I | I | Z,X | I,X | Z,Z | I,Z | Z,ZX | I,ZX || Z,X | I,X | Z,I | I | Z,ZX | I,ZX | Z,Z | I,Z
Z,Z | I,Z | Z,ZX | I,ZX | Z,I | I | Z,X | I,X || Z,ZX | I,ZX | Z,Z | I,Z | Z,X | I,X | Z,I | I
X,I | ZX,I | X,X | ZX,X | X,Z | ZX,Z | X,ZX | ZX,ZX || X,X | ZX,X | X,I | ZX,I | X,ZX | ZX,ZX | X,Z | ZX,Z
X,Z | ZX,Z | X,ZX | ZX,ZX | X,I | ZX,I | X,X | ZX,X || X,ZX | ZX,ZX | X,Z | ZX,Z | X,X | ZX,X | X,I | ZX,I
ZX,I | X,I | ZX,X | X,X | ZX,Z | X,Z | ZX,ZX | X,ZX || ZX,X | X,X | ZX,I | X,I | ZX,ZX | X,ZX | ZX,Z | X,Z
ZX,Z | X,Z | ZX,ZX | X,ZX | ZX,I | X,I | ZX,X | X,X || ZX,ZX | X,ZX | ZX,Z | X,Z | ZX,X | X,X | ZX,I | X,I
)";

std::vector<std::vector<std::string>> parse_layout(const char *text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        std::vector<std::string> cells;
        std::string cell;
        for (std::size_t k = 0; k <= line.size(); ++k) {
            char c = k < line.size() ? line[k] : '|';
            if (c == '|') {
                if (!cell.empty()) {
                    cells.push_back(cell);
                }
                cell.clear();
            } else if (c != ' ') {
                cell += c;
            }
        }
        rows.push_back(cells);
    }
    return rows;
}

const char *layout_text(int id) {
    switch (id) {
        case 2:
            return kTable2;
        case 3:
            return kTable3;
        case 4:
            return kTable4;
        case 5:
            return kTable5;
        case 6:
            return kTable6;
        default:
            throw UsageError("no reference table " + std::to_string(id) + " (valid: 2-6)");
    }
}

}  // namespace

bool has_printed_table(int id) { return id >= 2 && id <= 6; }

const std::vector<std::vector<std::string>> &printed_table_cells(int id) {
    static const std::vector<std::vector<std::string>> cache[5] = {
        parse_layout(kTable2), parse_layout(kTable3), parse_layout(kTable4),
        parse_layout(kTable5), parse_layout(kTable6),
    };
    layout_text(id);
    return cache[id - 2];
}

std::vector<OutcomeLabel> printed_row_labels(int id) {
    layout_text(id);
    if (id <= 3) {
        return {};
    }
    return signed_bit_labels(2);
}

std::vector<OutcomeLabel> printed_column_labels(int id) {
    layout_text(id);
    if (id <= 3) {
        return numbered_labels(4);
    }
    return signed_bit_labels(id == 4 ? 2 : 3);
}

CorrectionTable printed_table(int id) {
    const auto &cells = printed_table_cells(id);
    CorrectionTable t;
    if (id <= 3) {
        t.group_sizes = {4};
        for (std::size_t r = 0; r < cells.size(); ++r) {
            t.entries[{r}] = CorrectionOp::from_compact(cells[r].at(0), 1);
        }
        return t;
    }
    std::size_t cols = printed_column_labels(id).size();
    std::size_t rows = printed_row_labels(id).size();
    t.group_sizes = {cols, rows};
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            t.entries[{c, r}] = CorrectionOp::from_compact(cells.at(r).at(c), 2);
        }
    }
    return t;
}

std::vector<Matrix> printed_pre_correction_maps(int id) {
    if (id != 2 && id != 3) {
        throw UsageError("pre-correction states are listed only for tables 2 and 3");
    }
    const Complex i(0.0, 1.0);
    Complex p = -i;
    Complex q = i;
    if (id == 3) {
        p = std::polar(1.0, std::numbers::pi / 4.0);
        q = std::polar(1.0, -3.0 * std::numbers::pi / 4.0);
    }
    // a|0> + p b|1>, a|0> + q b|1>, a|1> + p b|0>, a|1> + q b|0>.
    std::vector<Matrix> out;
    for (Complex c : {p, q}) {
        Matrix m(2, 2);
        m << 1.0, 0.0, 0.0, c;
        out.push_back(m);
    }
    for (Complex c : {p, q}) {
        Matrix m(2, 2);
        m << 0.0, c, 1.0, 0.0;
        out.push_back(m);
    }
    return out;
}

std::vector<std::string> printed_pre_correction_text(int id) {
    if (id == 2) {
        return {"a|0>-ib|1>", "a|0>+ib|1>", "a|1>-ib|0>", "a|1>+ib|0>"};
    }
    if (id == 3) {
        return {"a|0>+e^{i pi/4}b|1>", "a|0>+e^{-3i pi/4}b|1>", "a|1>+e^{i pi/4}b|0>",
                "a|1>+e^{-3i pi/4}b|0>"};
    }
    throw UsageError("pre-correction states are listed only for tables 2 and 3");
}

}  // namespace mbgate
