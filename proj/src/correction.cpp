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

#include "mbgate/correction.hpp"

#include <algorithm>

#include "mbgate/errors.hpp"
#include "mbgate/gates.hpp"

namespace mbgate {

namespace {

struct NameEntry {
    Elementary kind;
    std::string_view name;
};

constexpr NameEntry kNames[] = {
    {Elementary::I, "I"},       {Elementary::SigmaX, "sx"}, {Elementary::SigmaZ, "sz"},
    {Elementary::Up, "up"},     {Elementary::Ucz, "ucz"},   {Elementary::Cx, "cx"},
    {Elementary::Gate, "g"},    {Elementary::GateAdjoint, "gdg"},
};

bool single_wire(Elementary e) {
    return e == Elementary::I || e == Elementary::SigmaX || e == Elementary::SigmaZ || e == Elementary::Up;
}

std::string_view glyph(Elementary e) {
    switch (e) {
        case Elementary::I:
            return "I";
        case Elementary::SigmaX:
            return "σx";
        case Elementary::SigmaZ:
            return "σz";
        case Elementary::Up:
            return "Up";
        case Elementary::Ucz:
            return "Ucz";
        case Elementary::Cx:
            return "CX";
        case Elementary::Gate:
            return "G";
        case Elementary::GateAdjoint:
            return "G†";
    }
    return "?";
}

Matrix factor_matrix(const Factor &f, std::size_t num_wires, const Matrix *target) {
    for (auto w : f.wires) {
        if (w >= num_wires) {
            throw UsageError("correction factor on wire " + std::to_string(w) + " of " +
                             std::to_string(num_wires));
        }
    }
    auto need = [&](std::size_t k) {
        if (f.wires.size() != k) {
            throw UsageError("factor " + std::string(elementary_name(f.kind)) + " needs " + std::to_string(k) +
                             " wire(s)");
        }
    };
    switch (f.kind) {
        case Elementary::I:
            return gates::identity(num_wires);
        case Elementary::SigmaX:
            need(1);
            return gates::embed(gates::pauli_x(), f.wires, num_wires);
        case Elementary::SigmaZ:
            need(1);
            return gates::embed(gates::pauli_z(), f.wires, num_wires);
        case Elementary::Up:
            need(1);
            return gates::embed(gates::phase(), f.wires, num_wires);
        case Elementary::Ucz:
            need(2);
            return gates::embed(gates::cz(), f.wires, num_wires);
        case Elementary::Cx:
            need(2);
            return gates::embed(gates::cnot(), f.wires, num_wires);
        case Elementary::Gate:
        case Elementary::GateAdjoint: {
            if (target == nullptr) {
                throw UsageError("correction refers to the target gate but none was supplied");
            }
            if (target->rows() != gates::identity(num_wires).rows()) {
                throw UsageError("target gate dimension does not match the output wires");
            }
            return f.kind == Elementary::Gate ? *target : Matrix(target->adjoint());
        }
    }
    return gates::identity(num_wires);
}

// Renders a run of single-wire factors as "w0⊗w1⊗...".
std::string render_local(const std::vector<Factor> &run, std::size_t num_wires) {
    std::vector<std::string> words(num_wires);
    for (const auto &f : run) {
        if (f.kind == Elementary::I) {
            continue;
        }
        words[f.wires[0]] += glyph(f.kind);
    }
    std::string out;
    for (std::size_t w = 0; w < num_wires; ++w) {
        if (w) {
            out += "⊗";
        }
        out += words[w].empty() ? "I" : words[w];
    }
    return out;
}

bool all_identity(const std::vector<Factor> &run) {
    return std::all_of(run.begin(), run.end(), [](const Factor &f) { return f.kind == Elementary::I; });
}

}  // namespace

std::string_view elementary_name(Elementary e) {
    for (const auto &n : kNames) {
        if (n.kind == e) {
            return n.name;
        }
    }
    return "?";
}

Elementary elementary_from_name(std::string_view name) {
    for (const auto &n : kNames) {
        if (n.name == name) {
            return n.kind;
        }
    }
    throw UsageError("unknown elementary operator '" + std::string(name) + "'");
}

Matrix CorrectionOp::matrix(std::size_t num_wires, const Matrix *target) const {
    Matrix m = gates::identity(num_wires);
    for (const auto &f : factors) {
        m = m * factor_matrix(f, num_wires, target);
    }
    return m;
}

bool CorrectionOp::is_local() const {
    return std::all_of(factors.begin(), factors.end(), [](const Factor &f) { return single_wire(f.kind); });
}

bool CorrectionOp::is_pauli() const {
    return std::all_of(factors.begin(), factors.end(), [](const Factor &f) {
        return f.kind == Elementary::I || f.kind == Elementary::SigmaX || f.kind == Elementary::SigmaZ;
    });
}

std::size_t CorrectionOp::weight() const {
    return static_cast<std::size_t>(
        std::count_if(factors.begin(), factors.end(), [](const Factor &f) { return f.kind != Elementary::I; }));
}

std::string CorrectionOp::render(std::size_t num_wires) const {
    // Split into runs of local factors and single non-local factors.
    std::vector<std::vector<Factor>> runs;
    std::vector<bool> run_local;
    for (const auto &f : factors) {
        bool local = single_wire(f.kind);
        if (local && !runs.empty() && run_local.back()) {
            runs.back().push_back(f);
        } else {
            runs.push_back({f});
            run_local.push_back(local);
        }
    }
    // Drop identity-only runs.
    std::vector<std::vector<Factor>> kept;
    std::vector<bool> kept_local;
    for (std::size_t k = 0; k < runs.size(); ++k) {
        if (run_local[k] && all_identity(runs[k])) {
            continue;
        }
        kept.push_back(runs[k]);
        kept_local.push_back(run_local[k]);
    }
    if (kept.empty()) {
        return "I";
    }
    if (kept.size() == 1 && kept_local[0]) {
        return render_local(kept[0], num_wires);
    }
    if (kept.size() == 1 && kept[0].size() == 1 && kept[0][0].kind == Elementary::Ucz && num_wires == 2) {
        return "Ucz";
    }
    if (kept.size() == 2 && !kept_local[0] && kept_local[1] && kept[0][0].kind == Elementary::Ucz) {
        const auto &w = kept[0][0].wires;
        if (num_wires == 2 && w.size() == 2 && w[0] == 0 && w[1] == 1) {
            return "Ucz(" + render_local(kept[1], num_wires) + ")";
        }
    }
    std::string out;
    for (std::size_t k = 0; k < kept.size(); ++k) {
        if (k) {
            out += "·";
        }
        if (kept_local[k]) {
            out += "(" + render_local(kept[k], num_wires) + ")";
            continue;
        }
        const Factor &f = kept[k][0];
        out += glyph(f.kind);
        if (f.kind != Elementary::Gate && f.kind != Elementary::GateAdjoint) {
            out += "[";
            for (std::size_t j = 0; j < f.wires.size(); ++j) {
                out += (j ? "," : "") + std::to_string(f.wires[j]);
            }
            out += "]";
        }
    }
    return out;
}

CorrectionOp CorrectionOp::from_compact(std::string_view text, std::size_t num_wires) {
    auto fail = [&]() { return UsageError("malformed compact operator '" + std::string(text) + "'"); };
    CorrectionOp op;
    std::string_view body = text;
    if (body.size() > 3 && body.substr(0, 2) == "C(" && body.back() == ')') {
        if (num_wires != 2) {
            throw fail();
        }
        op.factors.push_back({Elementary::Ucz, {0, 1}});
        body = body.substr(2, body.size() - 3);
    }
    if (body == "I") {
        if (op.factors.empty()) {
            op.factors.push_back({Elementary::I, {}});
        }
        return op;
    }
    std::vector<std::string_view> words;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = body.find(',', pos);
        words.push_back(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (words.size() != num_wires) {
        throw fail();
    }
    for (std::size_t w = 0; w < num_wires; ++w) {
        if (words[w] == "I") {
            continue;
        }
        for (char c : words[w]) {
            switch (c) {
                case 'Z':
                    op.factors.push_back({Elementary::SigmaZ, {w}});
                    break;
                case 'X':
                    op.factors.push_back({Elementary::SigmaX, {w}});
                    break;
                case 'P':
                    op.factors.push_back({Elementary::Up, {w}});
                    break;
                default:
                    throw fail();
            }
        }
    }
    if (op.factors.empty()) {
        op.factors.push_back({Elementary::I, {}});
    }
    return op;
}

std::size_t CorrectionTable::expected_size() const {
    std::size_t n = 1;
    for (auto s : group_sizes) {
        n *= s;
    }
    return n;
}

const CorrectionOp *CorrectionTable::find(const std::vector<std::size_t> &key) const {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
}

std::vector<std::vector<std::size_t>> all_outcome_keys(const std::vector<std::size_t> &group_sizes) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> key(group_sizes.size(), 0);
    std::size_t total = 1;
    for (auto s : group_sizes) {
        total *= s;
    }
    out.reserve(total);
    for (std::size_t n = 0; n < total; ++n) {
        out.push_back(key);
        for (std::size_t g = group_sizes.size(); g-- > 0;) {
            if (++key[g] < group_sizes[g]) {
                break;
            }
            key[g] = 0;
        }
    }
    return out;
}

}  // namespace mbgate
