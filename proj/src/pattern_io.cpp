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

#include "mbgate/pattern_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mbgate/errors.hpp"

namespace mbgate {

using nlohmann::json;

namespace {

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw PatternError(where + ": complex numbers must be [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

const json &field(const json &obj, const char *name, const std::string &where) {
    if (!obj.is_object()) {
        throw PatternError(where + ": expected an object");
    }
    auto it = obj.find(name);
    if (it == obj.end()) {
        throw PatternError(where + ": missing field '" + name + "'");
    }
    return *it;
}

std::vector<std::size_t> indices_from_json(const json &j, const std::string &where) {
    if (!j.is_array()) {
        throw PatternError(where + ": expected an array of qubit indices");
    }
    std::vector<std::size_t> out;
    for (const auto &v : j) {
        if (!v.is_number_unsigned()) {
            throw PatternError(where + ": qubit indices must be non-negative integers");
        }
        out.push_back(v.get<std::size_t>());
    }
    return out;
}

QubitSubset subset_from_json(const json &j, const std::string &where) {
    try {
        return QubitSubset(indices_from_json(j, where));
    } catch (const UsageError &e) {
        throw PatternError(where + ": " + e.what());
    }
}

json ket_to_json(const StateVector &s) {
    json terms = json::array();
    for (std::size_t k = 0; k < s.dim(); ++k) {
        if (s[k] == Complex(0.0, 0.0)) {
            continue;
        }
        std::string bits(s.num_qubits(), '0');
        for (std::size_t q = 0; q < s.num_qubits(); ++q) {
            if (k & (std::size_t{1} << (s.num_qubits() - 1 - q))) {
                bits[q] = '1';
            }
        }
        terms.push_back({{"coeff", complex_to_json(s[k])}, {"bits", bits}});
    }
    return terms;
}

StateVector ket_from_json(const json &terms, std::size_t num_qubits, const std::string &where) {
    if (!terms.is_array()) {
        throw PatternError(where + ": 'terms' must be an array");
    }
    std::vector<std::pair<Complex, std::string>> list;
    for (const auto &t : terms) {
        const json &bits = field(t, "bits", where);
        if (!bits.is_string()) {
            throw PatternError(where + ": 'bits' must be a string");
        }
        list.emplace_back(complex_from_json(field(t, "coeff", where), where), bits.get<std::string>());
    }
    try {
        return from_ket_expression(num_qubits, list);
    } catch (const std::exception &e) {
        throw PatternError(where + ": " + e.what());
    }
}

json matrix_to_json(const Matrix &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const json &rows, const std::string &where) {
    if (!rows.is_array() || rows.empty()) {
        throw PatternError(where + ": matrix must be a non-empty array of rows");
    }
    auto d = static_cast<Eigen::Index>(rows.size());
    Matrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        const json &row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
            throw PatternError(where + ": matrix must be square");
        }
        for (Eigen::Index j = 0; j < d; ++j) {
            m(i, j) = complex_from_json(row[static_cast<std::size_t>(j)], where);
        }
    }
    return m;
}

json unitary_to_json(const Unitary &u) { return {{"dim", u.dim()}, {"entries", matrix_to_json(u.matrix())}}; }

Unitary unitary_from_json(const json &j, const std::string &where) {
    const json &dim = field(j, "dim", where);
    Matrix m = matrix_from_json(field(j, "entries", where), where);
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() != static_cast<std::size_t>(m.rows())) {
        throw PatternError(where + ": 'dim' does not match the entries");
    }
    try {
        return Unitary(m);
    } catch (const UsageError &e) {
        throw PatternError(where + ": " + e.what());
    }
}

json op_to_json(const CorrectionOp &op) {
    json ops = json::array();
    for (const auto &f : op.factors) {
        ops.push_back({{"name", std::string(elementary_name(f.kind))}, {"wires", f.wires}});
    }
    return ops;
}

CorrectionOp op_from_json(const json &ops, const std::string &where) {
    if (!ops.is_array()) {
        throw PatternError(where + ": 'ops' must be an array");
    }
    CorrectionOp op;
    for (const auto &f : ops) {
        const json &name = field(f, "name", where);
        if (!name.is_string()) {
            throw PatternError(where + ": operator name must be a string");
        }
        Factor factor;
        try {
            factor.kind = elementary_from_name(name.get<std::string>());
        } catch (const UsageError &e) {
            throw PatternError(where + ": " + e.what());
        }
        auto w = f.find("wires");
        if (w != f.end()) {
            factor.wires = indices_from_json(*w, where);
        }
        op.factors.push_back(factor);
    }
    if (op.factors.empty()) {
        op.factors.push_back({Elementary::I, {}});
    }
    return op;
}

GatePattern pattern_from_json(const json &doc) {
    const std::string top = "pattern";
    GatePattern p;
    const json &name = field(doc, "name", top);
    if (!name.is_string()) {
        throw PatternError("pattern: 'name' must be a string");
    }
    p.name = name.get<std::string>();
    const json &nq = field(doc, "num_qubits", top);
    if (!nq.is_number_unsigned()) {
        throw PatternError("pattern: 'num_qubits' must be a non-negative integer");
    }
    p.num_qubits = nq.get<std::size_t>();
    if (p.num_qubits > 24) {
        throw PatternError("pattern: registers above 24 qubits are not supported");
    }
    p.input_wires = subset_from_json(field(doc, "inputs", top), "inputs");

    const json &resources = field(doc, "resources", top);
    if (!resources.is_array()) {
        throw PatternError("pattern: 'resources' must be an array");
    }
    for (std::size_t r = 0; r < resources.size(); ++r) {
        std::string where = "resource " + std::to_string(r);
        Resource res;
        res.qubits = subset_from_json(field(resources[r], "qubits", where), where);
        res.state = ket_from_json(field(resources[r], "terms", where), res.qubits.size(), where);
        p.resources.push_back(res);
    }

    const json &groups = field(doc, "groups", top);
    if (!groups.is_array()) {
        throw PatternError("pattern: 'groups' must be an array");
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const json &gj = groups[g];
        MeasurementGroup group;
        auto gname = gj.is_object() ? gj.find("name") : gj.end();
        group.name = (gj.is_object() && gname != gj.end() && gname->is_string()) ? gname->get<std::string>()
                                                                                  : "group " + std::to_string(g);
        std::string where = "group '" + group.name + "'";
        group.qubits = subset_from_json(field(gj, "qubits", where), where);
        group.basis.num_measured_qubits = group.qubits.size();
        const json &vectors = field(gj, "vectors", where);
        if (!vectors.is_array()) {
            throw PatternError(where + ": 'vectors' must be an array");
        }
        for (const auto &v : vectors) {
            const json &label = field(v, "label", where);
            if (!label.is_string()) {
                throw PatternError(where + ": labels must be strings");
            }
            try {
                group.labels.push_back(OutcomeLabel::parse(label.get<std::string>()));
            } catch (const UsageError &e) {
                throw PatternError(where + ": " + e.what());
            }
            group.basis.vectors.push_back(ket_from_json(field(v, "terms", where), group.qubits.size(), where));
        }
        p.groups.push_back(group);
    }

    p.output_wires = subset_from_json(field(doc, "outputs", top), "outputs");
    const json &target = field(doc, "target", top);
    p.target = unitary_from_json(target, "target");
    if (auto tn = target.find("name"); tn != target.end() && tn->is_string()) {
        p.target_name = tn->get<std::string>();
    }
    if (auto v = doc.find("vocabulary"); v != doc.end()) {
        if (!v->is_string()) {
            throw PatternError("pattern: 'vocabulary' must be a string");
        }
        try {
            p.vocabulary = vocabulary_from_name(v->get<std::string>());
        } catch (const UsageError &e) {
            throw PatternError(std::string("pattern: ") + e.what());
        }
    }
    if (auto pt = doc.find("predicted_target"); pt != doc.end() && !pt->is_null()) {
        p.predicted_target = unitary_from_json(*pt, "predicted_target");
    }
    if (auto notes = doc.find("notes"); notes != doc.end() && notes->is_array()) {
        for (const auto &n : *notes) {
            if (n.is_string()) {
                p.notes.push_back(n.get<std::string>());
            }
        }
    }

    // Group shapes must be sound before labels can be resolved.
    validate_pattern(p);

    if (auto corr = doc.find("corrections"); corr != doc.end() && !corr->is_null()) {
        if (!corr->is_array()) {
            throw PatternError("pattern: 'corrections' must be an array");
        }
        CorrectionTable table;
        table.group_sizes = p.group_sizes();
        for (std::size_t e = 0; e < corr->size(); ++e) {
            const json &entry = (*corr)[e];
            std::string where = "correction " + std::to_string(e);
            const json &labels = field(entry, "labels", where);
            if (!labels.is_array()) {
                throw PatternError(where + ": 'labels' must be an array");
            }
            std::vector<OutcomeLabel> ls;
            for (const auto &l : labels) {
                if (!l.is_string()) {
                    throw PatternError(where + ": labels must be strings");
                }
                try {
                    ls.push_back(OutcomeLabel::parse(l.get<std::string>()));
                } catch (const UsageError &ex) {
                    throw PatternError(where + ": " + ex.what());
                }
            }
            std::vector<std::size_t> key;
            try {
                key = p.key_of(ls);
            } catch (const UsageError &ex) {
                throw PatternError(where + ": " + ex.what());
            }
            if (table.entries.count(key)) {
                throw PatternError(where + ": duplicate entry for " + p.describe_key(key));
            }
            table.entries[key] = op_from_json(field(entry, "ops", where), where);
        }
        p.corrections = table;
        validate_pattern(p);
    }
    return p;
}

}  // namespace

GatePattern pattern_from_json_text(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw PatternError(std::string("pattern file is not valid JSON: ") + e.what());
    }
    try {
        return pattern_from_json(doc);
    } catch (const json::exception &e) {
        throw PatternError(std::string("pattern schema violation: ") + e.what());
    }
}

std::string pattern_to_json_text(const GatePattern &p) {
    json doc;
    doc["name"] = p.name;
    doc["num_qubits"] = p.num_qubits;
    doc["inputs"] = p.input_wires.indices();
    doc["resources"] = json::array();
    for (const auto &r : p.resources) {
        doc["resources"].push_back({{"qubits", r.qubits.indices()}, {"terms", ket_to_json(r.state)}});
    }
    doc["groups"] = json::array();
    for (const auto &g : p.groups) {
        json vectors = json::array();
        for (std::size_t k = 0; k < g.basis.vectors.size(); ++k) {
            vectors.push_back({{"label", g.labels[k].str()}, {"terms", ket_to_json(g.basis.vectors[k])}});
        }
        doc["groups"].push_back({{"name", g.name}, {"qubits", g.qubits.indices()}, {"vectors", vectors}});
    }
    doc["outputs"] = p.output_wires.indices();
    if (p.corrections) {
        json entries = json::array();
        for (const auto &[key, op] : p.corrections->entries) {
            json labels = json::array();
            for (const auto &l : p.labels_of(key)) {
                labels.push_back(l.str());
            }
            entries.push_back({{"labels", labels}, {"ops", op_to_json(op)}});
        }
        doc["corrections"] = entries;
    } else {
        doc["corrections"] = nullptr;
    }
    doc["target"] = unitary_to_json(p.target);
    doc["target"]["name"] = p.target_name;
    doc["vocabulary"] = std::string(vocabulary_name(p.vocabulary));
    if (p.predicted_target) {
        doc["predicted_target"] = unitary_to_json(*p.predicted_target);
    }
    if (!p.notes.empty()) {
        doc["notes"] = p.notes;
    }
    return doc.dump(1) + "\n";
}

GatePattern load_pattern(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw PatternError("cannot open pattern file '" + path.string() + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return pattern_from_json_text(buf.str());
}

void save_pattern(const GatePattern &pattern, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw PatternError("cannot write pattern file '" + path.string() + "'");
    }
    out << pattern_to_json_text(pattern);
}

Matrix matrix_from_json_text(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw PatternError(std::string("matrix file is not valid JSON: ") + e.what());
    }
    const json &rows = doc.is_object() && doc.contains("entries") ? doc["entries"] : doc;
    return matrix_from_json(rows, "matrix");
}

}  // namespace mbgate
