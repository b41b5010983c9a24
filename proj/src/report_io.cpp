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

#include "mbgate/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "mbgate/catalog.hpp"
#include "mbgate/errors.hpp"
#include "mbgate/gates.hpp"
#include "mbgate/printed_tables.hpp"

namespace mbgate {

namespace {

using Json = nlohmann::ordered_json;

std::string fixed(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

// Terminal columns of a UTF-8 string, one per code point.
std::size_t display_width(const std::string &s) {
    std::size_t w = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) {
            ++w;
        }
    }
    return w;
}

std::string pad(const std::string &s, std::size_t width) {
    std::size_t w = display_width(s);
    return w >= width ? s : s + std::string(width - w, ' ');
}

std::string dump(const Json &j) { return j.dump(1) + "\n"; }

Json key_json(const std::vector<std::size_t> &key) { return Json(key); }

Json op_json(const CorrectionOp &op, std::size_t num_wires) {
    Json ops = Json::array();
    for (const auto &f : op.factors) {
        ops.push_back({{"name", std::string(elementary_name(f.kind))}, {"wires", f.wires}});
    }
    return {{"text", op.render(num_wires)}, {"ops", ops}};
}

Json cells_json(const GatePattern &p, const std::vector<FidelityCell> &cells, bool with_value) {
    Json out = Json::array();
    for (const auto &c : cells) {
        Json j = {{"input", c.input}, {"key", key_json(c.key)}, {"outcome", p.describe_key(c.key)}};
        if (with_value) {
            j["value"] = c.fidelity;
        }
        out.push_back(j);
    }
    return out;
}

std::vector<FidelityCell> cells_from_json(const Json &j) {
    std::vector<FidelityCell> out;
    for (const auto &c : j) {
        FidelityCell cell;
        cell.input = c.at("input").get<std::size_t>();
        cell.key = c.at("key").get<std::vector<std::size_t>>();
        if (c.contains("value")) {
            cell.fidelity = c.at("value").get<double>();
        }
        out.push_back(std::move(cell));
    }
    return out;
}

std::string annihilated_text(const std::vector<std::size_t> &cols) {
    std::string s;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        s += (k ? "," : "") + std::string("c") + std::to_string(cols[k]);
    }
    return s;
}

}  // namespace

OutputFormat output_format_from_name(std::string_view name) {
    if (name == "text") {
        return OutputFormat::Text;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    throw UsageError("unknown output format '" + std::string(name) + "' (text, json, csv)");
}

std::string render_verification(const GatePattern &p, const std::vector<VerificationReport> &reports,
                                OutputFormat format) {
    auto keys = all_outcome_keys(p.group_sizes());
    if (format == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto &r : reports) {
            Json inputs = Json::array();
            for (std::size_t i = 0; i < r.input_descriptions.size(); ++i) {
                inputs.push_back({{"description", r.input_descriptions[i]},
                                  {"min_fidelity", r.min_fidelity_per_input[i]},
                                  {"fidelities", r.fidelities[i]}});
            }
            Json j = {{"pattern", r.pattern_name},
                      {"target", r.target_name},
                      {"corrections", r.corrections_source},
                      {"pass", r.pass},
                      {"min_fidelity", r.min_fidelity},
                      {"outcome_count", r.outcome_count},
                      {"max_probability_error", r.max_probability_error},
                      {"failing_cells", r.failing_cells},
                      {"zero_probability", cells_json(p, r.zero_probability, false)},
                      {"suspicious", cells_json(p, r.suspicious, true)},
                      {"worst", cells_json(p, r.worst, true)}};
            if (r.table_diff) {
                Json cells = Json::array();
                for (const auto &k : r.table_diff->cells) {
                    cells.push_back({{"key", key_json(k)}, {"outcome", p.describe_key(k)}});
                }
                j["table_diff"] = {
                    {"total", r.table_diff->total}, {"mismatches", r.table_diff->mismatches}, {"cells", cells}};
            }
            j["inputs"] = inputs;
            arr.push_back(j);
        }
        Json doc = {{"kind", "verification"}, {"reports", arr}};
        return dump(doc);
    }
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << "corrections,input,outcome,fidelity\n";
        for (const auto &r : reports) {
            for (std::size_t i = 0; i < r.fidelities.size(); ++i) {
                for (std::size_t k = 0; k < r.fidelities[i].size(); ++k) {
                    char buf[32];
                    std::snprintf(buf, sizeof(buf), "%.17g", r.fidelities[i][k]);
                    out << csv_field(r.corrections_source) << ',' << csv_field(r.input_descriptions[i]) << ','
                        << csv_field(p.describe_key(keys[k])) << ',' << buf << '\n';
                }
            }
        }
        return out.str();
    }
    for (std::size_t n = 0; n < reports.size(); ++n) {
        const auto &r = reports[n];
        if (n) {
            out << '\n';
        }
        std::size_t generic = 0;
        for (const auto &d : r.input_descriptions) {
            generic += d.rfind("random", 0) == 0 ? 1 : 0;
        }
        out << "pattern:      " << r.pattern_name << "\n";
        out << "target:       " << r.target_name << "\n";
        out << "corrections:  " << r.corrections_source << "\n";
        out << "outcomes:     " << r.outcome_count << "\n";
        out << "inputs:       " << r.input_descriptions.size() << " (" << r.input_descriptions.size() - generic
            << " basis, " << generic << " random)\n";
        out << "min fidelity: " << fixed(r.min_fidelity) << "\n";
        out << "probability:  max |sum - 1| = " << sci(r.max_probability_error) << "\n";
        out << "null cells:   " << r.zero_probability.size() << ", suspicious " << r.suspicious.size() << "\n";
        if (r.table_diff) {
            out << "table diff:   " << r.table_diff->mismatches << " of " << r.table_diff->total
                << " cells differ from the derived table\n";
        }
        if (!r.worst.empty()) {
            out << "failing cells: " << r.failing_cells << "; lowest:\n";
            for (const auto &c : r.worst) {
                out << "  " << r.input_descriptions[c.input] << "  " << p.describe_key(c.key) << "  "
                    << fixed(c.fidelity) << "\n";
            }
        }
        out << "result:       " << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    return out.str();
}

std::vector<VerificationReport> verification_reports_from_json(const std::string &text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception &e) {
        throw UsageError(std::string("report is not valid JSON: ") + e.what());
    }
    std::vector<VerificationReport> out;
    try {
        for (const auto &j : doc.at("reports")) {
            VerificationReport r;
            r.pattern_name = j.at("pattern").get<std::string>();
            r.target_name = j.at("target").get<std::string>();
            r.corrections_source = j.at("corrections").get<std::string>();
            r.pass = j.at("pass").get<bool>();
            r.min_fidelity = j.at("min_fidelity").get<double>();
            r.outcome_count = j.at("outcome_count").get<std::size_t>();
            r.max_probability_error = j.at("max_probability_error").get<double>();
            r.failing_cells = j.at("failing_cells").get<std::size_t>();
            r.zero_probability = cells_from_json(j.at("zero_probability"));
            r.suspicious = cells_from_json(j.at("suspicious"));
            r.worst = cells_from_json(j.at("worst"));
            if (j.contains("table_diff")) {
                TableDiff d;
                d.total = j["table_diff"].at("total").get<std::size_t>();
                d.mismatches = j["table_diff"].at("mismatches").get<std::size_t>();
                for (const auto &c : j["table_diff"].at("cells")) {
                    d.cells.push_back(c.at("key").get<std::vector<std::size_t>>());
                }
                r.table_diff = d;
            }
            for (const auto &in : j.at("inputs")) {
                r.input_descriptions.push_back(in.at("description").get<std::string>());
                r.min_fidelity_per_input.push_back(in.at("min_fidelity").get<double>());
                r.fidelities.push_back(in.at("fidelities").get<std::vector<double>>());
            }
            out.push_back(std::move(r));
        }
    } catch (const Json::exception &e) {
        throw UsageError(std::string("malformed verification report: ") + e.what());
    }
    return out;
}

std::string render_derivation(const GatePattern &p, const DerivationResult &result, OutputFormat format) {
    std::size_t m = p.output_wires.size();
    std::ostringstream out;
    if (format == OutputFormat::Json) {
        Json entries = Json::array();
        for (const auto &[key, op] : result.table.entries) {
            Json e = {{"key", key_json(key)}, {"outcome", p.describe_key(key)}};
            e.update(op_json(op, m));
            entries.push_back(e);
        }
        Json failures = Json::array();
        for (const auto &f : result.failures) {
            failures.push_back({{"key", key_json(f.key)},
                                {"outcome", p.describe_key(f.key)},
                                {"best_fidelity", f.best_fidelity},
                                {"reason", f.reason}});
        }
        Json doc = {{"kind", "derivation"},
                    {"pattern", p.name},
                    {"vocabulary", std::string(vocabulary_name(p.vocabulary))},
                    {"dictionary_size", result.dictionary_size},
                    {"outcomes", result.table.expected_size()},
                    {"complete", result.complete()},
                    {"entries", entries},
                    {"failures", failures}};
        return dump(doc);
    }
    if (format == OutputFormat::Csv) {
        out << "outcome,correction,failure_best_fidelity\n";
        for (const auto &key : all_outcome_keys(result.table.group_sizes)) {
            const CorrectionOp *op = result.table.find(key);
            out << csv_field(p.describe_key(key)) << ',';
            if (op) {
                out << csv_field(op->render(m)) << ",\n";
            } else {
                auto it = std::find_if(result.failures.begin(), result.failures.end(),
                                       [&](const DerivationFailure &f) { return f.key == key; });
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.17g", it == result.failures.end() ? 0.0 : it->best_fidelity);
                out << "," << buf << '\n';
            }
        }
        return out.str();
    }
    out << "pattern:    " << p.name << "\n";
    out << "dictionary: " << vocabulary_name(p.vocabulary) << ", " << result.dictionary_size << " classes\n";
    out << "derived:    " << result.table.entries.size() << " of " << result.table.expected_size()
        << " outcomes\n";
    for (const auto &note : p.notes) {
        out << "note:       " << note << "\n";
    }
    std::size_t width = 0;
    for (const auto &[key, op] : result.table.entries) {
        width = std::max(width, display_width(p.describe_key(key)));
    }
    for (const auto &[key, op] : result.table.entries) {
        out << "  " << pad(p.describe_key(key), width) << "  " << op.render(m) << "\n";
    }
    if (!result.failures.empty()) {
        out << "failures:   " << result.failures.size() << "\n";
        std::size_t shown = 0;
        for (const auto &f : result.failures) {
            if (shown++ == 16) {
                out << "  ...\n";
                break;
            }
            out << "  " << p.describe_key(f.key) << "  best fidelity " << fixed(f.best_fidelity, 6) << "  ("
                << f.reason << ")\n";
        }
    }
    out << "result:     " << (result.complete() ? "COMPLETE" : "INCOMPLETE") << "\n";
    return out.str();
}

std::string render_loss(const GatePattern &p, const LossReport &r, OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::Json) {
        Json lossy = Json::array();
        for (const auto &o : r.lossy_outcomes) {
            lossy.push_back({{"key", key_json(o.key)},
                             {"outcome", p.describe_key(o.key)},
                             {"probability", o.probability},
                             {"rank", o.rank},
                             {"annihilated", o.annihilated}});
        }
        Json zero = Json::array();
        for (const auto &k : r.zero_probability) {
            zero.push_back({{"key", key_json(k)}, {"outcome", p.describe_key(k)}});
        }
        Json suspicious = Json::array();
        for (const auto &k : r.suspicious) {
            suspicious.push_back({{"key", key_json(k)}, {"outcome", p.describe_key(k)}});
        }
        Json doc = {{"kind", "loss"},
                    {"pattern", r.pattern_name},
                    {"outcomes", r.outcome_count},
                    {"lossy", r.lossy},
                    {"target_entangling", r.target_entangling},
                    {"interaction_lost", r.interaction_lost},
                    {"rank_histogram", r.rank_histogram},
                    {"zero_probability", zero},
                    {"suspicious", suspicious},
                    {"lossy_outcomes", lossy}};
        return dump(doc);
    }
    if (format == OutputFormat::Csv) {
        out << "outcome,probability,rank,annihilated\n";
        for (const auto &o : r.lossy_outcomes) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", o.probability);
            out << csv_field(p.describe_key(o.key)) << ',' << buf << ',' << o.rank << ','
                << csv_field(annihilated_text(o.annihilated)) << '\n';
        }
        return out.str();
    }
    out << "pattern:      " << r.pattern_name << "\n";
    out << "outcomes:     " << r.outcome_count << " (" << r.zero_probability.size()
        << " with zero probability on a generic input, " << r.suspicious.size() << " suspicious)\n";
    out << "rank counts: ";
    for (std::size_t k = 0; k < r.rank_histogram.size(); ++k) {
        if (r.rank_histogram[k]) {
            out << " rank " << k << ": " << r.rank_histogram[k] << ";";
        }
    }
    out << "\n";
    if (r.interaction_lost) {
        out << "interaction:  every surviving outcome map is a product across the inputs; the target entangles\n";
    }
    std::size_t shown = 0;
    for (const auto &o : r.lossy_outcomes) {
        if (shown++ == 32) {
            out << "  ... (" << r.lossy_outcomes.size() - 32 << " more)\n";
            break;
        }
        out << "  " << p.describe_key(o.key) << "  p=" << fixed(o.probability, 6) << "  rank " << o.rank
            << "  annihilates " << annihilated_text(o.annihilated) << "\n";
    }
    out << "verdict:      " << (r.lossy ? "LOSSY" : "not lossy") << "\n";
    return out.str();
}

std::string render_variants(std::string_view name, const VariantReport &r, OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::Json) {
        Json trials = Json::array();
        for (const auto &t : r.trials) {
            trials.push_back({{"variant", t.variant},
                              {"basis_valid", t.basis_valid},
                              {"basis_message", t.basis_message},
                              {"outcomes", t.outcome_count},
                              {"derivation_failures", t.derivation_failures},
                              {"verified", t.verified},
                              {"min_fidelity", t.min_fidelity}});
        }
        Json doc = {{"kind", "variants"}, {"pattern", std::string(name)}, {"trials", trials}};
        doc["selected"] = r.selected ? Json(*r.selected) : Json(nullptr);
        return dump(doc);
    }
    if (format == OutputFormat::Csv) {
        out << "variant,basis_valid,outcomes,derivation_failures,verified,min_fidelity\n";
        for (const auto &t : r.trials) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", t.min_fidelity);
            out << t.variant << ',' << t.basis_valid << ',' << t.outcome_count << ',' << t.derivation_failures
                << ',' << t.verified << ',' << buf << '\n';
        }
        return out.str();
    }
    out << "variants of " << name << ":\n";
    for (const auto &t : r.trials) {
        out << "  " << pad(t.variant, 10);
        if (!t.basis_valid) {
            out << "rejected: " << t.basis_message << "\n";
        } else if (t.derivation_failures) {
            out << "derivation failed on " << t.derivation_failures << " of " << t.outcome_count << " outcomes\n";
        } else {
            out << (t.verified ? "verified" : "verification failed") << ", min fidelity "
                << fixed(t.min_fidelity) << "\n";
        }
    }
    out << "selected:   " << r.selected.value_or("none") << "\n";
    return out.str();
}

std::string render_parity(const std::vector<ParityRow> &rows, OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto &r : rows) {
            arr.push_back({{"n", r.n},
                           {"pass_vs_cz", r.pass_vs_cz},
                           {"min_fidelity_vs_cz", r.min_fidelity_vs_cz},
                           {"derived_against", r.derived_against},
                           {"pass_vs_predicted", r.pass_vs_predicted}});
        }
        return dump({{"kind", "parity"}, {"rows", arr}});
    }
    if (format == OutputFormat::Csv) {
        out << "n,pass_vs_cz,min_fidelity_vs_cz,derived_against,pass_vs_predicted\n";
        for (const auto &r : rows) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", r.min_fidelity_vs_cz);
            out << r.n << ',' << r.pass_vs_cz << ',' << buf << ',' << r.derived_against << ','
                << r.pass_vs_predicted << '\n';
        }
        return out.str();
    }
    out << "  n  vs CZ  min fidelity    derived vs  vs predicted\n";
    for (const auto &r : rows) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%3zu  %-5s  %s  %-10s  %s\n", r.n, r.pass_vs_cz ? "pass" : "fail",
                      fixed(r.min_fidelity_vs_cz).c_str(), r.derived_against.c_str(),
                      r.pass_vs_predicted ? "pass" : "fail");
        out << buf;
    }
    return out.str();
}

std::string render_table_reproduction(int id, const GatePattern &p, const CorrectionTable &derived,
                                      const TableDiff &diff, OutputFormat format) {
    std::size_t m = p.output_wires.size();
    CorrectionTable printed = printed_table(id);
    auto rows = printed_row_labels(id);
    auto cols = printed_column_labels(id);
    bool grid = !rows.empty();
    auto differs = [&](const std::vector<std::size_t> &key) {
        return std::find(diff.cells.begin(), diff.cells.end(), key) != diff.cells.end();
    };
    auto cell_key = [&](std::size_t r, std::size_t c) {
        return grid ? p.key_of({cols[c], rows[r]}) : p.key_of({cols[c]});
    };
    std::size_t nrows = grid ? rows.size() : 1;
    std::ostringstream out;

    if (format == OutputFormat::Json) {
        Json cells = Json::array();
        for (std::size_t r = 0; r < nrows; ++r) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                auto key = cell_key(r, c);
                Json j;
                if (grid) {
                    j["row"] = rows[r].str();
                }
                j["column"] = cols[c].str();
                j["outcome"] = p.describe_key(key);
                j["derived"] = derived.find(key)->render(m);
                j["printed"] = printed.find(key)->render(m);
                j["match"] = !differs(key);
                cells.push_back(j);
            }
        }
        Json doc = {{"kind", "table"},      {"table", id},           {"pattern", p.name},
                    {"cells", cells},       {"total", diff.total},   {"mismatches", diff.mismatches}};
        return dump(doc);
    }
    if (format == OutputFormat::Csv) {
        out << "row,column,derived,printed,match\n";
        for (std::size_t r = 0; r < nrows; ++r) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                auto key = cell_key(r, c);
                out << csv_field(grid ? rows[r].str() : "") << ',' << csv_field(cols[c].str()) << ','
                    << csv_field(derived.find(key)->render(m)) << ',' << csv_field(printed.find(key)->render(m))
                    << ',' << (differs(key) ? 0 : 1) << '\n';
            }
        }
        return out.str();
    }

    out << "Table " << id << " (" << p.name << "), derived corrections\n";
    if (!grid) {
        auto pre = printed_pre_correction_text(id);
        std::vector<std::vector<std::string>> lines = {{"outcome", "state before correction", "derived", "printed"}};
        for (std::size_t c = 0; c < cols.size(); ++c) {
            auto key = cell_key(0, c);
            std::string d = derived.find(key)->render(m);
            if (differs(key)) {
                d += " *";
            }
            lines.push_back({cols[c].str(), pre[c], d, printed.find(key)->render(m)});
        }
        std::vector<std::size_t> w(4, 0);
        for (const auto &l : lines) {
            for (std::size_t k = 0; k < 4; ++k) {
                w[k] = std::max(w[k], display_width(l[k]));
            }
        }
        for (const auto &l : lines) {
            out << pad(l[0], w[0]) << "  " << pad(l[1], w[1]) << "  " << pad(l[2], w[2]) << "  " << l[3] << "\n";
        }
    } else {
        std::vector<std::vector<std::string>> text(nrows, std::vector<std::string>(cols.size()));
        std::size_t lw = 0;
        std::vector<std::size_t> cw(cols.size(), 0);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            cw[c] = display_width(cols[c].str());
        }
        for (std::size_t r = 0; r < nrows; ++r) {
            lw = std::max(lw, display_width(rows[r].str()));
            for (std::size_t c = 0; c < cols.size(); ++c) {
                auto key = cell_key(r, c);
                text[r][c] = derived.find(key)->render(m) + (differs(key) ? "*" : "");
                cw[c] = std::max(cw[c], display_width(text[r][c]));
            }
        }
        out << pad(p.groups[1].name + "\\" + p.groups[0].name, lw);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out << "  " << pad(cols[c].str(), cw[c]);
        }
        out << "\n";
        for (std::size_t r = 0; r < nrows; ++r) {
            out << pad(rows[r].str(), lw);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                out << "  " << pad(text[r][c], cw[c]);
            }
            out << "\n";
        }
    }
    out << "cells differing from the printed table: " << diff.mismatches << " of " << diff.total
        << (diff.mismatches ? " (marked *)" : "") << "\n";
    std::size_t shown = 0;
    for (const auto &key : diff.cells) {
        if (shown++ == 16) {
            out << "  ...\n";
            break;
        }
        out << "  " << p.describe_key(key) << ": derived " << derived.find(key)->render(m) << ", printed "
            << printed.find(key)->render(m) << "\n";
    }
    if (grid) {
        out << "note: the printed table is split into two half-width blocks; shown here as one table, rows "
            << p.groups[1].name << ", columns " << p.groups[0].name << "\n";
    }
    return out.str();
}

std::string render_catalog(OutputFormat format) {
    struct Row {
        std::string name, usage, target, description;
        std::size_t qubits;
        std::vector<std::size_t> arities;
    };
    std::vector<Row> rows;
    for (const auto &e : catalog_entries()) {
        GatePattern p;
        if (e.name == "single-qubit") {
            p = single_qubit_pattern(Unitary(gates::hadamard()));
        } else if (e.name == "phase") {
            p = phase_gate_pattern();
        } else if (e.name == "pi8") {
            p = pi8_gate_pattern();
        } else if (e.name == "cz") {
            p = controlled_z_pattern(CzRow::HRow);
        } else if (e.name == "cz-bell") {
            p = controlled_z_pattern(CzRow::BellRow);
        } else if (e.name == "cz-no-ee") {
            p = cz_without_link_pattern(PairBasis::Bell);
        } else if (e.name == "chain-cz") {
            p = chain_cz_pattern(1);
        } else if (e.name == "triple-cz") {
            p = triple_cz_pattern();
        } else if (e.name == "controlled-phase") {
            p = controlled_phase_pattern();
        } else if (e.name == "cnot") {
            p = cnot_pattern();
        } else if (e.name == "swap") {
            p = swap_pattern();
        } else if (e.name == "toffoli") {
            p = toffoli_pattern();
        } else {
            p = fredkin_pattern();
        }
        Row r{e.name, e.usage, p.target_name, e.description, p.num_qubits, {}};
        for (const auto &g : p.groups) {
            r.arities.push_back(g.qubits.size());
        }
        if (e.name == "chain-cz") {
            r.qubits = 0;
        }
        rows.push_back(std::move(r));
    }
    auto arity_text = [](const std::vector<std::size_t> &a) {
        std::string s;
        for (std::size_t k = 0; k < a.size(); ++k) {
            s += (k ? "," : "") + std::to_string(a[k]);
        }
        return s;
    };
    std::ostringstream out;
    if (format == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto &r : rows) {
            Json j = {{"name", r.name}, {"usage", r.usage}, {"target", r.target}, {"description", r.description}};
            j["qubits"] = r.qubits ? Json(r.qubits) : Json("2n+6");
            j["group_arities"] = r.qubits ? Json(r.arities) : Json("n+2,n+2");
            arr.push_back(j);
        }
        return dump({{"kind", "catalog"}, {"patterns", arr}});
    }
    if (format == OutputFormat::Csv) {
        out << "name,qubits,group_arities,target,usage\n";
        for (const auto &r : rows) {
            out << r.name << ',' << (r.qubits ? std::to_string(r.qubits) : "2n+6") << ','
                << csv_field(r.qubits ? arity_text(r.arities) : "n+2,n+2") << ',' << csv_field(r.target) << ','
                << csv_field(r.usage) << '\n';
        }
        return out.str();
    }
    std::size_t wu = 5;
    std::size_t wt = 6;
    for (const auto &r : rows) {
        wu = std::max(wu, display_width(r.usage));
        wt = std::max(wt, display_width(r.target));
    }
    out << pad("usage", wu) << "  qubits  groups    " << pad("target", wt) << "  description\n";
    for (const auto &r : rows) {
        out << pad(r.usage, wu) << "  " << pad(r.qubits ? std::to_string(r.qubits) : "2n+6", 6) << "  "
            << pad(r.qubits ? arity_text(r.arities) : "n+2,n+2", 8) << "  " << pad(r.target, wt) << "  "
            << r.description << "\n";
    }
    return out.str();
}

}  // namespace mbgate
