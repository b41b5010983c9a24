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

#include "mbgate/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "mbgate/catalog.hpp"
#include "mbgate/errors.hpp"
#include "mbgate/gates.hpp"
#include "mbgate/oracle.hpp"
#include "mbgate/pattern_io.hpp"
#include "mbgate/printed_tables.hpp"
#include "mbgate/report_io.hpp"

namespace mbgate {

namespace {

struct Config {
    std::string pattern;
    std::string pattern_file;
    std::optional<std::size_t> n;
    std::string variant;
    std::string resource;
    std::string basis;
    std::string u_file;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "text";
    double tolerance = Tolerances::kFidelityGap;
    std::size_t random_inputs = 20;
    int table = 0;
};

struct Resolved {
    GatePattern pattern;
    /// Set when the variant was chosen by trial.
    std::optional<VariantReport> variants;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int printed_id_for(const std::string &name) {
    if (name == "phase") {
        return 2;
    }
    if (name == "pi8") {
        return 3;
    }
    if (name == "controlled-phase") {
        return 4;
    }
    if (name == "cnot") {
        return 5;
    }
    if (name == "swap") {
        return 6;
    }
    return 0;
}

void reject_unused(const Config &c, const std::string &name) {
    auto refuse = [&](bool set, const char *flag) {
        if (set) {
            throw UsageError(std::string(flag) + " does not apply to pattern '" + name + "'");
        }
    };
    refuse(c.n.has_value() && name != "chain-cz", "--n");
    refuse(!c.variant.empty() && name != "swap" && name != "toffoli" && name != "fredkin", "--variant");
    refuse(!c.resource.empty() && name != "cz", "--resource");
    refuse(!c.basis.empty() && name != "cz" && name != "cz-no-ee", "--basis");
    refuse(!c.u_file.empty() && name != "single-qubit", "--u");
}

Resolved resolve(const Config &c) {
    if (!c.pattern.empty() && !c.pattern_file.empty()) {
        throw UsageError("give either --pattern or --pattern-file, not both");
    }
    if (!c.pattern_file.empty()) {
        if (c.n || !c.variant.empty() || !c.resource.empty() || !c.basis.empty() || !c.u_file.empty()) {
            throw UsageError("pattern options do not apply to --pattern-file");
        }
        return {load_pattern(c.pattern_file), std::nullopt};
    }
    if (c.pattern.empty()) {
        throw UsageError("--pattern or --pattern-file is required");
    }
    const std::string &name = c.pattern;
    const auto &entries = catalog_entries();
    if (std::none_of(entries.begin(), entries.end(), [&](const CatalogEntry &e) { return e.name == name; })) {
        throw UsageError("unknown pattern '" + name + "' (see 'list')");
    }
    reject_unused(c, name);
    if (name == "single-qubit") {
        Matrix u = c.u_file.empty() ? gates::hadamard() : matrix_from_json_text(read_file(c.u_file));
        return {single_qubit_pattern(Unitary(u)), std::nullopt};
    }
    if (name == "phase") {
        return {phase_gate_pattern(), std::nullopt};
    }
    if (name == "pi8") {
        return {pi8_gate_pattern(), std::nullopt};
    }
    if (name == "cz") {
        LinkResource link = LinkResource::H;
        if (c.resource == "bell") {
            link = LinkResource::PhiPlus;
        } else if (!c.resource.empty() && c.resource != "h") {
            throw UsageError("--resource must be h or bell");
        }
        AlphaBasis alpha = link == LinkResource::H ? AlphaBasis::Ghz : AlphaBasis::PlusMinus;
        if (c.basis == "ghz") {
            alpha = AlphaBasis::Ghz;
        } else if (c.basis == "plus-minus") {
            alpha = AlphaBasis::PlusMinus;
        } else if (!c.basis.empty()) {
            throw UsageError("--basis for cz must be ghz or plus-minus");
        }
        return {controlled_z_configuration(link, alpha), std::nullopt};
    }
    if (name == "cz-bell") {
        return {controlled_z_pattern(CzRow::BellRow), std::nullopt};
    }
    if (name == "cz-no-ee") {
        PairBasis b = PairBasis::Bell;
        if (c.basis == "h") {
            b = PairBasis::HPair;
        } else if (!c.basis.empty() && c.basis != "bell") {
            throw UsageError("--basis for cz-no-ee must be bell or h");
        }
        return {cz_without_link_pattern(b), std::nullopt};
    }
    if (name == "chain-cz") {
        if (!c.n || *c.n < 1) {
            throw UsageError("chain-cz needs --n >= 1");
        }
        if (*c.n > 5) {
            throw UsageError("chain-cz is limited to --n <= 5 (16 qubits)");
        }
        return {chain_cz_pattern(*c.n), std::nullopt};
    }
    if (name == "triple-cz") {
        return {triple_cz_pattern(), std::nullopt};
    }
    if (name == "controlled-phase") {
        return {controlled_phase_pattern(), std::nullopt};
    }
    if (name == "cnot") {
        return {cnot_pattern(), std::nullopt};
    }
    if (name == "swap") {
        if (c.variant.empty() || c.variant == "plain") {
            return {swap_pattern(SwapResource::Plain), std::nullopt};
        }
        if (c.variant == "hadamard") {
            return {swap_pattern(SwapResource::HadamardOnMiddle), std::nullopt};
        }
        throw UsageError("--variant for swap must be plain or hadamard");
    }
    if (name == "toffoli") {
        if (c.variant.empty() || c.variant == "corrected") {
            return {toffoli_pattern(ToffoliVariant::Corrected), std::nullopt};
        }
        if (c.variant == "literal") {
            return {toffoli_pattern(ToffoliVariant::Literal), std::nullopt};
        }
        if (c.variant == "auto") {
            VariantReport rep = resolve_toffoli_variant(c.seed);
            ToffoliVariant v = rep.selected == std::optional<std::string>("literal") ? ToffoliVariant::Literal
                                                                                     : ToffoliVariant::Corrected;
            return {toffoli_pattern(v), rep};
        }
        throw UsageError("--variant for toffoli must be corrected, literal or auto");
    }
    if (c.variant.empty() || c.variant == "literal") {
        return {fredkin_pattern(FredkinVariant::Literal), std::nullopt};
    }
    if (c.variant == "flip-i") {
        return {fredkin_pattern(FredkinVariant::FlipOnI), std::nullopt};
    }
    throw UsageError("--variant for fredkin must be literal or flip-i");
}

double threshold(const Config &c) {
    if (!(c.tolerance >= 0.0 && c.tolerance < 1.0)) {
        throw UsageError("--tolerance must be in [0, 1)");
    }
    return 1.0 - c.tolerance;
}

std::string source_name(const GatePattern &p) { return printed_id_for(p.name) ? "printed" : "shipped"; }

void print_variants(const Resolved &r, OutputFormat fmt, std::ostream &out) {
    if (r.variants && fmt == OutputFormat::Text) {
        out << render_variants(r.pattern.name, *r.variants, fmt) << "\n";
    }
}

int cmd_list(const Config &c, std::ostream &out) {
    out << render_catalog(output_format_from_name(c.format));
    return kExitPass;
}

int cmd_verify(const Config &c, std::ostream &out, std::ostream &err) {
    OutputFormat fmt = output_format_from_name(c.format);
    double thr = threshold(c);
    Resolved r = resolve(c);
    const GatePattern &p = r.pattern;
    print_variants(r, fmt, out);

    VerifyOptions vopt;
    vopt.seed = c.seed;
    vopt.random_inputs = c.random_inputs;
    vopt.fidelity_threshold = thr;
    auto inputs = default_inputs(p.input_wires.size(), c.random_inputs, c.seed);

    std::vector<VerificationReport> reports;
    std::optional<VerificationReport> shipped;
    if (p.corrections) {
        vopt.corrections_source = source_name(p);
        shipped = verify_pattern(p, inputs, vopt);
    }

    CorrectionDictionary dict = CorrectionDictionary::for_pattern(p);
    DeriveOptions dopt;
    dopt.seed = c.seed;
    dopt.fidelity_threshold = thr;
    DerivationResult derived = try_derive_corrections(p, dict, dopt);
    std::string derived_source = "derived";
    if (!derived.complete() && p.predicted_target) {
        // Correct towards the gate the wiring actually implements and show
        // how far that is from the declared target.
        dopt.target_override = p.predicted_target;
        DerivationResult alt = try_derive_corrections(p, dict, dopt);
        if (alt.complete()) {
            derived = std::move(alt);
            derived_source = "derived against the predicted gate";
        }
    }
    int status = kExitFailure;
    if (derived.complete()) {
        vopt.corrections = &derived.table;
        vopt.corrections_source = derived_source;
        VerificationReport rep = verify_pattern(p, inputs, vopt);
        if (shipped) {
            shipped->table_diff = compare_tables(derived.table, *p.corrections, p.output_wires.size(),
                                                 &p.target.matrix());
        }
        status = rep.pass ? kExitPass : kExitFailure;
        if (shipped) {
            reports.push_back(*shipped);
        }
        reports.push_back(std::move(rep));
    } else {
        if (shipped) {
            status = shipped->pass ? kExitPass : kExitFailure;
            reports.push_back(*shipped);
        }
        err << "derivation incomplete: " << derived.failures.size() << " of " << derived.table.expected_size()
            << " outcomes have no correction in the " << vocabulary_name(p.vocabulary) << " dictionary\n";
        std::size_t shown = 0;
        for (const auto &f : derived.failures) {
            if (shown++ == 8) {
                err << "  ...\n";
                break;
            }
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6f", f.best_fidelity);
            err << "  " << p.describe_key(f.key) << ": best fidelity " << buf << " (" << f.reason << ")\n";
        }
    }
    if (!reports.empty()) {
        out << render_verification(p, reports, fmt);
    }
    return status;
}

int cmd_derive(const Config &c, std::ostream &out) {
    OutputFormat fmt = output_format_from_name(c.format);
    double thr = threshold(c);
    Resolved r = resolve(c);
    print_variants(r, fmt, out);
    CorrectionDictionary dict = CorrectionDictionary::for_pattern(r.pattern);
    DeriveOptions dopt;
    dopt.seed = c.seed;
    dopt.fidelity_threshold = thr;
    DerivationResult result = try_derive_corrections(r.pattern, dict, dopt);
    out << render_derivation(r.pattern, result, fmt);
    return result.complete() ? kExitPass : kExitFailure;
}

int cmd_loss(const Config &c, std::ostream &out) {
    OutputFormat fmt = output_format_from_name(c.format);
    Resolved r = resolve(c);
    LossReport rep = detect_information_loss(r.pattern, c.seed);
    out << render_loss(r.pattern, rep, fmt);
    return kExitPass;
}

int cmd_table(const Config &c, std::ostream &out, std::ostream &err) {
    OutputFormat fmt = output_format_from_name(c.format);
    double thr = threshold(c);
    if (!has_printed_table(c.table)) {
        throw UsageError("unknown table id " + std::to_string(c.table) + " (2, 3, 4, 5 or 6)");
    }
    GatePattern p;
    switch (c.table) {
        case 2:
            p = phase_gate_pattern();
            break;
        case 3:
            p = pi8_gate_pattern();
            break;
        case 4:
            p = controlled_phase_pattern();
            break;
        case 5:
            p = cnot_pattern();
            break;
        default:
            p = swap_pattern();
            break;
    }
    CorrectionDictionary dict = CorrectionDictionary::for_pattern(p);
    DeriveOptions dopt;
    dopt.seed = c.seed;
    dopt.fidelity_threshold = thr;
    DerivationResult result = try_derive_corrections(p, dict, dopt);
    if (!result.complete()) {
        err << "derivation incomplete for table " << c.table << "\n";
        out << render_derivation(p, result, fmt);
        return kExitFailure;
    }
    TableDiff diff = compare_tables(result.table, printed_table(c.table), p.output_wires.size(), &p.target.matrix());
    out << render_table_reproduction(c.table, p, result.table, diff, fmt);
    return kExitPass;
}

void add_pattern_options(CLI::App *sub, Config &c) {
    sub->add_option("--pattern", c.pattern, "catalog pattern name");
    sub->add_option("--pattern-file", c.pattern_file, "pattern document (JSON)");
    sub->add_option("--n", c.n, "chain length for chain-cz");
    sub->add_option("--variant", c.variant, "construction variant (swap, toffoli, fredkin)");
    sub->add_option("--resource", c.resource, "link pair for cz: h or bell");
    sub->add_option("--basis", c.basis, "alpha basis: ghz|plus-minus (cz), bell|h (cz-no-ee)");
    sub->add_option("--u", c.u_file, "2x2 unitary document for single-qubit");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Config c;
    CLI::App app{"Teleportation-based gate patterns: verification and correction derivation"};
    app.name("mbgate");
    app.require_subcommand(1);
    app.add_option("--seed", c.seed, "random seed")->capture_default_str();
    app.add_option("--format", c.format, "text, json or csv")->capture_default_str();
    app.add_option("--tolerance", c.tolerance, "allowed fidelity gap")->capture_default_str();

    auto *list = app.add_subcommand("list", "list catalog patterns");
    auto *verify = app.add_subcommand("verify", "verify printed and derived corrections");
    auto *derive = app.add_subcommand("derive", "derive a correction table");
    auto *loss = app.add_subcommand("loss-check", "detect information loss");
    auto *table = app.add_subcommand("reproduce-table", "rebuild a printed correction table");
    for (auto *sub : {list, verify, derive, loss, table}) {
        sub->fallthrough();
    }
    for (auto *sub : {verify, derive, loss}) {
        add_pattern_options(sub, c);
    }
    verify->add_option("--inputs", c.random_inputs, "number of random inputs")->capture_default_str();
    table->add_option("--table", c.table, "table id (2-6)")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }
    try {
        if (list->parsed()) {
            return cmd_list(c, out);
        }
        if (verify->parsed()) {
            return cmd_verify(c, out, err);
        }
        if (derive->parsed()) {
            return cmd_derive(c, out);
        }
        if (loss->parsed()) {
            return cmd_loss(c, out);
        }
        return cmd_table(c, out, err);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PatternError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const StructuralError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace mbgate
