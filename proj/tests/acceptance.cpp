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

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "mbgate/catalog.hpp"
#include "mbgate/cli.hpp"
#include "mbgate/gates.hpp"
#include "mbgate/oracle.hpp"
#include "mbgate/printed_tables.hpp"
#include "mbgate/report_io.hpp"
#include "reference_sim.hpp"

using namespace mbgate;

namespace {

const double kThreshold = 1.0 - Tolerances::kFidelityGap;

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;
    void check(bool ok, const std::string &what) {
        pass = pass && ok;
        details.push_back(std::string(ok ? "ok    " : "FAILED") + "  " + what);
    }
    void note(const std::string &what) { details.push_back("note    " + what); }
};

std::string num(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CorrectionTable derive(const GatePattern &p) { return derive_corrections(p, CorrectionDictionary::for_pattern(p)); }

VerificationReport verify_with(const GatePattern &p, const CorrectionTable &t, std::size_t random_inputs = 20) {
    VerifyOptions o;
    o.corrections = &t;
    o.random_inputs = random_inputs;
    o.corrections_source = "derived";
    return verify_pattern(p, o);
}

double frobenius_normalized_distance(const Matrix &a, const Matrix &b) {
    return gates::phase_distance(a / a.norm(), b / b.norm());
}

// 1. Single-qubit teleportation.
Outcome single_qubit() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(kDefaultSeed);
    double worst = 1.0;
    bool all = true;
    std::size_t cells = 0;
    for (int k = 0; k < 50; ++k) {
        Unitary u = random_unitary(1, rng);
        GatePattern p = single_qubit_pattern(u);
        std::vector<VerificationInput> inputs;
        for (int j = 0; j < 20; ++j) {
            inputs.push_back({"random#" + std::to_string(j), random_state(1, rng), true});
        }
        VerificationReport r = verify_pattern(p, inputs);
        worst = std::min(worst, r.min_fidelity);
        all = all && r.pass;
        cells += r.outcome_count * inputs.size();
    }
    double dt = seconds_since(t0);
    o.check(all && worst >= kThreshold, std::to_string(cells) + " cells (50 unitaries x 20 inputs x 4 outcomes), min fidelity " + num(worst));
    o.check(dt < 1.0, "runtime " + num(dt, 3) + " s < 1 s");

    // Independent check of the residuals with the reference simulator.
    std::mt19937_64 rng2(7);
    Unitary u = random_unitary(1, rng2);
    GatePattern p = single_qubit_pattern(u);
    StateVector in = random_state(1, rng2);
    auto full = refsim::full_register(p, in.amplitudes());
    StateVector expected = apply_unitary(in, u, QubitSubset{0});
    double ref_worst = 1.0;
    for (const auto &key : all_outcome_keys(p.group_sizes())) {
        auto res = refsim::residual(p, full, key);
        Matrix c = p.corrections->find(key)->matrix(1);
        std::vector<std::vector<refsim::cd>> cm = {{c(0, 0), c(0, 1)}, {c(1, 0), c(1, 1)}};
        ref_worst = std::min(ref_worst, refsim::overlap(expected.amplitudes(), refsim::apply(cm, res)));
    }
    o.check(ref_worst >= kThreshold, "reference simulator agrees, min fidelity " + num(ref_worst));
    return o;
}

// 2. Phase and pi/8 tables.
Outcome phase_tables() {
    Outcome o;
    for (int id : {2, 3}) {
        GatePattern p = id == 2 ? phase_gate_pattern() : pi8_gate_pattern();
        CorrectionTable t = derive(p);
        TableDiff d = compare_tables(t, printed_table(id), 1);
        o.check(d.mismatches == 0 && d.total == 4,
                "table " + std::to_string(id) + ": " + std::to_string(d.total - d.mismatches) + "/4 cells equal");
        auto maps = outcome_maps(p);
        auto printed = printed_pre_correction_maps(id);
        double worst = 0.0;
        for (std::size_t k = 0; k < maps.size(); ++k) {
            worst = std::max(worst, frobenius_normalized_distance(maps[k], printed[k]));
        }
        o.check(worst < 1e-10, "table " + std::to_string(id) +
                                   ": states before correction match the listed states, max distance " +
                                   sci(worst));
        o.check(verify_with(p, t).pass, "table " + std::to_string(id) + ": derived corrections verify");
    }
    return o;
}

// 3. Controlled-Z rows and the mismatched pair.
Outcome controlled_z() {
    Outcome o;
    for (auto row : {CzRow::HRow, CzRow::BellRow}) {
        GatePattern p = controlled_z_pattern(row);
        VerificationReport r = verify_with(p, derive(p));
        o.check(r.pass && r.outcome_count == 64,
                p.name + ": " + std::to_string(r.outcome_count) + " outcomes, min fidelity " +
                    num(r.min_fidelity));
    }
    GatePattern bad = controlled_z_configuration(LinkResource::PhiPlus, AlphaBasis::Ghz);
    std::mt19937_64 rng(kDefaultSeed);
    StateVector c = random_state(2, rng);
    auto records = enumerate_outcomes(bad, c);
    const OutcomeRecord &first = records[0];
    StateVector predicted(2, {c[0], 0.0, 0.0, c[3]});
    double f = fidelity_up_to_phase(predicted.normalized(), *first.pre_correction_state);
    o.check(bad.describe_key(first.key) == "alpha=(0,0,+) beta=(0,0,+)" && f >= 1.0 - 1e-10,
            "mismatched pair, outcome " + bad.describe_key(first.key) + ": c0|00>+c3|11>, fidelity " + num(f, 13));
    LossReport loss = detect_information_loss(bad);
    bool exactly_two = loss.lossy_outcomes.size() == 64;
    for (const auto &lo : loss.lossy_outcomes) {
        exactly_two = exactly_two && lo.annihilated.size() == 2;
    }
    bool first_is_c1_c2 =
        !loss.lossy_outcomes.empty() && loss.lossy_outcomes[0].annihilated == std::vector<std::size_t>{1, 2};
    o.check(loss.lossy && exactly_two && first_is_c1_c2 && loss.zero_probability.empty(),
            "every outcome annihilates two of four components; the first annihilates c1,c2");
    return o;
}

// 4. Parity law.
Outcome parity() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto rows = parity_experiment(5);
    double dt = seconds_since(t0);
    for (const auto &r : rows) {
        bool odd = r.n % 2 == 1;
        bool ok = odd ? r.pass_vs_cz : (!r.pass_vs_cz && r.pass_vs_predicted);
        o.check(ok, "n=" + std::to_string(r.n) + (r.pass_vs_cz ? " passes" : " fails") +
                        " against controlled-Z (min fidelity " + num(r.min_fidelity_vs_cz) + ")" +
                        (odd ? "" : std::string(", passes against the +1 target: ") +
                                        (r.pass_vs_predicted ? "yes" : "no")));
    }
    o.check(dt < 10.0, "runtime " + num(dt, 2) + " s < 10 s");
    return o;
}

// 5. Triple controlled-Z.
Outcome triple_cz() {
    Outcome o;
    GatePattern p = triple_cz_pattern();
    const Matrix &t = p.target.matrix();
    bool signs = true;
    for (Eigen::Index k = 0; k < 8; ++k) {
        double expect = (k == 3 || k == 6) ? -1.0 : 1.0;
        signs = signs && std::abs(t(k, k) - expect) < 1e-15;
    }
    o.check(signs, "target signs: -1 at |011>, |110>; +1 elsewhere including |111>");
    VerificationReport r = verify_with(p, derive(p), 10);
    o.check(r.pass && r.outcome_count == 512,
            std::to_string(r.outcome_count) + " outcomes x " + std::to_string(r.input_descriptions.size()) +
                " inputs, min fidelity " + num(r.min_fidelity));
    return o;
}

// 6. Controlled phase.
Outcome controlled_phase() {
    Outcome o;
    GatePattern p = controlled_phase_pattern();
    CorrectionTable t = derive(p);
    VerificationReport r = verify_with(p, t);
    o.check(r.pass && r.outcome_count == 64, "64 outcomes, min fidelity " + num(r.min_fidelity));
    auto key = p.key_of({OutcomeLabel::parse("(0,0,+)"), OutcomeLabel::parse("(0,1,+)")});
    Matrix worked = gates::cz() * gates::kron(gates::pauli_z() * gates::phase(), gates::identity(1));
    o.check(gates::equal_up_to_phase(t.find(key)->matrix(2), worked),
            "worked cell " + p.describe_key(key) + " = " + t.find(key)->render(2));

    Matrix unit = parameterized_link_operator(1.0, 1.0, 1.0, 1.0, 1.0).matrix();
    o.check(gates::equal_up_to_phase(unit, gates::cz(), 1e-10), "all link phases 1: effective operator is U_cz");

    std::vector<Complex> grid;
    for (int k = 0; k < 5; ++k) {
        grid.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / 5.0));
    }
    Matrix cp = gates::controlled_phase();
    double best = 1e9;
    double formula_gap = 0.0;
    for (auto k : grid) {
        for (auto kt : grid) {
            for (auto pp : grid) {
                for (auto m : grid) {
                    for (auto n : grid) {
                        Matrix e = parameterized_link_operator(k, kt, pp, m, n).matrix();
                        formula_gap = std::max(
                            formula_gap, (e - parameterized_link_formula(k, kt, pp, m, n)).cwiseAbs().maxCoeff());
                        best = std::min(best, gates::phase_distance(e, cp));
                    }
                }
            }
        }
    }
    o.check(best > 0.1, "3125-point phase grid: closest operator is " + num(best, 4) +
                            " from diag(1,1,1,i) (need > 0.1); closed form agrees within " + sci(formula_gap));
    return o;
}

// 7. CNOT and swap.
Outcome cnot_and_swap() {
    Outcome o;
    for (int id : {5, 6}) {
        GatePattern p = id == 5 ? cnot_pattern() : swap_pattern();
        CorrectionTable t = derive(p);
        VerificationReport r = verify_with(p, t);
        TableDiff d = compare_tables(t, printed_table(id), 2);
        o.check(r.pass && t.entries.size() == 128,
                p.name + ": derived 128-entry table verifies over " + std::to_string(r.input_descriptions.size()) +
                    " inputs, min fidelity " + num(r.min_fidelity));
        VerificationReport printed = verify_pattern(p);
        o.note(p.name + ": printed table " + std::to_string(id) + " differs in " + std::to_string(d.mismatches) +
               " of " + std::to_string(d.total) + " cells; printed corrections " +
               (printed.pass ? "pass" : "fail") + " (min fidelity " + num(printed.min_fidelity, 6) + ")");
        if (d.mismatches) {
            const auto &cell = d.cells.front();
            o.note("first differing cell " + p.describe_key(cell) + ": derived " + t.find(cell)->render(2) +
                   ", printed " + printed_table(id).find(cell)->render(2));
        }
        o.check(d.mismatches == 0 || r.pass, p.name + ": every printed-table difference is backed by a passing derived table");
    }
    return o;
}

// 8. Toffoli and Fredkin.
Outcome toffoli_and_fredkin() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    VariantReport tv = resolve_toffoli_variant(kDefaultSeed, 10);
    for (const auto &t : tv.trials) {
        o.note("toffoli variant " + t.variant + ": " +
               (t.basis_valid ? (t.verified ? "verified" : "not verified") : "basis rejected (" + t.basis_message + ")"));
    }
    o.check(tv.selected.has_value(), "toffoli variant selected: " + tv.selected.value_or("none"));
    if (tv.selected) {
        GatePattern p = toffoli_pattern(*tv.selected == "literal" ? ToffoliVariant::Literal : ToffoliVariant::Corrected);
        CorrectionTable t = derive(p);
        VerificationReport r = verify_with(p, t, 10);
        o.check(r.pass && r.outcome_count == 2048,
                "toffoli: " + std::to_string(r.outcome_count) + " outcomes x " +
                    std::to_string(r.input_descriptions.size()) + " inputs, min fidelity " + num(r.min_fidelity));
        auto key = p.key_of({OutcomeLabel::parse("(0,1,1,-)"), OutcomeLabel::parse("(0,1,0,-)"),
                             OutcomeLabel::parse("(1,1,-)")});
        Matrix xzx = gates::kron(gates::kron(gates::pauli_x(), gates::pauli_z()), gates::pauli_x());
        o.check(gates::equal_up_to_phase(t.find(key)->matrix(3, &p.target.matrix()), xzx),
                "worked outcome " + p.describe_key(key) + " -> " + t.find(key)->render(3));
    }

    VariantReport fv = resolve_fredkin_variant(kDefaultSeed, 10);
    for (const auto &t : fv.trials) {
        o.note("fredkin variant " + t.variant + ": " + std::to_string(t.derivation_failures) + " of " +
               std::to_string(t.outcome_count) + " outcomes without a unitary correction, best fidelity on those " +
               num(t.min_fidelity, 6));
    }
    o.check(fv.selected.has_value(),
            "fredkin: 8192 outcomes on a 16-qubit register verify with derived corrections");
    if (!fv.selected) {
        o.note("analysis: the failing outcomes are exactly those whose third alpha digit is 1 (4096 of 8192),");
        o.note("under both readings of the alpha operators. Each such outcome map has rank 4 of 8, so half of");
        o.note("the three-qubit input space is annihilated and no unitary correction can exist for it. The");
        o.note("remaining 4096 outcomes are correctable. The listed resource and basis choices do not realize");
        o.note("a controlled swap; the check is kept at full strength and fails.");
    }
    double dt = seconds_since(t0);
    o.check(dt < 60.0, "runtime " + num(dt, 1) + " s < 60 s");
    return o;
}

std::vector<GatePattern> catalog_patterns() {
    return {single_qubit_pattern(Unitary(gates::hadamard())),
            phase_gate_pattern(),
            pi8_gate_pattern(),
            controlled_z_pattern(CzRow::HRow),
            controlled_z_pattern(CzRow::BellRow),
            controlled_z_configuration(LinkResource::PhiPlus, AlphaBasis::Ghz),
            cz_without_link_pattern(PairBasis::Bell),
            cz_without_link_pattern(PairBasis::HPair),
            chain_cz_pattern(1),
            chain_cz_pattern(2),
            chain_cz_pattern(3),
            chain_cz_pattern(4),
            chain_cz_pattern(5),
            triple_cz_pattern(),
            controlled_phase_pattern(),
            cnot_pattern(),
            swap_pattern(SwapResource::Plain),
            swap_pattern(SwapResource::HadamardOnMiddle),
            toffoli_pattern(ToffoliVariant::Corrected),
            fredkin_pattern(FredkinVariant::Literal),
            fredkin_pattern(FredkinVariant::FlipOnI)};
}

// 9. Engine properties.
Outcome engine() {
    Outcome o;
    auto patterns = catalog_patterns();

    double prob_err = 0.0;
    std::size_t runs = 0;
    for (const auto &p : patterns) {
        for (const auto &in : default_inputs(p.input_wires.size(), 3, kDefaultSeed)) {
            double s = 0.0;
            for (const auto &r : enumerate_outcomes(p, in.state)) {
                s += r.probability;
            }
            prob_err = std::max(prob_err, std::abs(s - 1.0));
            ++runs;
        }
    }
    o.check(prob_err <= 1e-9, "probability conservation over " + std::to_string(runs) +
                                  " enumerations, max |sum - 1| = " + sci(prob_err));

    double overlap = 0.0, norm_dev = 0.0;
    bool complete = true;
    std::size_t bases = 0;
    for (const auto &p : patterns) {
        for (const auto &g : p.groups) {
            BasisValidation v = validate_basis(g.basis);
            overlap = std::max(overlap, v.max_overlap);
            norm_dev = std::max(norm_dev, v.max_norm_deviation);
            complete = complete && v.count == v.expected_count;
            ++bases;
        }
    }
    o.check(complete && overlap <= 1e-10 && norm_dev <= 1e-10,
            std::to_string(bases) + " catalog bases complete; max overlap " + sci(overlap) + ", max norm deviation " +
                sci(norm_dev));

    double lin = 0.0;
    for (auto p : {phase_gate_pattern(), controlled_z_pattern(CzRow::HRow), triple_cz_pattern(),
                   controlled_phase_pattern(), cnot_pattern(), swap_pattern(), toffoli_pattern()}) {
        p.corrections = derive(p);
        lin = std::max(lin, linearity_deviation(p, 3));
    }
    o.check(lin <= 1e-9, "linearity probes, max deviation " + sci(lin));

    double ref = 0.0;
    std::size_t compared = 0;
    for (const auto &p : {phase_gate_pattern(), controlled_z_pattern(CzRow::BellRow), chain_cz_pattern(2),
                          cnot_pattern(), swap_pattern(), triple_cz_pattern()}) {
        std::mt19937_64 rng(3);
        StateVector in = random_state(p.input_wires.size(), rng);
        auto full = refsim::full_register(p, in.amplitudes());
        for (const auto &r : enumerate_outcomes(p, in)) {
            auto res = refsim::residual(p, full, r.key);
            if (res.size() != r.residual.dim()) {
                ref = 1.0;
                continue;
            }
            ++compared;
            for (std::size_t k = 0; k < res.size(); ++k) {
                ref = std::max(ref, std::abs(res[k] - r.residual[k]));
            }
        }
    }
    o.check(compared > 0 && ref <= 1e-12, "enumeration agrees with the dense reference simulator on " +
                                            std::to_string(compared) + " outcomes, max deviation " + sci(ref));

    bool stable = true;
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"verify", "--pattern", "cnot", "--format", "json"},
             {"reproduce-table", "--table", "4"},
             {"loss-check", "--pattern", "cz", "--resource", "bell", "--basis", "ghz", "--format", "csv"}}) {
        std::ostringstream a, b, ea, eb;
        run_cli(args, a, ea);
        run_cli(args, b, eb);
        stable = stable && a.str() == b.str() && !a.str().empty();
    }
    GatePattern p = chain_cz_pattern(3);
    CorrectionTable t = derive(p);
    std::string first = render_verification(p, {verify_with(p, t)}, OutputFormat::Json);
    std::string second = render_verification(p, {verify_with(p, t)}, OutputFormat::Json);
    auto back = verification_reports_from_json(first);
    VerificationReport direct = verify_with(p, t);
    stable = stable && first == second && back.size() == 1 && back[0].pass == direct.pass &&
             back[0].min_fidelity == direct.min_fidelity;
    o.check(stable, "reports byte-stable under a fixed seed; JSON round-trips pass flag and min fidelity exactly");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *title;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "single-qubit teleportation gate", single_qubit},
        {2, "phase and pi/8 correction tables", phase_tables},
        {3, "controlled-Z rows and resource/basis mismatch", controlled_z},
        {4, "chain parity law", parity},
        {5, "three-qubit controlled-Z", triple_cz},
        {6, "controlled phase", controlled_phase},
        {7, "CNOT and swap", cnot_and_swap},
        {8, "Toffoli and Fredkin", toffoli_and_fredkin},
        {9, "engine properties", engine},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        std::printf("criterion %d: %s  %s (%.2f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, seconds_since(t0));
        for (const auto &d : o.details) {
            std::printf("    %s\n", d.c_str());
        }
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
