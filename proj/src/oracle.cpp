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

#include "mbgate/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mbgate/catalog.hpp"
#include "mbgate/errors.hpp"
#include "mbgate/gates.hpp"

namespace mbgate {

namespace {

// Offsets of the computational basis of `qubits` inside an n-qubit index,
// qubits[0] most significant.
std::vector<std::size_t> offsets(std::size_t n, const std::vector<std::size_t> &qubits) {
    std::size_t k = qubits.size();
    std::vector<std::size_t> out(std::size_t{1} << k, 0);
    for (std::size_t s = 0; s < out.size(); ++s) {
        for (std::size_t j = 0; j < k; ++j) {
            if (s & (std::size_t{1} << (k - 1 - j))) {
                out[s] |= std::size_t{1} << (n - 1 - qubits[j]);
            }
        }
    }
    return out;
}

// Precomputed projection plan for one measurement level.
struct Level {
    std::vector<std::size_t> rest_offsets;
    std::size_t rest_qubits = 0;
    // Per basis vector: (offset, conj(amplitude)) over its support.
    std::vector<std::vector<std::pair<std::size_t, Complex>>> supports;
};

struct Plan {
    std::vector<Level> levels;
    std::vector<std::size_t> output_order;
    std::size_t outcome_count = 1;
    std::vector<std::size_t> group_sizes;
};

Plan make_plan(const GatePattern &p) {
    Plan plan;
    std::vector<std::size_t> positions(p.num_qubits);
    for (std::size_t q = 0; q < p.num_qubits; ++q) {
        positions[q] = q;
    }
    for (const auto &g : p.groups) {
        std::size_t n = positions.size();
        std::vector<std::size_t> measured;
        for (auto q : g.qubits.indices()) {
            auto it = std::find(positions.begin(), positions.end(), q);
            if (it == positions.end()) {
                throw PatternError("pattern '" + p.name + "': group '" + g.name + "' measures qubit " +
                                   std::to_string(q) + " twice");
            }
            measured.push_back(static_cast<std::size_t>(it - positions.begin()));
        }
        std::vector<std::size_t> rest;
        std::vector<std::size_t> next_positions;
        for (std::size_t k = 0; k < n; ++k) {
            if (std::find(measured.begin(), measured.end(), k) == measured.end()) {
                rest.push_back(k);
                next_positions.push_back(positions[k]);
            }
        }
        Level level;
        level.rest_offsets = offsets(n, rest);
        level.rest_qubits = rest.size();
        auto m_off = offsets(n, measured);
        for (const auto &v : g.basis.vectors) {
            std::vector<std::pair<std::size_t, Complex>> support;
            for (std::size_t s = 0; s < v.dim(); ++s) {
                if (v[s] != Complex(0.0, 0.0)) {
                    support.emplace_back(m_off[s], std::conj(v[s]));
                }
            }
            level.supports.push_back(std::move(support));
        }
        plan.levels.push_back(std::move(level));
        plan.group_sizes.push_back(g.basis.vectors.size());
        plan.outcome_count *= g.basis.vectors.size();
        positions = std::move(next_positions);
    }
    for (auto q : p.output_wires.indices()) {
        auto it = std::find(positions.begin(), positions.end(), q);
        if (it == positions.end()) {
            throw PatternError("pattern '" + p.name + "': output wire " + std::to_string(q) + " is measured");
        }
        plan.output_order.push_back(static_cast<std::size_t>(it - positions.begin()));
    }
    if (positions.size() != p.output_wires.size()) {
        throw PatternError("pattern '" + p.name + "': unmeasured qubits that are not outputs");
    }
    return plan;
}

StateVector prepare_register(const GatePattern &p, const StateVector &input) {
    if (input.num_qubits() != p.input_wires.size()) {
        throw UsageError("input has " + std::to_string(input.num_qubits()) + " qubits; pattern '" + p.name +
                         "' takes " + std::to_string(p.input_wires.size()));
    }
    std::vector<std::pair<QubitSubset, StateVector>> pieces;
    pieces.emplace_back(p.input_wires, input);
    for (const auto &r : p.resources) {
        pieces.emplace_back(r.qubits, r.state);
    }
    return compose(p.num_qubits, pieces);
}

// Residuals on the output wires for every outcome, in key order.
std::vector<StateVector> residuals(const GatePattern &p, const Plan &plan, const StateVector &input) {
    std::vector<StateVector> out;
    out.reserve(plan.outcome_count);
    StateVector full = prepare_register(p, input);
    // Depth-first over groups.
    std::vector<StateVector> stack(plan.levels.size() + 1);
    stack[0] = full;
    std::vector<std::size_t> choice(plan.levels.size(), 0);
    std::size_t depth = 0;
    auto project_level = [&](std::size_t d, std::size_t which) {
        const Level &level = plan.levels[d];
        const StateVector &src = stack[d];
        StateVector dst(level.rest_qubits);
        const auto &support = level.supports[which];
        for (std::size_t r = 0; r < level.rest_offsets.size(); ++r) {
            Complex acc = 0.0;
            std::size_t base = level.rest_offsets[r];
            for (const auto &[off, c] : support) {
                acc += c * src[base | off];
            }
            dst[r] = acc;
        }
        stack[d + 1] = std::move(dst);
    };
    if (plan.levels.empty()) {
        out.push_back(permute_qubits(full, plan.output_order));
        return out;
    }
    project_level(0, 0);
    while (true) {
        if (depth + 1 == plan.levels.size()) {
            out.push_back(permute_qubits(stack[depth + 1], plan.output_order));
            // Advance the deepest counter with carry.
            while (true) {
                if (++choice[depth] < plan.group_sizes[depth]) {
                    project_level(depth, choice[depth]);
                    break;
                }
                choice[depth] = 0;
                if (depth == 0) {
                    return out;
                }
                --depth;
            }
        } else {
            ++depth;
            choice[depth] = 0;
            project_level(depth, 0);
        }
    }
}

std::vector<Matrix> correction_matrices(const GatePattern &p, const CorrectionTable &table, const Matrix &target) {
    if (table.group_sizes != p.group_sizes()) {
        throw StructuralError("correction table shape does not match pattern '" + p.name + "'");
    }
    std::vector<Matrix> mats;
    std::size_t m = p.output_wires.size();
    for (const auto &key : all_outcome_keys(table.group_sizes)) {
        const CorrectionOp *op = table.find(key);
        if (!op) {
            throw StructuralError("missing correction entry for outcome " + p.describe_key(key));
        }
        mats.push_back(op->matrix(m, &target));
    }
    return mats;
}

StateVector apply_full(const Matrix &m, const StateVector &s) {
    return StateVector::from_eigen(m * s.to_eigen());
}

double rank_tolerance(const Eigen::VectorXd &sv, double tol) {
    return sv.size() == 0 ? 0.0 : tol * std::max(1.0, sv(0));
}

std::size_t matrix_rank(const Matrix &m, double tol = 1e-9) {
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto &sv = svd.singularValues();
    double cut = rank_tolerance(sv, tol);
    std::size_t r = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) > cut) {
            ++r;
        }
    }
    return r;
}

struct Probe {
    Eigen::VectorXcd pre;
    Eigen::VectorXcd expected;
};

double probe_fidelity(const Matrix &c, const std::vector<Probe> &probes, double stop_below = -1.0) {
    double worst = 1.0;
    for (const auto &pr : probes) {
        double f = std::abs(pr.expected.dot(c * pr.pre));
        worst = std::min(worst, f);
        if (worst < stop_below) {
            break;
        }
    }
    return worst;
}

}  // namespace

std::vector<OutcomeRecord> enumerate_outcomes(const GatePattern &pattern, const StateVector &input,
                                              const CorrectionTable *corrections) {
    if (!input.is_normalized()) {
        throw UsageError("enumeration input must be normalized");
    }
    Plan plan = make_plan(pattern);
    std::vector<Matrix> mats;
    if (corrections) {
        mats = correction_matrices(pattern, *corrections, pattern.target.matrix());
    }
    auto res = residuals(pattern, plan, input);
    auto keys = all_outcome_keys(plan.group_sizes);
    std::vector<OutcomeRecord> out;
    out.reserve(res.size());
    for (std::size_t k = 0; k < res.size(); ++k) {
        OutcomeRecord r;
        r.key = keys[k];
        r.labels = pattern.labels_of(r.key);
        r.probability = res[k].norm_squared();
        r.residual = std::move(res[k]);
        if (r.probability > Tolerances::kZeroProbability) {
            r.pre_correction_state = r.residual.normalized();
            if (corrections) {
                r.corrected_state = apply_full(mats[k], *r.pre_correction_state);
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Matrix> outcome_maps(const GatePattern &pattern) {
    Plan plan = make_plan(pattern);
    std::size_t m = pattern.input_wires.size();
    auto d = static_cast<Eigen::Index>(std::size_t{1} << m);
    std::vector<Matrix> maps(plan.outcome_count, Matrix::Zero(d, d));
    for (Eigen::Index j = 0; j < d; ++j) {
        StateVector e(m);
        e[static_cast<std::size_t>(j)] = 1.0;
        auto res = residuals(pattern, plan, e);
        for (std::size_t k = 0; k < res.size(); ++k) {
            for (Eigen::Index i = 0; i < d; ++i) {
                maps[k](i, j) = res[k][static_cast<std::size_t>(i)];
            }
        }
    }
    return maps;
}

std::vector<VerificationInput> default_inputs(std::size_t num_qubits, std::size_t random_count, std::uint64_t seed) {
    std::vector<VerificationInput> out;
    for (std::size_t j = 0; j < (std::size_t{1} << num_qubits); ++j) {
        std::string bits(num_qubits, '0');
        for (std::size_t q = 0; q < num_qubits; ++q) {
            if (j & (std::size_t{1} << (num_qubits - 1 - q))) {
                bits[q] = '1';
            }
        }
        out.push_back({"|" + bits + ">", make_basis_state(num_qubits, bits), false});
    }
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < random_count; ++k) {
        out.push_back({"random#" + std::to_string(k), random_state(num_qubits, rng), true});
    }
    return out;
}

VerificationReport verify_pattern(const GatePattern &pattern, const std::vector<VerificationInput> &inputs,
                                  const VerifyOptions &options) {
    const CorrectionTable *table = options.corrections ? options.corrections
                                                       : (pattern.corrections ? &*pattern.corrections : nullptr);
    if (!table) {
        throw StructuralError("pattern '" + pattern.name + "' has no correction table");
    }
    const Unitary &target = options.target_override ? *options.target_override : pattern.target;
    if (target.num_qubits() != pattern.output_wires.size()) {
        throw UsageError("target size does not match the output wires");
    }
    Plan plan = make_plan(pattern);
    // Target-referencing corrections always use the pattern's own gate.
    std::vector<Matrix> mats = correction_matrices(pattern, *table, pattern.target.matrix());
    auto keys = all_outcome_keys(plan.group_sizes);
    std::vector<std::size_t> all_wires(target.num_qubits());
    for (std::size_t k = 0; k < all_wires.size(); ++k) {
        all_wires[k] = k;
    }

    VerificationReport rep;
    rep.pattern_name = pattern.name;
    rep.target_name = options.target_override ? "override" : pattern.target_name;
    rep.corrections_source = options.corrections_source;
    rep.outcome_count = plan.outcome_count;
    bool generic_zero = false;
    for (std::size_t in = 0; in < inputs.size(); ++in) {
        const auto &vi = inputs[in];
        if (!vi.state.is_normalized()) {
            throw UsageError("verification input '" + vi.description + "' is not normalized");
        }
        rep.input_descriptions.push_back(vi.description);
        StateVector expected = apply_unitary(vi.state, target, QubitSubset(all_wires));
        auto res = residuals(pattern, plan, vi.state);
        std::vector<double> row(res.size(), -1.0);
        double total = 0.0;
        double row_min = 1.0;
        for (std::size_t k = 0; k < res.size(); ++k) {
            double prob = res[k].norm_squared();
            total += prob;
            if (prob <= Tolerances::kZeroProbability) {
                rep.zero_probability.push_back({in, keys[k], 0.0});
                generic_zero = generic_zero || vi.generic;
                continue;
            }
            if (vi.generic && prob < Tolerances::kSuspiciousProbability) {
                rep.suspicious.push_back({in, keys[k], prob});
            }
            StateVector corrected = apply_full(mats[k], res[k].normalized());
            double f = fidelity_up_to_phase(expected, corrected);
            row[k] = f;
            row_min = std::min(row_min, f);
            if (f < options.fidelity_threshold) {
                ++rep.failing_cells;
                rep.worst.push_back({in, keys[k], f});
            }
        }
        rep.max_probability_error = std::max(rep.max_probability_error, std::abs(total - 1.0));
        rep.min_fidelity_per_input.push_back(row_min);
        rep.min_fidelity = std::min(rep.min_fidelity, row_min);
        rep.fidelities.push_back(std::move(row));
    }
    std::stable_sort(rep.worst.begin(), rep.worst.end(),
                     [](const FidelityCell &a, const FidelityCell &b) { return a.fidelity < b.fidelity; });
    if (rep.worst.size() > 16) {
        rep.worst.resize(16);
    }
    rep.pass = rep.min_fidelity >= options.fidelity_threshold && !generic_zero;
    return rep;
}

VerificationReport verify_pattern(const GatePattern &pattern, const VerifyOptions &options) {
    return verify_pattern(pattern, default_inputs(pattern.input_wires.size(), options.random_inputs, options.seed),
                          options);
}

DerivationResult try_derive_corrections(const GatePattern &pattern, const CorrectionDictionary &dict,
                                        const DeriveOptions &options) {
    std::size_t m = pattern.output_wires.size();
    if (dict.num_wires() != m) {
        throw UsageError("dictionary is for " + std::to_string(dict.num_wires()) + " wires; pattern '" +
                         pattern.name + "' has " + std::to_string(m));
    }
    const Matrix &target = options.target_override ? options.target_override->matrix() : pattern.target.matrix();
    Plan plan = make_plan(pattern);
    auto keys = all_outcome_keys(plan.group_sizes);
    auto maps = outcome_maps(pattern);
    auto din = static_cast<Eigen::Index>(std::size_t{1} << m);

    // Random probes, seeded independently from the verification inputs.
    std::mt19937_64 rng(options.seed ^ 0x9E3779B97F4A7C15ULL);
    std::vector<StateVector> random_in;
    std::vector<std::vector<StateVector>> random_res;
    for (std::size_t k = 0; k < options.random_probes; ++k) {
        random_in.push_back(random_state(m, rng));
        random_res.push_back(residuals(pattern, plan, random_in.back()));
    }

    // Fallback candidates for outcomes whose map is not unitary.
    std::vector<std::size_t> local_candidates;
    for (std::size_t k = 0; k < dict.size(); ++k) {
        if (dict[k].op.is_pauli()) {
            local_candidates.push_back(k);
        }
    }

    DerivationResult result;
    result.table.group_sizes = plan.group_sizes;
    result.dictionary_size = dict.size();
    for (std::size_t idx = 0; idx < keys.size(); ++idx) {
        const Matrix &M = maps[idx];
        std::vector<Probe> probes;
        for (Eigen::Index j = 0; j < din; ++j) {
            Eigen::VectorXcd col = M.col(j);
            double n = col.norm();
            if (n * n <= Tolerances::kZeroProbability) {
                continue;
            }
            probes.push_back({col / n, target.col(j)});
        }
        for (std::size_t k = 0; k < random_in.size(); ++k) {
            const StateVector &r = random_res[k][idx];
            double n = r.norm();
            if (n * n <= Tolerances::kZeroProbability) {
                continue;
            }
            probes.push_back({r.to_eigen() / n, target * random_in[k].to_eigen()});
        }
        double s = (M.adjoint() * M).trace().real() / static_cast<double>(din);
        if (s <= Tolerances::kZeroProbability) {
            result.failures.push_back({keys[idx], 0.0, "null outcome"});
            continue;
        }
        Matrix gram = M.adjoint() * M / s;
        double dev = (gram - Matrix::Identity(din, din)).cwiseAbs().maxCoeff();
        if (dev > 1e-8 || static_cast<Eigen::Index>(probes.size()) < din) {
            // Not correctable by any unitary; report how close the best tries get.
            double best = 0.0;
            for (auto k : local_candidates) {
                best = std::max(best, probe_fidelity(dict.matrix(k), probes));
            }
            Eigen::JacobiSVD<Matrix> svd(target * M.adjoint(), Eigen::ComputeFullU | Eigen::ComputeFullV);
            Matrix polar = svd.matrixU() * svd.matrixV().adjoint();
            best = std::max(best, probe_fidelity(polar, probes));
            result.failures.push_back({keys[idx], best,
                                       "outcome map is not proportional to a unitary (max |M^dag M/s - I| = " +
                                           std::to_string(dev) + ", rank " + std::to_string(matrix_rank(M)) + ")"});
            continue;
        }
        Matrix V = M / std::sqrt(s);
        Matrix required = target * V.adjoint();
        std::optional<std::size_t> found;
        if (auto hit = dict.find_equivalent(required)) {
            if (probe_fidelity(dict.matrix(*hit), probes) >= options.fidelity_threshold) {
                found = hit;
            }
        }
        double best = 0.0;
        if (!found) {
            for (std::size_t k = 0; k < dict.size(); ++k) {
                double f = probe_fidelity(dict.matrix(k), probes, best);
                if (f >= options.fidelity_threshold) {
                    found = k;
                    break;
                }
                best = std::max(best, f);
            }
        }
        if (!found) {
            result.failures.push_back({keys[idx], best, "no dictionary element reaches the threshold"});
            continue;
        }
        result.table.entries[keys[idx]] = dict[*found].op;
    }
    return result;
}

CorrectionTable derive_corrections(const GatePattern &pattern, const CorrectionDictionary &dict,
                                   const DeriveOptions &options) {
    DerivationResult r = try_derive_corrections(pattern, dict, options);
    if (!r.complete()) {
        std::string msg = "derivation failed for " + std::to_string(r.failures.size()) + " of " +
                          std::to_string(r.table.expected_size()) + " outcomes of '" + pattern.name + "'";
        std::size_t shown = 0;
        for (const auto &f : r.failures) {
            if (shown++ == 8) {
                msg += "; ...";
                break;
            }
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6f", f.best_fidelity);
            msg += "; " + pattern.describe_key(f.key) + " best fidelity " + buf + " (" + f.reason + ")";
        }
        throw DerivationError(msg);
    }
    return r.table;
}

std::size_t operator_schmidt_rank(const Matrix &m, std::size_t num_wires, std::size_t wire, double tol) {
    std::size_t rest = num_wires - 1;
    auto rd = static_cast<Eigen::Index>(std::size_t{1} << (2 * rest));
    Matrix r = Matrix::Zero(4, rd);
    auto split = [&](std::size_t idx, std::size_t &bit, std::size_t &others) {
        bit = (idx >> (num_wires - 1 - wire)) & 1;
        others = 0;
        for (std::size_t q = 0; q < num_wires; ++q) {
            if (q == wire) {
                continue;
            }
            others = (others << 1) | ((idx >> (num_wires - 1 - q)) & 1);
        }
    };
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::size_t oi, ro, ij, rj;
            split(static_cast<std::size_t>(i), oi, ro);
            split(static_cast<std::size_t>(j), ij, rj);
            r(static_cast<Eigen::Index>(oi * 2 + ij), static_cast<Eigen::Index>((ro << rest) | rj)) = m(i, j);
        }
    }
    return matrix_rank(r, tol);
}

LossReport detect_information_loss(const GatePattern &pattern, std::uint64_t seed) {
    LossReport rep;
    rep.pattern_name = pattern.name;
    std::size_t m = pattern.input_wires.size();
    std::mt19937_64 rng(seed);
    StateVector generic = random_state(m, rng);
    Plan plan = make_plan(pattern);
    auto keys = all_outcome_keys(plan.group_sizes);
    auto res = residuals(pattern, plan, generic);
    auto maps = outcome_maps(pattern);
    rep.outcome_count = keys.size();
    rep.rank_histogram.assign((std::size_t{1} << m) + 1, 0);

    std::vector<std::size_t> entangled_cuts;
    for (std::size_t w = 0; w < m && m > 1; ++w) {
        if (operator_schmidt_rank(pattern.target.matrix(), m, w) > 1) {
            entangled_cuts.push_back(w);
        }
    }
    rep.target_entangling = !entangled_cuts.empty();
    bool all_product = true;
    std::size_t survivors = 0;
    for (std::size_t k = 0; k < keys.size(); ++k) {
        double prob = res[k].norm_squared();
        if (prob <= Tolerances::kZeroProbability) {
            rep.zero_probability.push_back(keys[k]);
            continue;
        }
        if (prob < Tolerances::kSuspiciousProbability) {
            rep.suspicious.push_back(keys[k]);
        }
        ++survivors;
        const Matrix &M = maps[k];
        LossOutcome lo;
        lo.key = keys[k];
        lo.probability = prob;
        lo.rank = matrix_rank(M);
        double largest = 0.0;
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            largest = std::max(largest, M.col(j).norm());
        }
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            if (M.col(j).norm() <= 1e-6 * largest) {
                lo.annihilated.push_back(static_cast<std::size_t>(j));
            }
        }
        rep.rank_histogram[lo.rank] += 1;
        for (auto w : entangled_cuts) {
            if (operator_schmidt_rank(M, m, w) > 1) {
                all_product = false;
            }
        }
        if (!lo.annihilated.empty()) {
            rep.lossy_outcomes.push_back(std::move(lo));
        }
    }
    rep.interaction_lost = rep.target_entangling && survivors > 0 && all_product;
    rep.lossy = !rep.lossy_outcomes.empty() || rep.interaction_lost;
    return rep;
}

TableDiff compare_tables(const CorrectionTable &derived, const CorrectionTable &printed, std::size_t num_wires,
                         const Matrix *target) {
    if (derived.group_sizes != printed.group_sizes || derived.entries.size() != printed.entries.size()) {
        throw UsageError("tables have different outcome index sets");
    }
    TableDiff diff;
    for (const auto &[key, op] : derived.entries) {
        const CorrectionOp *other = printed.find(key);
        if (!other) {
            throw UsageError("tables have different outcome index sets");
        }
        ++diff.total;
        if (!gates::equal_up_to_phase(op.matrix(num_wires, target), other->matrix(num_wires, target))) {
            ++diff.mismatches;
            diff.cells.push_back(key);
        }
    }
    return diff;
}

std::vector<ParityRow> parity_experiment(std::size_t max_n, std::uint64_t seed) {
    if (max_n < 1) {
        throw UsageError("parity experiment needs max_n >= 1");
    }
    std::vector<ParityRow> rows;
    CorrectionDictionary dict = CorrectionDictionary::pauli(2);
    for (std::size_t n = 1; n <= max_n; ++n) {
        GatePattern p = chain_cz_pattern(n);
        ParityRow row;
        row.n = n;
        DeriveOptions dopt;
        dopt.seed = seed;
        DerivationResult vs_cz = try_derive_corrections(p, dict, dopt);
        CorrectionTable table;
        if (vs_cz.complete()) {
            table = vs_cz.table;
            row.derived_against = "cz";
        } else {
            dopt.target_override = p.predicted_target;
            DerivationResult vs_pred = try_derive_corrections(p, dict, dopt);
            table = vs_pred.table;
            row.derived_against = "predicted";
            if (!vs_pred.complete()) {
                row.derived_against = "none";
                rows.push_back(row);
                continue;
            }
        }
        VerifyOptions vopt;
        vopt.seed = seed;
        vopt.corrections = &table;
        vopt.corrections_source = "derived";
        VerificationReport cz = verify_pattern(p, vopt);
        row.pass_vs_cz = cz.pass;
        row.min_fidelity_vs_cz = cz.min_fidelity;
        vopt.target_override = p.predicted_target;
        row.pass_vs_predicted = verify_pattern(p, vopt).pass;
        rows.push_back(row);
    }
    return rows;
}

namespace {

VariantTrial run_variant(const GatePattern &p, const std::string &name, std::uint64_t seed,
                         std::size_t random_inputs) {
    VariantTrial t;
    t.variant = name;
    t.outcome_count = 1;
    for (auto s : p.group_sizes()) {
        t.outcome_count *= s;
    }
    try {
        validate_pattern(p);
        t.basis_valid = true;
    } catch (const PatternError &e) {
        t.basis_message = e.what();
        return t;
    }
    CorrectionDictionary dict = CorrectionDictionary::for_pattern(p);
    DeriveOptions dopt;
    dopt.seed = seed;
    DerivationResult r = try_derive_corrections(p, dict, dopt);
    t.derivation_failures = r.failures.size();
    if (!r.complete()) {
        double best = 1.0;
        for (const auto &f : r.failures) {
            best = std::min(best, f.best_fidelity);
        }
        t.min_fidelity = best;
        return t;
    }
    VerifyOptions vopt;
    vopt.seed = seed;
    vopt.random_inputs = random_inputs;
    vopt.corrections = &r.table;
    vopt.corrections_source = "derived";
    VerificationReport rep = verify_pattern(p, vopt);
    t.verified = rep.pass;
    t.min_fidelity = rep.min_fidelity;
    return t;
}

}  // namespace

VariantReport resolve_toffoli_variant(std::uint64_t seed, std::size_t random_inputs) {
    VariantReport rep;
    rep.trials.push_back(run_variant(toffoli_pattern(ToffoliVariant::Literal), "literal", seed, random_inputs));
    rep.trials.push_back(run_variant(toffoli_pattern(ToffoliVariant::Corrected), "corrected", seed, random_inputs));
    for (const auto &t : rep.trials) {
        if (t.verified) {
            rep.selected = t.variant;
            break;
        }
    }
    return rep;
}

VariantReport resolve_fredkin_variant(std::uint64_t seed, std::size_t random_inputs) {
    VariantReport rep;
    rep.trials.push_back(run_variant(fredkin_pattern(FredkinVariant::Literal), "literal", seed, random_inputs));
    rep.trials.push_back(run_variant(fredkin_pattern(FredkinVariant::FlipOnI), "flip-i", seed, random_inputs));
    for (const auto &t : rep.trials) {
        if (t.verified) {
            rep.selected = t.variant;
            break;
        }
    }
    return rep;
}

double linearity_deviation(const GatePattern &pattern, std::size_t trials, std::uint64_t seed) {
    if (!pattern.corrections) {
        throw StructuralError("linearity probe needs a correction table");
    }
    Plan plan = make_plan(pattern);
    auto mats = correction_matrices(pattern, *pattern.corrections, pattern.target.matrix());
    std::size_t m = pattern.input_wires.size();
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        StateVector x = random_state(m, rng);
        StateVector y = random_state(m, rng);
        Complex a = random_phase(rng) * 0.6;
        Complex b = random_phase(rng) * 0.8;
        StateVector z(m);
        for (std::size_t k = 0; k < z.dim(); ++k) {
            z[k] = a * x[k] + b * y[k];
        }
        double c = z.norm();
        z = z.normalized();
        auto rx = residuals(pattern, plan, x);
        auto ry = residuals(pattern, plan, y);
        auto rz = residuals(pattern, plan, z);
        for (std::size_t k = 0; k < rx.size(); ++k) {
            Eigen::VectorXcd lhs = mats[k] * rz[k].to_eigen() * c;
            Eigen::VectorXcd rhs = mats[k] * (a * rx[k].to_eigen() + b * ry[k].to_eigen());
            StateVector l = align_phase(StateVector::from_eigen(lhs));
            StateVector r = align_phase(StateVector::from_eigen(rhs));
            double scale = std::max(1.0, r.norm());
            for (std::size_t i = 0; i < l.dim(); ++i) {
                worst = std::max(worst, std::abs(l[i] - r[i]) / scale);
            }
        }
    }
    return worst;
}

}  // namespace mbgate
