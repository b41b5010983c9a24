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

#include "mbgate/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "mbgate/errors.hpp"
#include "mbgate/gates.hpp"

namespace mbgate {

namespace {

struct Word {
    std::vector<Elementary> letters;
    Matrix matrix;
};

char rank_of(Elementary e) {
    switch (e) {
        case Elementary::I:
            return 'a';
        case Elementary::SigmaZ:
            return 'b';
        case Elementary::SigmaX:
            return 'c';
        case Elementary::Up:
            return 'd';
        case Elementary::Ucz:
            return 'e';
        case Elementary::Cx:
            return 'f';
        case Elementary::Gate:
            return 'g';
        case Elementary::GateAdjoint:
            return 'h';
    }
    return 'z';
}

Matrix letter_matrix(Elementary e) {
    switch (e) {
        case Elementary::SigmaZ:
            return gates::pauli_z();
        case Elementary::SigmaX:
            return gates::pauli_x();
        case Elementary::Up:
            return gates::phase();
        default:
            return gates::identity(1);
    }
}

// One representative per single-wire class, shortest and then
// alphabetically first; alphabet order sz < sx < Up.
std::vector<Word> wire_words(const std::vector<Elementary> &alphabet, std::size_t max_len) {
    std::vector<Word> all = {{{}, gates::identity(1)}};
    std::vector<Word> frontier = all;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto &w : frontier) {
            for (auto e : alphabet) {
                Word x = w;
                x.letters.push_back(e);
                x.matrix = w.matrix * letter_matrix(e);
                next.push_back(x);
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        frontier = next;
    }
    std::vector<Word> reps;
    std::unordered_set<std::uint64_t> seen;
    for (const auto &w : all) {
        if (seen.insert(CorrectionDictionary::canonical_hash(w.matrix)).second) {
            reps.push_back(w);
        }
    }
    return reps;
}

struct LocalOp {
    CorrectionOp op;
    std::size_t weight = 0;
    std::string key;
    Matrix matrix;
};

// Every product of one word per wire, wire 0 written first.
std::vector<LocalOp> local_products(const std::vector<Word> &words, std::size_t num_wires) {
    std::vector<LocalOp> out = {{CorrectionOp{}, 0, "", gates::identity(0)}};
    for (std::size_t w = 0; w < num_wires; ++w) {
        std::vector<LocalOp> next;
        for (const auto &prefix : out) {
            for (const auto &word : words) {
                LocalOp x = prefix;
                for (auto e : word.letters) {
                    x.op.factors.push_back({e, {w}});
                    x.key += rank_of(e);
                    x.key += static_cast<char>('0' + w);
                }
                x.weight += word.letters.size();
                x.matrix = gates::kron(prefix.matrix, word.matrix);
                next.push_back(x);
            }
        }
        out = std::move(next);
    }
    for (auto &x : out) {
        if (x.op.factors.empty()) {
            x.op.factors.push_back({Elementary::I, {}});
        }
    }
    return out;
}

void append_factors(CorrectionOp &dst, const CorrectionOp &src) {
    for (const auto &f : src.factors) {
        if (f.kind != Elementary::I) {
            dst.factors.push_back(f);
        }
    }
}

std::string factor_key(const Factor &f) {
    std::string k(1, rank_of(f.kind));
    for (auto w : f.wires) {
        k += static_cast<char>('0' + w);
    }
    return k;
}

}  // namespace

std::uint64_t CorrectionDictionary::canonical_hash(const Matrix &m) {
    Complex phase(1.0, 0.0);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        bool found = false;
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (std::abs(m(i, j)) > 1e-6) {
                phase = std::conj(m(i, j)) / std::abs(m(i, j));
                found = true;
                break;
            }
        }
        if (found) {
            break;
        }
    }
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](long long v) {
        auto u = static_cast<std::uint64_t>(v);
        for (int b = 0; b < 8; ++b) {
            h ^= (u >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(m.rows());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            Complex z = m(i, j) * phase;
            mix(std::llround(z.real() * 1e6));
            mix(std::llround(z.imag() * 1e6));
        }
    }
    return h;
}

void CorrectionDictionary::add_all(std::vector<Candidate> candidates) {
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate &a, const Candidate &b) {
        if (a.weight != b.weight) {
            return a.weight < b.weight;
        }
        if (a.family != b.family) {
            return a.family < b.family;
        }
        return a.order_key < b.order_key;
    });
    for (auto &c : candidates) {
        if (index_.count(c.hash)) {
            continue;
        }
        index_[c.hash].push_back(entries_.size());
        entries_.push_back({std::move(c.op), c.weight, c.family});
    }
}

CorrectionDictionary CorrectionDictionary::pauli(std::size_t num_wires) {
    CorrectionDictionary d;
    d.num_wires_ = num_wires;
    auto words = wire_words({Elementary::SigmaZ, Elementary::SigmaX}, 2);
    std::vector<Candidate> cands;
    for (auto &l : local_products(words, num_wires)) {
        cands.push_back({l.op, l.weight, 0, l.key, canonical_hash(l.matrix)});
    }
    d.add_all(std::move(cands));
    return d;
}

std::vector<CorrectionDictionary::Candidate> CorrectionDictionary::clifford_candidates(std::size_t num_wires) {
    auto words = wire_words({Elementary::SigmaZ, Elementary::SigmaX, Elementary::Up}, 3);
    auto locals = local_products(words, num_wires);
    std::vector<Candidate> cands;
    for (auto &l : locals) {
        cands.push_back({l.op, l.weight, 0, l.key, canonical_hash(l.matrix)});
    }
    if (num_wires == 2) {
        Matrix cz = gates::cz();
        for (auto &l : locals) {
            CorrectionOp op;
            op.factors.push_back({Elementary::Ucz, {0, 1}});
            append_factors(op, l.op);
            cands.push_back({op, l.weight + 1, 1, l.key, canonical_hash(cz * l.matrix)});
        }
    }
    return cands;
}

CorrectionDictionary CorrectionDictionary::clifford(std::size_t num_wires) {
    CorrectionDictionary d;
    d.num_wires_ = num_wires;
    d.add_all(clifford_candidates(num_wires));
    return d;
}

CorrectionDictionary CorrectionDictionary::propagated(std::size_t num_wires, const Matrix &target) {
    if (target.rows() != gates::identity(num_wires).rows()) {
        throw UsageError("target dimension does not match the number of output wires");
    }
    CorrectionDictionary d;
    d.num_wires_ = num_wires;
    d.target_ = target;
    auto paulis = local_products(wire_words({Elementary::SigmaZ, Elementary::SigmaX}, 2), num_wires);

    // Entangling frame changes controlled by wire 0.
    std::vector<Factor> links;
    for (std::size_t j = 1; j < num_wires; ++j) {
        links.push_back({Elementary::Cx, {0, j}});
        links.push_back({Elementary::Ucz, {0, j}});
    }
    std::vector<std::pair<std::vector<Factor>, Matrix>> frames;
    for (std::size_t mask = 0; mask < (std::size_t{1} << links.size()); ++mask) {
        std::vector<Factor> fs;
        Matrix m = gates::identity(num_wires);
        for (std::size_t b = 0; b < links.size(); ++b) {
            if (mask & (std::size_t{1} << b)) {
                fs.push_back(links[b]);
                CorrectionOp single{{links[b]}};
                m = m * single.matrix(num_wires);
            }
        }
        frames.emplace_back(fs, m);
    }

    Matrix g = target;
    Matrix gd = target.adjoint();
    std::vector<Candidate> cands = clifford_candidates(num_wires);
    for (const auto &pin : paulis) {
        for (const auto &[frame, fm] : frames) {
            Matrix conj = g * pin.matrix * fm * gd;
            std::string inner_key = pin.key;
            for (const auto &f : frame) {
                inner_key += factor_key(f);
            }
            for (const auto &pout : paulis) {
                CorrectionOp op;
                op.factors.push_back({Elementary::Gate, {}});
                append_factors(op, pin.op);
                op.factors.insert(op.factors.end(), frame.begin(), frame.end());
                op.factors.push_back({Elementary::GateAdjoint, {}});
                append_factors(op, pout.op);
                std::size_t weight = 2 + pin.weight + frame.size() + pout.weight;
                cands.push_back({op, weight, 2, inner_key + "|" + pout.key, canonical_hash(conj * pout.matrix)});
            }
        }
    }
    d.add_all(std::move(cands));
    return d;
}

CorrectionDictionary CorrectionDictionary::for_pattern(const GatePattern &pattern) {
    std::size_t m = pattern.output_wires.size();
    switch (pattern.vocabulary) {
        case Vocabulary::Pauli:
            return pauli(m);
        case Vocabulary::Clifford:
            return clifford(m);
        case Vocabulary::Propagated:
            return propagated(m, pattern.target.matrix());
    }
    return pauli(m);
}

Matrix CorrectionDictionary::matrix(std::size_t k) const { return entries_.at(k).op.matrix(num_wires_, target()); }

std::optional<std::size_t> CorrectionDictionary::find_equivalent(const Matrix &m) const {
    auto it = index_.find(canonical_hash(m));
    if (it == index_.end()) {
        return std::nullopt;
    }
    for (auto k : it->second) {
        if (gates::equal_up_to_phase(matrix(k), m, 1e-6)) {
            return k;
        }
    }
    return std::nullopt;
}

}  // namespace mbgate
