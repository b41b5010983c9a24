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

#include "mbgate/random.hpp"

#include <cmath>
#include <numbers>

namespace mbgate {

namespace {

Complex complex_normal(std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    double re = n(rng);
    double im = n(rng);
    return {re, im};
}

}  // namespace

StateVector random_state(std::size_t num_qubits, std::mt19937_64 &rng) {
    while (true) {
        StateVector s(num_qubits);
        bool ok = true;
        for (auto &a : s.amplitudes()) {
            a = complex_normal(rng);
            ok = ok && std::abs(a) >= 1e-6;
        }
        if (!ok) {
            continue;
        }
        s = s.normalized();
        ok = true;
        for (const auto &a : s.amplitudes()) {
            ok = ok && std::abs(a) >= 1e-6;
        }
        if (ok) {
            return s;
        }
    }
}

Unitary random_unitary(std::size_t num_qubits, std::mt19937_64 &rng) {
    auto d = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
    Matrix z(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            z(i, j) = complex_normal(rng);
        }
    }
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < d; ++k) {
        Complex rk = r(k, k);
        if (std::abs(rk) > 0.0) {
            q.col(k) *= rk / std::abs(rk);
        }
    }
    return Unitary(q);
}

Complex random_phase(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    return std::polar(1.0, u(rng));
}

}  // namespace mbgate
