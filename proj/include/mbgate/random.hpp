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

#ifndef MBGATE_RANDOM_HPP
#define MBGATE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "mbgate/statevec.hpp"

namespace mbgate {

/// Seed used whenever the caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Complex-normal amplitudes, normalized.  Draws with any amplitude below
/// 1e-6 in magnitude are rejected so that every basis component is present.
StateVector random_state(std::size_t num_qubits, std::mt19937_64 &rng);

/// Haar-distributed unitary (QR of a complex Gaussian matrix with phase fix).
Unitary random_unitary(std::size_t num_qubits, std::mt19937_64 &rng);

/// Unit-modulus complex number with uniform phase.
Complex random_phase(std::mt19937_64 &rng);

}  // namespace mbgate

#endif
