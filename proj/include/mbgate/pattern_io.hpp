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

#ifndef MBGATE_PATTERN_IO_HPP
#define MBGATE_PATTERN_IO_HPP

#include <filesystem>
#include <string>

#include "mbgate/pattern.hpp"

namespace mbgate {

/// Document form of a pattern.  Complex numbers are [re, im] pairs; ket
/// amplitudes may be unnormalized.  Throws PatternError on schema or
/// invariant violations.
GatePattern pattern_from_json_text(const std::string &text);
std::string pattern_to_json_text(const GatePattern &pattern);

GatePattern load_pattern(const std::filesystem::path &path);
void save_pattern(const GatePattern &pattern, const std::filesystem::path &path);

/// Reads a square complex matrix in the same [[ [re,im], ... ], ...] form.
Matrix matrix_from_json_text(const std::string &text);

}  // namespace mbgate

#endif
