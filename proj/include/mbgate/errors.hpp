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

#ifndef MBGATE_ERRORS_HPP
#define MBGATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mbgate {

/// Bad arguments: dimension mismatches, malformed bit strings, etc.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A ket expression summed to the zero vector.
struct DegenerateExpressionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Schema or invariant violation in a pattern (file or in-memory).
struct PatternError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No dictionary element corrects some outcome.
struct DerivationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Verification could not run, e.g. a correction entry is missing.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mbgate

#endif
