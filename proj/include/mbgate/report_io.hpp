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

#ifndef MBGATE_REPORT_IO_HPP
#define MBGATE_REPORT_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mbgate/oracle.hpp"
#include "mbgate/pattern.hpp"

namespace mbgate {

enum class OutputFormat { Text, Json, Csv };

/// "text", "json" or "csv".  Throws UsageError.
OutputFormat output_format_from_name(std::string_view name);

/// One or more verification runs of the same pattern (e.g. printed and
/// derived corrections).  JSON and CSV carry every fidelity cell.
std::string render_verification(const GatePattern &pattern, const std::vector<VerificationReport> &reports,
                                OutputFormat format);

/// Inverse of the JSON form of render_verification.  Restores the scalar
/// fields, fidelities and cell lists; doubles round-trip exactly.
std::vector<VerificationReport> verification_reports_from_json(const std::string &text);

std::string render_derivation(const GatePattern &pattern, const DerivationResult &result, OutputFormat format);

std::string render_loss(const GatePattern &pattern, const LossReport &report, OutputFormat format);

std::string render_variants(std::string_view pattern_name, const VariantReport &report, OutputFormat format);

std::string render_parity(const std::vector<ParityRow> &rows, OutputFormat format);

/// Derived table in the printed row/column layout, with cells that differ
/// from the printed table marked.
std::string render_table_reproduction(int id, const GatePattern &pattern, const CorrectionTable &derived,
                                      const TableDiff &diff, OutputFormat format);

std::string render_catalog(OutputFormat format);

}  // namespace mbgate

#endif
