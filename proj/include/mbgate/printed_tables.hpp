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

#ifndef MBGATE_PRINTED_TABLES_HPP
#define MBGATE_PRINTED_TABLES_HPP

#include <string>
#include <vector>

#include "mbgate/correction.hpp"
#include "mbgate/outcome.hpp"

namespace mbgate {

/// Reference correction tables for the phase (2), pi/8 (3), controlled-phase
/// (4), CNOT (5) and swap (6) constructions, transcribed cell by cell.
///
/// Tables 4-6 are laid out with beta outcomes as rows and alpha outcomes as
/// columns; the returned table is keyed (alpha index, beta index) like the
/// corresponding pattern.
CorrectionTable printed_table(int id);

/// Row-major cell text in compact notation, rows then columns as laid out.
const std::vector<std::vector<std::string>> &printed_table_cells(int id);

/// Row and column labels of the layout (rows empty for Tables 2-3).
std::vector<OutcomeLabel> printed_row_labels(int id);
std::vector<OutcomeLabel> printed_column_labels(int id);

/// For Tables 2 and 3: the state before correction as a map from the input
/// (a|0> + b|1>) to the listed state, per outcome in basis order.
std::vector<Matrix> printed_pre_correction_maps(int id);
std::vector<std::string> printed_pre_correction_text(int id);

/// Valid ids: 2, 3, 4, 5, 6.
bool has_printed_table(int id);

}  // namespace mbgate

#endif
