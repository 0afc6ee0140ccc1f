// Copyright 2026 The cgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef CGAME_SRC_SOLVER_ROW_UTIL_HPP_
#define CGAME_SRC_SOLVER_ROW_UTIL_HPP_

#include <vector>

#include "cgame/linsys.hpp"
#include "cgame/options.hpp"
#include "cgame/solver.hpp"

namespace cgame::detail {

// Positive rescaling so the first coefficient has magnitude 1 (EQ rows:
// first coefficient exactly 1).
void scale_row(LinearRow& row);

// Drops true constants, rescales, merges parallel rows keeping the tightest.
// Returns false when the rows are trivially contradictory.
bool simplify_rows(std::vector<LinearRow>& rows);

// Pieces whose union is the complement of the row.
std::vector<LinearRow> negate_row(const LinearRow& row);

// simplify_rows plus LP-based removal of implied inequalities once the cell
// has more than `threshold` rows. Returns false if the cell is found empty.
bool reduce_cell(Cell& cell, std::size_t threshold, const SolverOptions& opts);

}  // namespace cgame::detail

#endif  // CGAME_SRC_SOLVER_ROW_UTIL_HPP_
