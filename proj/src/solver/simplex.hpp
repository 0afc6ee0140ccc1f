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
#ifndef CGAME_SRC_SOLVER_SIMPLEX_HPP_
#define CGAME_SRC_SOLVER_SIMPLEX_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "cgame/linsys.hpp"
#include "cgame/options.hpp"

namespace cgame::detail {

struct LpResult {
  enum class Status { Infeasible, Optimal, Unbounded };
  Status status = Status::Infeasible;
  mpq_class value;
  std::vector<mpq_class> x;
};

// Maximizes c.x over free variables x in R^n subject to rows with relations
// LE or EQ (LT is rejected). `c` may be empty for a pure feasibility query.
LpResult solve_lp(std::size_t n, const std::vector<const LinearRow*>& rows,
                  const std::vector<mpq_class>& c, const Deadline& deadline);

}  // namespace cgame::detail

#endif  // CGAME_SRC_SOLVER_SIMPLEX_HPP_
