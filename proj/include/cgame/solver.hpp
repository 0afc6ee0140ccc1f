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
#ifndef CGAME_SOLVER_HPP_
#define CGAME_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgame/linsys.hpp"
#include "cgame/options.hpp"
#include "cgame/rational.hpp"

namespace cgame {

enum class Sense { Max, Min };

// Conjunction of rows over `dim` real variables numbered 0..dim-1.
struct Cell {
  std::size_t dim = 0;
  std::vector<LinearRow> rows;

  bool contains(const std::vector<Rational>& point) const;
};

struct LPOutcome {
  enum class Kind { Infeasible, Feasible, Optimal, Unbounded };

  Kind kind = Kind::Infeasible;
  Rational value;          // Optimal only
  bool attained = false;   // Optimal only
  std::optional<std::vector<Rational>> witness;

  bool feasible() const { return kind == Kind::Feasible || kind == Kind::Optimal || kind == Kind::Unbounded; }
  bool infeasible() const { return kind == Kind::Infeasible; }

  static LPOutcome infeasible_outcome() { return {}; }
  static LPOutcome feasible_outcome(std::vector<Rational> w) {
    return LPOutcome{Kind::Feasible, Rational(), false, std::move(w)};
  }
  static LPOutcome unbounded_outcome() { return LPOutcome{Kind::Unbounded, Rational(), false, std::nullopt}; }
};

// Strict rows get a shared slack s (capped at 1) that is maximized; the cell
// is nonempty iff the optimal slack is positive. The witness satisfies strict
// rows strictly.
LPOutcome lp_feasible(const Cell& cell, const SolverOptions& opts = {});

// Supremum (Max) or infimum (Min) of a linear form over the cell.
LPOutcome lp_optimize(const std::vector<Term>& objective, const Cell& cell, Sense sense,
                      const SolverOptions& opts = {});

// Finite interval for every integer variable; `infeasible` is set when the
// relaxation is empty or some interval contains no integer.
struct IntegerBounds {
  std::vector<std::optional<std::pair<Rational, Rational>>> box;
  bool infeasible = false;

  // Product of interval sizes, saturating at `cap + 1`.
  std::uint64_t grid_size(std::uint64_t cap) const;
};

IntegerBounds derive_integer_bounds(const ConstraintSystem& system, const SolverOptions& opts = {});

// Mixed-integer feasibility; the witness is in scope order.
LPOutcome milp_feasible(const ConstraintSystem& system, const SolverOptions& opts = {});

// Finite union of cells over named real variables.
class SemilinearSet {
 public:
  SemilinearSet() = default;
  explicit SemilinearSet(std::vector<std::string> scope) : scope_(std::move(scope)) {}
  static SemilinearSet full(std::vector<std::string> scope);

  const std::vector<std::string>& scope() const { return scope_; }
  std::size_t dim() const { return scope_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }

  // Adds the cell unless a constant row makes it trivially empty.
  void add_cell(Cell cell);
  bool contains(const std::vector<Rational>& point) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

 private:
  std::vector<std::string> scope_;
  std::vector<Cell> cells_;
};

SemilinearSet complement(const SemilinearSet& s, const SolverOptions& opts = {});
SemilinearSet intersect(const SemilinearSet& a, const SemilinearSet& b, const SolverOptions& opts = {});
// a \ b, built by splitting each cell of a against each cell of b.
SemilinearSet difference(const SemilinearSet& a, const SemilinearSet& b, const SolverOptions& opts = {});
SemilinearSet unite(const SemilinearSet& a, const SemilinearSet& b);
SemilinearSet project(const SemilinearSet& s, const std::vector<std::string>& keep,
                      const SolverOptions& opts = {});
bool is_empty(const SemilinearSet& s, const SolverOptions& opts = {});
std::optional<std::vector<Rational>> witness(const SemilinearSet& s, const SolverOptions& opts = {});
LPOutcome optimize_over(const SemilinearSet& s, const std::vector<Term>& objective, Sense sense,
                        const SolverOptions& opts = {});

// Exact projection of the mixed-integer system onto the kept variables (given
// as scope indices; the result scope uses their names in that order).
SemilinearSet to_semilinear(const ConstraintSystem& system, const std::vector<std::size_t>& keep,
                            const SolverOptions& opts = {});

// Fourier-Motzkin projection of one cell onto `keep` (indices into the cell's
// variables, renumbered 0..keep.size()-1 in the result). nullopt if the
// elimination exposes a contradiction.
std::optional<Cell> project_cell(const Cell& cell, const std::vector<std::size_t>& keep,
                                 const SolverOptions& opts = {});

PayoffPoint to_point(const ConstraintSystem& system, const std::vector<Rational>& values);
PayoffPoint to_point(const std::vector<std::string>& scope, const std::vector<Rational>& values);

}  // namespace cgame

#endif  // CGAME_SOLVER_HPP_
