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
#include <algorithm>
#include <numeric>

#include "cgame/errors.hpp"
#include "cgame/solver.hpp"

namespace cgame {

namespace {

Cell relaxation(const ConstraintSystem& system, bool closed) {
  Cell cell{system.num_variables(), system.rows_with_bounds()};
  if (closed) {
    for (auto& r : cell.rows) {
      if (r.rel == Relation::LT) r.rel = Relation::LE;
    }
  }
  return cell;
}

void add_box_rows(Cell& cell, const IntegerBounds& bounds) {
  for (std::size_t i = 0; i < bounds.box.size(); ++i) {
    if (!bounds.box[i]) continue;
    cell.rows.push_back(LinearRow{{Term{i, Rational(-1)}}, Relation::LE, -bounds.box[i]->first});
    cell.rows.push_back(LinearRow{{Term{i, Rational(1)}}, Relation::LE, bounds.box[i]->second});
  }
}

std::vector<std::size_t> integer_vars(const ConstraintSystem& system) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < system.num_variables(); ++i) {
    if (system.variable(i).is_integer()) out.push_back(i);
  }
  return out;
}

// Depth-first enumeration of integer assignments in variable order, pruning
// partial assignments whose relaxation is empty. `leaf` receives the full
// substitution vector and returns true to stop.
template <typename Leaf>
bool enumerate(const ConstraintSystem& system, const IntegerBounds& bounds,
               const std::vector<std::size_t>& ints, const SolverOptions& opts, Leaf&& leaf) {
  std::vector<std::optional<Rational>> fixed(system.num_variables());
  auto feasible_so_far = [&]() {
    ConstraintSystem rest = substitute(system, fixed);
    Cell cell = relaxation(rest, false);
    return lp_feasible(cell, opts).feasible();
  };
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    opts.deadline.check();
    if (depth == ints.size()) return leaf(fixed);
    const std::size_t var = ints[depth];
    const auto& [lo, hi] = *bounds.box[var];
    for (Rational v = lo; v <= hi; v += Rational(1)) {
      fixed[var] = v;
      // The last level is checked by the leaf itself.
      if (depth + 1 < ints.size() && !feasible_so_far()) continue;
      if (self(self, depth + 1)) return true;
    }
    fixed[var].reset();
    return false;
  };
  return rec(rec, 0);
}

LPOutcome branch_and_bound(const ConstraintSystem& system, const std::optional<IntegerBounds>& bounds,
                           const SolverOptions& opts) {
  const auto ints = integer_vars(system);
  Cell base = relaxation(system, false);
  if (bounds) add_box_rows(base, *bounds);
  std::vector<std::vector<LinearRow>> stack{{}};
  std::uint64_t nodes = 0;
  while (!stack.empty()) {
    opts.deadline.check();
    if (++nodes > opts.max_bb_nodes) {
      throw EnumerationBudgetExceeded("branch-and-bound node limit reached");
    }
    std::vector<LinearRow> extra = std::move(stack.back());
    stack.pop_back();
    Cell cell = base;
    cell.rows.insert(cell.rows.end(), extra.begin(), extra.end());
    auto res = lp_feasible(cell, opts);
    if (res.infeasible()) continue;
    const auto& w = *res.witness;
    auto frac = std::find_if(ints.begin(), ints.end(), [&](std::size_t i) { return !w[i].is_integer(); });
    if (frac == ints.end()) return res;
    const std::size_t var = *frac;
    auto up = extra;
    up.push_back(LinearRow{{Term{var, Rational(-1)}}, Relation::LE, -Rational(w[var].ceil())});
    auto down = std::move(extra);
    down.push_back(LinearRow{{Term{var, Rational(1)}}, Relation::LE, Rational(w[var].floor())});
    stack.push_back(std::move(up));
    stack.push_back(std::move(down));
  }
  return LPOutcome::infeasible_outcome();
}

}  // namespace

std::uint64_t IntegerBounds::grid_size(std::uint64_t cap) const {
  std::uint64_t total = 1;
  for (const auto& b : box) {
    if (!b) continue;
    mpz_class width = b->second.floor() - b->first.ceil() + 1;
    if (width <= 0) return 0;
    if (width > mpz_class(std::to_string(cap)) || total > (cap + 1) / width.get_ui()) return cap + 1;
    total *= width.get_ui();
    if (total > cap) return cap + 1;
  }
  return total;
}

IntegerBounds derive_integer_bounds(const ConstraintSystem& system, const SolverOptions& opts) {
  IntegerBounds out;
  out.box.resize(system.num_variables());
  Cell closed = relaxation(system, true);
  bool checked = false;
  for (std::size_t i = 0; i < system.num_variables(); ++i) {
    const Variable& v = system.variable(i);
    if (!v.is_integer()) continue;
    std::optional<Rational> lo = v.lo, hi = v.hi;
    if (!lo || !hi) {
      if (!checked) {
        if (lp_feasible(closed, opts).infeasible()) {
          out.infeasible = true;
          return out;
        }
        checked = true;
      }
      std::vector<Term> obj{Term{i, Rational(1)}};
      if (!lo) {
        auto r = lp_optimize(obj, closed, Sense::Min, opts);
        if (r.kind == LPOutcome::Kind::Unbounded) throw UnboundedInteger(v.name);
        lo = Rational(r.value.ceil());
      }
      if (!hi) {
        auto r = lp_optimize(obj, closed, Sense::Max, opts);
        if (r.kind == LPOutcome::Kind::Unbounded) throw UnboundedInteger(v.name);
        hi = Rational(r.value.floor());
      }
    }
    if (*lo > *hi) out.infeasible = true;
    out.box[i] = std::make_pair(*lo, *hi);
  }
  return out;
}

LPOutcome milp_feasible(const ConstraintSystem& system, const SolverOptions& opts) {
  const auto ints = integer_vars(system);
  if (ints.empty()) return lp_feasible(relaxation(system, false), opts);

  std::optional<IntegerBounds> bounds;
  try {
    bounds = derive_integer_bounds(system, opts);
  } catch (const UnboundedInteger&) {
    // Branching may still find a point or close every branch; the node cap
    // guards against divergence.
  }
  if (bounds && bounds->infeasible) return LPOutcome::infeasible_outcome();
  if (bounds && bounds->grid_size(opts.milp_enumeration_threshold) <= opts.milp_enumeration_threshold) {
    LPOutcome found;
    enumerate(system, *bounds, ints, opts, [&](const std::vector<std::optional<Rational>>& fixed) {
      ConstraintSystem rest = substitute(system, fixed);
      auto r = lp_feasible(relaxation(rest, false), opts);
      if (r.infeasible()) return false;
      std::vector<Rational> full(system.num_variables());
      std::size_t next = 0;
      for (std::size_t i = 0; i < full.size(); ++i) {
        full[i] = fixed[i] ? *fixed[i] : (*r.witness)[next++];
      }
      found = LPOutcome::feasible_outcome(std::move(full));
      return true;
    });
    return found;
  }
  return branch_and_bound(system, bounds, opts);
}

// ---------------------------------------------------------------------------
// to_semilinear

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Subsystem on the selected variables, rows filtered accordingly.
ConstraintSystem restrict_to(const ConstraintSystem& system, const std::vector<bool>& selected,
                             std::vector<std::size_t>& map) {
  ConstraintSystem out;
  map.assign(system.num_variables(), 0);
  for (std::size_t i = 0; i < system.num_variables(); ++i) {
    if (selected[i]) map[i] = out.add_variable(system.variable(i));
  }
  for (const auto& r : system.rows()) {
    if (r.is_constant() || !selected[r.terms.front().var]) continue;
    LinearRow copy = r;
    for (auto& t : copy.terms) t.var = map[t.var];
    out.add_row(std::move(copy));
  }
  return out;
}

}  // namespace

SemilinearSet to_semilinear(const ConstraintSystem& system, const std::vector<std::size_t>& keep,
                            const SolverOptions& opts) {
  std::vector<std::string> scope;
  for (auto k : keep) scope.push_back(system.variable(k).name);
  SemilinearSet result(scope);

  for (const auto& r : system.rows()) {
    if (r.is_constant() && !r.constant_holds()) return result;
  }

  // Components of the variable/row incidence graph that hold no kept
  // variable only matter through their feasibility.
  const std::size_t n = system.num_variables();
  DisjointSets comps(n);
  for (const auto& r : system.rows()) {
    for (std::size_t k = 1; k < r.terms.size(); ++k) comps.join(r.terms[0].var, r.terms[k].var);
  }
  std::vector<bool> kept_root(n, false);
  for (auto k : keep) kept_root[comps.find(k)] = true;
  std::vector<bool> linked(n), detached(n);
  bool any_detached = false;
  for (std::size_t i = 0; i < n; ++i) {
    linked[i] = kept_root[comps.find(i)];
    detached[i] = !linked[i];
    any_detached = any_detached || detached[i];
  }
  std::vector<std::size_t> map;
  if (any_detached) {
    ConstraintSystem side = restrict_to(system, detached, map);
    if (milp_feasible(side, opts).infeasible()) return result;
  }
  ConstraintSystem core = restrict_to(system, linked, map);
  std::vector<std::size_t> core_keep;
  for (auto k : keep) core_keep.push_back(map[k]);

  const auto ints = integer_vars(core);
  std::vector<bool> is_kept(core.num_variables(), false);
  for (auto k : core_keep) is_kept[k] = true;

  auto emit = [&](const std::vector<std::optional<Rational>>& fixed) {
    // Integer kept variables stay in scope, pinned by an equality.
    std::vector<std::optional<Rational>> sub = fixed;
    std::vector<LinearRow> pins;
    for (auto i : ints) {
      if (is_kept[i] && sub[i]) sub[i].reset();
    }
    ConstraintSystem rest = substitute(core, sub);
    std::vector<std::size_t> local(core.num_variables(), 0);
    for (std::size_t i = 0, next = 0; i < core.num_variables(); ++i) {
      if (!sub[i]) local[i] = next++;
    }
    Cell cell{rest.num_variables(), rest.rows_with_bounds()};
    for (auto i : ints) {
      if (is_kept[i] && fixed[i]) {
        cell.rows.push_back(LinearRow{{Term{local[i], Rational(1)}}, Relation::EQ, *fixed[i]});
      }
    }
    if (lp_feasible(cell, opts).infeasible()) return false;
    std::vector<std::size_t> cell_keep;
    for (auto k : core_keep) cell_keep.push_back(local[k]);
    if (auto projected = project_cell(cell, cell_keep, opts)) result.add_cell(std::move(*projected));
    return false;
  };

  if (ints.empty()) {
    emit(std::vector<std::optional<Rational>>(core.num_variables()));
    return result;
  }
  IntegerBounds bounds = derive_integer_bounds(core, opts);
  if (bounds.infeasible) return result;
  if (bounds.grid_size(opts.max_int_enum) > opts.max_int_enum) {
    throw EnumerationBudgetExceeded("integer grid exceeds the enumeration cap of " +
                                    std::to_string(opts.max_int_enum));
  }
  enumerate(core, bounds, ints, opts, emit);
  return result;
}

}  // namespace cgame
