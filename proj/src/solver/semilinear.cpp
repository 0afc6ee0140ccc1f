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
#include <limits>

#include "cgame/errors.hpp"
#include "cgame/solver.hpp"
#include "row_util.hpp"

namespace cgame {

namespace {

constexpr std::size_t kReduceSlack = 6;

std::size_t reduce_threshold(std::size_t dim) { return 2 * dim + kReduceSlack; }

// r + factor * q, dropping cancelled terms.
LinearRow add_multiple(const LinearRow& r, const Rational& factor, const LinearRow& q) {
  std::vector<Term> terms = r.terms;
  for (const auto& t : q.terms) terms.push_back(Term{t.var, factor * t.coef});
  LinearRow out = make_row(std::move(terms), RawRelation::LE, r.rhs + factor * q.rhs);
  out.rel = r.rel;
  return out;
}

bool mentions(const LinearRow& r, std::size_t var) { return !r.coefficient(var).is_zero(); }

}  // namespace

std::optional<Cell> project_cell(const Cell& cell, const std::vector<std::size_t>& keep,
                                 const SolverOptions& opts) {
  std::vector<bool> kept(cell.dim, false);
  for (auto k : keep) kept.at(k) = true;
  std::vector<std::size_t> elim;
  for (std::size_t v = 0; v < cell.dim; ++v) {
    if (!kept[v]) elim.push_back(v);
  }
  std::vector<LinearRow> rows = cell.rows;
  bool identity = elim.empty();
  if (identity) {
    for (std::size_t k = 0; k < keep.size(); ++k) identity = identity && keep[k] == k;
  }
  if (identity) {
    for (const auto& r : rows) {
      if (r.is_constant() && !r.constant_holds()) return std::nullopt;
    }
    std::erase_if(rows, [](const LinearRow& r) { return r.is_constant(); });
    return Cell{cell.dim, std::move(rows)};
  }
  if (!detail::simplify_rows(rows)) return std::nullopt;

  // Equalities first: solve for an eliminated variable and substitute.
  for (std::size_t e : elim) {
    auto q = std::find_if(rows.begin(), rows.end(), [&](const LinearRow& r) {
      return r.rel == Relation::EQ && mentions(r, e);
    });
    if (q == rows.end()) continue;
    LinearRow pivot_row = *q;
    rows.erase(q);
    Rational qe = pivot_row.coefficient(e);
    for (auto& r : rows) {
      Rational re = r.coefficient(e);
      if (!re.is_zero()) r = add_multiple(r, -re / qe, pivot_row);
    }
    if (!detail::simplify_rows(rows)) return std::nullopt;
  }

  // Fourier-Motzkin on the remaining eliminated variables.
  std::vector<std::size_t> pending;
  for (std::size_t e : elim) {
    if (std::any_of(rows.begin(), rows.end(), [&](const LinearRow& r) { return mentions(r, e); })) {
      pending.push_back(e);
    }
  }
  while (!pending.empty()) {
    opts.deadline.check();
    std::size_t pick = 0;
    long best_cost = std::numeric_limits<long>::max();
    for (std::size_t k = 0; k < pending.size(); ++k) {
      long pos = 0, neg = 0;
      for (const auto& r : rows) {
        int s = r.coefficient(pending[k]).sign();
        pos += s > 0;
        neg += s < 0;
      }
      long cost = pos * neg - pos - neg;
      if (cost < best_cost) {
        best_cost = cost;
        pick = k;
      }
    }
    const std::size_t e = pending[pick];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));

    std::vector<LinearRow> next, pos, neg;
    for (auto& r : rows) {
      int s = r.coefficient(e).sign();
      if (s == 0) {
        next.push_back(std::move(r));
      } else {
        (s > 0 ? pos : neg).push_back(std::move(r));
      }
    }
    for (const auto& p : pos) {
      Rational pe = p.coefficient(e);
      for (const auto& n : neg) {
        Rational ne = -n.coefficient(e);
        // ne * p + pe * n cancels e.
        LinearRow scaled = p;
        for (auto& t : scaled.terms) t.coef *= ne;
        scaled.rhs *= ne;
        LinearRow combined = add_multiple(scaled, pe, n);
        combined.rel = (p.rel == Relation::LT || n.rel == Relation::LT) ? Relation::LT : Relation::LE;
        next.push_back(std::move(combined));
      }
    }
    Cell tmp{cell.dim, std::move(next)};
    if (!detail::reduce_cell(tmp, reduce_threshold(keep.size() + pending.size()), opts)) {
      return std::nullopt;
    }
    rows = std::move(tmp.rows);
  }

  std::vector<std::size_t> renumber(cell.dim, 0);
  for (std::size_t k = 0; k < keep.size(); ++k) renumber[keep[k]] = k;
  for (auto& r : rows) {
    for (auto& t : r.terms) t.var = renumber[t.var];
    std::sort(r.terms.begin(), r.terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
  }
  return Cell{keep.size(), std::move(rows)};
}

// ---------------------------------------------------------------------------
// SemilinearSet

SemilinearSet SemilinearSet::full(std::vector<std::string> scope) {
  SemilinearSet s(std::move(scope));
  s.cells_.push_back(Cell{s.dim(), {}});
  return s;
}

void SemilinearSet::add_cell(Cell cell) {
  if (cell.dim != dim()) throw ScopeMismatch("cell dimension differs from set scope");
  for (const auto& r : cell.rows) {
    if (r.is_constant() && !r.constant_holds()) return;
  }
  std::erase_if(cell.rows, [](const LinearRow& r) { return r.is_constant(); });
  cells_.push_back(std::move(cell));
}

bool SemilinearSet::contains(const std::vector<Rational>& point) const {
  return std::any_of(cells_.begin(), cells_.end(), [&](const Cell& c) { return c.contains(point); });
}

std::optional<std::size_t> SemilinearSet::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < scope_.size(); ++k) {
    if (scope_[k] == name) return k;
  }
  return std::nullopt;
}

namespace {

void require_same_scope(const SemilinearSet& a, const SemilinearSet& b) {
  if (a.scope() != b.scope()) throw ScopeMismatch("semilinear sets over different scopes");
}

// Adds the cell if nonempty, after light cleanup.
void push_if_nonempty(std::vector<Cell>& out, Cell cell, const SolverOptions& opts) {
  if (!detail::reduce_cell(cell, reduce_threshold(cell.dim), opts)) return;
  if (lp_feasible(cell, opts).infeasible()) return;
  out.push_back(std::move(cell));
}

// piece \ q as a disjoint union of pieces.
void subtract_cell(const Cell& piece, const Cell& q, std::vector<Cell>& out, const SolverOptions& opts) {
  Cell both = piece;
  both.rows.insert(both.rows.end(), q.rows.begin(), q.rows.end());
  if (lp_feasible(both, opts).infeasible()) {
    out.push_back(piece);
    return;
  }
  Cell prefix = piece;
  for (const auto& r : q.rows) {
    if (r.is_constant()) continue;
    for (auto& n : detail::negate_row(r)) {
      Cell cand = prefix;
      cand.rows.push_back(std::move(n));
      push_if_nonempty(out, std::move(cand), opts);
    }
    prefix.rows.push_back(r);
  }
}

}  // namespace

SemilinearSet unite(const SemilinearSet& a, const SemilinearSet& b) {
  require_same_scope(a, b);
  SemilinearSet out = a;
  for (const auto& c : b.cells()) out.add_cell(c);
  return out;
}

SemilinearSet intersect(const SemilinearSet& a, const SemilinearSet& b, const SolverOptions& opts) {
  require_same_scope(a, b);
  std::vector<Cell> cells;
  for (const auto& ca : a.cells()) {
    for (const auto& cb : b.cells()) {
      Cell c = ca;
      c.rows.insert(c.rows.end(), cb.rows.begin(), cb.rows.end());
      push_if_nonempty(cells, std::move(c), opts);
    }
  }
  SemilinearSet out(a.scope());
  for (auto& c : cells) out.add_cell(std::move(c));
  return out;
}

SemilinearSet difference(const SemilinearSet& a, const SemilinearSet& b, const SolverOptions& opts) {
  require_same_scope(a, b);
  SemilinearSet out(a.scope());
  for (const auto& cell : a.cells()) {
    std::vector<Cell> pieces;
    push_if_nonempty(pieces, cell, opts);
    for (const auto& q : b.cells()) {
      if (pieces.empty()) break;
      std::vector<Cell> next;
      for (const auto& piece : pieces) subtract_cell(piece, q, next, opts);
      pieces = std::move(next);
    }
    for (auto& p : pieces) out.add_cell(std::move(p));
  }
  return out;
}

SemilinearSet complement(const SemilinearSet& s, const SolverOptions& opts) {
  return difference(SemilinearSet::full(s.scope()), s, opts);
}

SemilinearSet project(const SemilinearSet& s, const std::vector<std::string>& keep,
                      const SolverOptions& opts) {
  std::vector<std::size_t> idx;
  for (const auto& name : keep) {
    auto k = s.index_of(name);
    if (!k) throw ScopeMismatch("projection onto unknown variable " + name);
    idx.push_back(*k);
  }
  SemilinearSet out(keep);
  for (const auto& c : s.cells()) {
    auto p = project_cell(c, idx, opts);
    if (p) out.add_cell(std::move(*p));
  }
  return out;
}

bool is_empty(const SemilinearSet& s, const SolverOptions& opts) { return !witness(s, opts).has_value(); }

std::optional<std::vector<Rational>> witness(const SemilinearSet& s, const SolverOptions& opts) {
  for (const auto& c : s.cells()) {
    auto f = lp_feasible(c, opts);
    if (f.feasible()) return f.witness;
  }
  return std::nullopt;
}

LPOutcome optimize_over(const SemilinearSet& s, const std::vector<Term>& objective, Sense sense,
                        const SolverOptions& opts) {
  LPOutcome best;
  for (const auto& c : s.cells()) {
    auto r = lp_optimize(objective, c, sense, opts);
    if (r.infeasible()) continue;
    if (r.kind == LPOutcome::Kind::Unbounded) return r;
    if (best.infeasible()) {
      best = r;
      continue;
    }
    bool better = sense == Sense::Max ? r.value > best.value : r.value < best.value;
    if (better || (r.value == best.value && r.attained && !best.attained)) best = r;
  }
  return best;
}

PayoffPoint to_point(const ConstraintSystem& system, const std::vector<Rational>& values) {
  PayoffPoint p;
  for (std::size_t i = 0; i < system.num_variables() && i < values.size(); ++i) {
    p.set(system.variable(i).name, values[i]);
  }
  return p;
}

PayoffPoint to_point(const std::vector<std::string>& scope, const std::vector<Rational>& values) {
  PayoffPoint p;
  for (std::size_t i = 0; i < scope.size() && i < values.size(); ++i) p.set(scope[i], values[i]);
  return p;
}

}  // namespace cgame
