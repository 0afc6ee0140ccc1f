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

#include "cgame/errors.hpp"
#include "cgame/solver.hpp"
#include "simplex.hpp"

namespace cgame {

void Deadline::check() const {
  if (expired()) throw TimeLimitExceeded();
}

bool Cell::contains(const std::vector<Rational>& point) const {
  return std::all_of(rows.begin(), rows.end(), [&](const LinearRow& r) { return r.holds(point); });
}

namespace {

std::vector<Rational> to_rationals(const std::vector<mpq_class>& x, std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) out.emplace_back(x[j]);
  return out;
}

// Rows with constants resolved; false if some constant row fails.
bool nonconstant_rows(const Cell& cell, std::vector<const LinearRow*>& out, bool& has_strict) {
  has_strict = false;
  for (const auto& r : cell.rows) {
    if (r.is_constant()) {
      if (!r.constant_holds()) return false;
      continue;
    }
    if (r.rel == Relation::LT) has_strict = true;
    out.push_back(&r);
  }
  return true;
}

}  // namespace

LPOutcome lp_feasible(const Cell& cell, const SolverOptions& opts) {
  std::vector<const LinearRow*> rows;
  bool has_strict = false;
  if (!nonconstant_rows(cell, rows, has_strict)) return LPOutcome::infeasible_outcome();
  const std::size_t n = cell.dim;
  if (!has_strict) {
    auto res = detail::solve_lp(n, rows, {}, opts.deadline);
    if (res.status != detail::LpResult::Status::Optimal) return LPOutcome::infeasible_outcome();
    return LPOutcome::feasible_outcome(to_rationals(res.x, n));
  }
  // Shared slack s at index n: strict rows a.x < b become a.x + s <= b.
  std::vector<LinearRow> lifted;
  lifted.reserve(rows.size() + 1);
  for (const LinearRow* r : rows) {
    LinearRow copy = *r;
    if (copy.rel == Relation::LT) {
      copy.rel = Relation::LE;
      copy.terms.push_back(Term{n, Rational(1)});
    }
    lifted.push_back(std::move(copy));
  }
  lifted.push_back(LinearRow{{Term{n, Rational(1)}}, Relation::LE, Rational(1)});
  std::vector<const LinearRow*> ptrs;
  ptrs.reserve(lifted.size());
  for (const auto& r : lifted) ptrs.push_back(&r);
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;
  auto res = detail::solve_lp(n + 1, ptrs, c, opts.deadline);
  if (res.status != detail::LpResult::Status::Optimal || sgn(res.value) <= 0) {
    return LPOutcome::infeasible_outcome();
  }
  return LPOutcome::feasible_outcome(to_rationals(res.x, n));
}

LPOutcome lp_optimize(const std::vector<Term>& objective, const Cell& cell, Sense sense,
                      const SolverOptions& opts) {
  std::vector<const LinearRow*> rows;
  bool has_strict = false;
  if (!nonconstant_rows(cell, rows, has_strict)) return LPOutcome::infeasible_outcome();
  const std::size_t n = cell.dim;

  std::optional<std::vector<Rational>> interior;
  if (has_strict) {
    auto f = lp_feasible(cell, opts);
    if (f.infeasible()) return f;
    interior = f.witness;
  }
  // Closed relaxation.
  std::vector<LinearRow> closed;
  closed.reserve(rows.size());
  for (const LinearRow* r : rows) {
    closed.push_back(*r);
    if (closed.back().rel == Relation::LT) closed.back().rel = Relation::LE;
  }
  std::vector<const LinearRow*> ptrs;
  for (const auto& r : closed) ptrs.push_back(&r);
  std::vector<mpq_class> c(std::max<std::size_t>(n, 1));
  for (const auto& t : objective) {
    c.at(t.var) += sense == Sense::Max ? t.coef.mpq() : mpq_class(-t.coef.mpq());
  }
  if (n == 0) c.clear();
  auto res = detail::solve_lp(n, ptrs, c, opts.deadline);
  if (res.status == detail::LpResult::Status::Infeasible) return LPOutcome::infeasible_outcome();
  if (res.status == detail::LpResult::Status::Unbounded) return LPOutcome::unbounded_outcome();

  LPOutcome out;
  out.kind = LPOutcome::Kind::Optimal;
  out.value = Rational(mpq_class(sense == Sense::Max ? res.value : mpq_class(-res.value)));
  if (!has_strict) {
    out.attained = true;
    out.witness = to_rationals(res.x, n);
    return out;
  }
  Cell on_level = cell;
  on_level.rows.push_back(make_row(objective, RawRelation::EQ, out.value));
  auto hit = lp_feasible(on_level, opts);
  if (hit.feasible()) {
    out.attained = true;
    out.witness = hit.witness;
  } else {
    out.attained = false;
    out.witness = interior;
  }
  return out;
}

}  // namespace cgame
