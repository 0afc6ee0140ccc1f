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
#include "row_util.hpp"

#include <string>
#include <unordered_map>

namespace cgame::detail {

void scale_row(LinearRow& row) {
  if (row.terms.empty()) return;
  Rational lead = row.terms.front().coef;
  if (row.rel != Relation::EQ) lead = lead.abs();
  if (lead == Rational(1)) return;
  for (auto& t : row.terms) t.coef /= lead;
  row.rhs /= lead;
}

namespace {

std::string key_of(const LinearRow& row) {
  std::string key = row.rel == Relation::EQ ? "=" : "<";
  for (const auto& t : row.terms) {
    key += std::to_string(t.var);
    key += ':';
    key += t.coef.str();
    key += ' ';
  }
  return key;
}

// True if `a` implies `b` for rows with identical left-hand sides.
bool tighter(const LinearRow& a, const LinearRow& b) {
  if (a.rhs != b.rhs) return a.rhs < b.rhs;
  return a.rel == Relation::LT || b.rel == Relation::LE;
}

}  // namespace

bool simplify_rows(std::vector<LinearRow>& rows) {
  std::vector<LinearRow> out;
  out.reserve(rows.size());
  std::unordered_map<std::string, std::size_t> seen;
  for (auto& r : rows) {
    if (r.is_constant()) {
      if (!r.constant_holds()) return false;
      continue;
    }
    scale_row(r);
    std::string key = key_of(r);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), out.size());
      out.push_back(std::move(r));
      continue;
    }
    LinearRow& prev = out[it->second];
    if (r.rel == Relation::EQ) {
      if (prev.rhs != r.rhs) return false;
    } else if (tighter(r, prev)) {
      prev = std::move(r);
    }
  }
  rows = std::move(out);
  return true;
}

std::vector<LinearRow> negate_row(const LinearRow& row) {
  auto flipped = [&](Relation rel) {
    LinearRow n{row.terms, rel, -row.rhs};
    for (auto& t : n.terms) t.coef = -t.coef;
    return n;
  };
  switch (row.rel) {
    case Relation::LE: return {flipped(Relation::LT)};
    case Relation::LT: return {flipped(Relation::LE)};
    case Relation::EQ: return {LinearRow{row.terms, Relation::LT, row.rhs}, flipped(Relation::LT)};
  }
  return {};
}

bool reduce_cell(Cell& cell, std::size_t threshold, const SolverOptions& opts) {
  if (!simplify_rows(cell.rows)) return false;
  if (cell.rows.size() <= threshold) return true;
  // Drop each inequality whose supremum over the closure of the remaining
  // rows already meets it.
  std::size_t k = 0;
  while (k < cell.rows.size()) {
    const LinearRow& r = cell.rows[k];
    if (r.rel == Relation::EQ) {
      ++k;
      continue;
    }
    Cell others{cell.dim, {}};
    others.rows.reserve(cell.rows.size() - 1);
    for (std::size_t q = 0; q < cell.rows.size(); ++q) {
      if (q == k) continue;
      others.rows.push_back(cell.rows[q]);
      if (others.rows.back().rel == Relation::LT) others.rows.back().rel = Relation::LE;
    }
    auto best = lp_optimize(r.terms, others, Sense::Max, opts);
    if (best.infeasible()) return false;
    bool implied = best.kind == LPOutcome::Kind::Optimal &&
                   (r.rel == Relation::LE ? best.value <= r.rhs : best.value < r.rhs);
    if (implied) {
      cell.rows.erase(cell.rows.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return true;
}

}  // namespace cgame::detail
