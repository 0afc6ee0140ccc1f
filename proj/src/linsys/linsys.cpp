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
#include "cgame/linsys.hpp"

#include <algorithm>
#include <sstream>

#include "cgame/errors.hpp"

namespace cgame {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::LE: return "<=";
    case Relation::LT: return "<";
    case Relation::EQ: return "=";
  }
  return "?";
}

std::string player_var_name(std::string_view player_id) { return "x_" + std::string(player_id); }

Variable Variable::integer(std::string name, std::optional<Rational> lo, std::optional<Rational> hi) {
  Variable v{std::move(name), std::nullopt, Domain::Integer, std::move(lo), std::move(hi)};
  return v;
}

Variable Variable::payoff(std::string_view player_id, std::size_t index, Domain domain) {
  return Variable{player_var_name(player_id), index, domain, std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------------------
// Rows

namespace {

bool compare(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::LE: return lhs <= rhs;
    case Relation::LT: return lhs < rhs;
    case Relation::EQ: return lhs == rhs;
  }
  return false;
}

std::vector<Term> combine(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().var == t.var) {
      out.back().coef += t.coef;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coef.is_zero(); });
  return out;
}

}  // namespace

bool LinearRow::constant_holds() const { return compare(Rational(0), rel, rhs); }

Rational LinearRow::coefficient(std::size_t var) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), var,
                             [](const Term& t, std::size_t v) { return t.var < v; });
  if (it != terms.end() && it->var == var) return it->coef;
  return Rational(0);
}

Rational LinearRow::evaluate(const std::vector<Rational>& values) const {
  Rational s;
  for (const auto& t : terms) s += t.coef * values.at(t.var);
  return s;
}

bool LinearRow::holds(const std::vector<Rational>& values) const {
  return compare(evaluate(values), rel, rhs);
}

LinearRow LinearRow::falsity() { return LinearRow{{}, Relation::LE, Rational(-1)}; }

bool operator==(const LinearRow& a, const LinearRow& b) {
  if (a.rel != b.rel || a.rhs != b.rhs || a.terms.size() != b.terms.size()) return false;
  for (std::size_t k = 0; k < a.terms.size(); ++k) {
    if (a.terms[k].var != b.terms[k].var || a.terms[k].coef != b.terms[k].coef) return false;
  }
  return true;
}

LinearRow normalize(const RawRow& raw) {
  LinearRow row;
  row.terms = combine(raw.terms);
  row.rhs = raw.rhs;
  switch (raw.rel) {
    case RawRelation::LE: row.rel = Relation::LE; break;
    case RawRelation::LT: row.rel = Relation::LT; break;
    case RawRelation::EQ: row.rel = Relation::EQ; break;
    case RawRelation::GE:
    case RawRelation::GT:
      row.rel = raw.rel == RawRelation::GE ? Relation::LE : Relation::LT;
      for (auto& t : row.terms) t.coef = -t.coef;
      row.rhs = -row.rhs;
      break;
  }
  return row;
}

LinearRow normalize(const LinearRow& row) {
  RawRow raw{row.terms, RawRelation::LE, row.rhs};
  raw.rel = row.rel == Relation::LE ? RawRelation::LE
          : row.rel == Relation::LT ? RawRelation::LT
                                    : RawRelation::EQ;
  return normalize(raw);
}

LinearRow make_row(std::vector<Term> terms, RawRelation rel, Rational rhs) {
  return normalize(RawRow{std::move(terms), rel, std::move(rhs)});
}

bool holds(const RawRow& raw, const std::vector<Rational>& values) {
  Rational s;
  for (const auto& t : raw.terms) s += t.coef * values.at(t.var);
  switch (raw.rel) {
    case RawRelation::LE: return s <= raw.rhs;
    case RawRelation::LT: return s < raw.rhs;
    case RawRelation::EQ: return s == raw.rhs;
    case RawRelation::GE: return s >= raw.rhs;
    case RawRelation::GT: return s > raw.rhs;
  }
  return false;
}

// ---------------------------------------------------------------------------
// PayoffPoint

PayoffPoint::PayoffPoint(std::initializer_list<std::pair<std::string, Rational>> init) {
  for (const auto& [k, v] : init) set(k, v);
}

void PayoffPoint::set(const std::string& name, Rational value) {
  for (auto& e : entries_) {
    if (e.first == name) {
      e.second = std::move(value);
      return;
    }
  }
  entries_.emplace_back(name, std::move(value));
}

const Rational* PayoffPoint::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.first == name) return &e.second;
  }
  return nullptr;
}

const Rational& PayoffPoint::at(std::string_view name) const {
  const Rational* r = find(name);
  if (r == nullptr) throw MissingAssignment(std::string(name));
  return *r;
}

std::string PayoffPoint::str() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k > 0) os << ',';
    os << entries_[k].first << '=' << entries_[k].second;
  }
  return os.str();
}

bool operator==(const PayoffPoint& a, const PayoffPoint& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [k, v] : a.entries_) {
    const Rational* o = b.find(k);
    if (o == nullptr || *o != v) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ConstraintSystem

std::size_t ConstraintSystem::add_variable(Variable v) {
  if (index_.contains(v.name)) throw InputError("duplicate variable " + v.name);
  if (v.is_integer()) {
    if (v.lo) v.lo = Rational(v.lo->ceil());
    if (v.hi) v.hi = Rational(v.hi->floor());
  }
  std::size_t idx = vars_.size();
  index_.emplace(v.name, idx);
  vars_.push_back(std::move(v));
  return idx;
}

void ConstraintSystem::add_row(LinearRow row) {
  for (const auto& t : row.terms) {
    if (t.var >= vars_.size()) throw ScopeMismatch("row references a variable outside the scope");
  }
  rows_.push_back(std::move(row));
}

std::vector<std::size_t> ConstraintSystem::append(const ConstraintSystem& other) {
  std::vector<std::size_t> map;
  map.reserve(other.vars_.size());
  for (const auto& v : other.vars_) map.push_back(add_variable(v));
  for (const auto& r : other.rows_) {
    LinearRow copy = r;
    for (auto& t : copy.terms) t.var = map[t.var];
    rows_.push_back(std::move(copy));
  }
  return map;
}

std::optional<std::size_t> ConstraintSystem::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ConstraintSystem::index_of(std::string_view name) const {
  auto idx = find(name);
  if (!idx) throw ScopeMismatch("unknown variable " + std::string(name));
  return *idx;
}

bool ConstraintSystem::has_integer_variables() const {
  return std::any_of(vars_.begin(), vars_.end(), [](const Variable& v) { return v.is_integer(); });
}

std::vector<LinearRow> ConstraintSystem::rows_with_bounds() const {
  std::vector<LinearRow> out = rows_;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].lo) out.push_back(LinearRow{{Term{i, Rational(-1)}}, Relation::LE, -*vars_[i].lo});
    if (vars_[i].hi) out.push_back(LinearRow{{Term{i, Rational(1)}}, Relation::LE, *vars_[i].hi});
  }
  return out;
}

ConstraintSystem ConstraintSystem::renamed(const std::vector<std::string>& names) const {
  if (names.size() != vars_.size()) throw LengthMismatch("rename needs one name per variable");
  ConstraintSystem out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    Variable v = vars_[i];
    v.name = names[i];
    out.add_variable(std::move(v));
  }
  out.rows_ = rows_;
  return out;
}

void ConstraintSystem::set_bounds(std::size_t var, std::optional<Rational> lo,
                                  std::optional<Rational> hi) {
  Variable& v = vars_.at(var);
  v.lo = std::move(lo);
  v.hi = std::move(hi);
  if (v.is_integer()) {
    if (v.lo) v.lo = Rational(v.lo->ceil());
    if (v.hi) v.hi = Rational(v.hi->floor());
  }
}

void ConstraintSystem::set_domain(std::size_t var, Domain domain) {
  vars_.at(var).domain = domain;
  set_bounds(var, vars_[var].lo, vars_[var].hi);
}

ConstraintSystem rename_for_coalition(const ConstraintSystem& lc, Coalition s, std::string_view tag) {
  std::vector<std::string> names;
  names.reserve(lc.num_variables());
  for (const auto& v : lc.variables()) {
    if (v.player && s.contains(*v.player) && v.name.starts_with("x_")) {
      names.push_back(std::string(tag) + v.name.substr(1));
    } else {
      names.push_back(v.name + "@" + std::string(tag));
    }
  }
  return lc.renamed(names);
}

ConstraintSystem substitute(const ConstraintSystem& lc,
                            const std::vector<std::optional<Rational>>& by_index) {
  if (by_index.size() != lc.num_variables()) throw LengthMismatch("substitution size");
  ConstraintSystem out;
  std::vector<std::size_t> map(lc.num_variables(), 0);
  bool out_of_domain = false;
  for (std::size_t i = 0; i < lc.num_variables(); ++i) {
    const Variable& v = lc.variable(i);
    if (by_index[i]) {
      const Rational& val = *by_index[i];
      if ((v.is_integer() && !val.is_integer()) || (v.lo && val < *v.lo) || (v.hi && val > *v.hi)) {
        out_of_domain = true;
      }
    } else {
      map[i] = out.add_variable(v);
    }
  }
  for (const auto& r : lc.rows()) {
    LinearRow nr;
    nr.rel = r.rel;
    nr.rhs = r.rhs;
    for (const auto& t : r.terms) {
      if (by_index[t.var]) {
        nr.rhs -= t.coef * *by_index[t.var];
      } else {
        nr.terms.push_back(Term{map[t.var], t.coef});
      }
    }
    out.add_row(std::move(nr));
  }
  if (out_of_domain) out.add_row(LinearRow::falsity());
  return out;
}

ConstraintSystem substitute(const ConstraintSystem& lc, const PayoffPoint& partial) {
  std::vector<std::optional<Rational>> by_index(lc.num_variables());
  for (const auto& [name, value] : partial.entries()) {
    if (auto idx = lc.find(name)) by_index[*idx] = value;
  }
  return substitute(lc, by_index);
}

std::vector<Rational> values_in_scope(const ConstraintSystem& lc, const PayoffPoint& full) {
  std::vector<Rational> values;
  values.reserve(lc.num_variables());
  for (const auto& v : lc.variables()) values.push_back(full.at(v.name));
  return values;
}

bool satisfies(const ConstraintSystem& lc, const PayoffPoint& full) {
  std::vector<Rational> values = values_in_scope(lc, full);
  for (std::size_t i = 0; i < lc.num_variables(); ++i) {
    const Variable& v = lc.variable(i);
    if (v.is_integer() && !values[i].is_integer()) return false;
    if (v.lo && values[i] < *v.lo) return false;
    if (v.hi && values[i] > *v.hi) return false;
  }
  return std::all_of(lc.rows().begin(), lc.rows().end(),
                     [&](const LinearRow& r) { return r.holds(values); });
}

}  // namespace cgame
