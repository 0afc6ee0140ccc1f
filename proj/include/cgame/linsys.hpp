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
#ifndef CGAME_LINSYS_HPP_
#define CGAME_LINSYS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cgame/coalition.hpp"
#include "cgame/rational.hpp"

namespace cgame {

enum class Relation { LE, LT, EQ };
// Input-side relations; GE and GT disappear in normalize().
enum class RawRelation { LE, LT, EQ, GE, GT };

enum class Domain { Real, Integer };

std::string_view to_string(Relation r);

// Payoff variable name for a player id.
std::string player_var_name(std::string_view player_id);

struct Variable {
  std::string name;
  std::optional<std::size_t> player;  // set for player-payoff variables
  Domain domain = Domain::Real;
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  bool is_player() const { return player.has_value(); }
  bool is_integer() const { return domain == Domain::Integer; }

  static Variable real(std::string name) { return Variable{std::move(name), std::nullopt, Domain::Real, std::nullopt, std::nullopt}; }
  static Variable integer(std::string name, std::optional<Rational> lo = std::nullopt,
                          std::optional<Rational> hi = std::nullopt);
  static Variable payoff(std::string_view player_id, std::size_t index,
                         Domain domain = Domain::Real);
};

struct Term {
  std::size_t var;
  Rational coef;
};

// sum(coef * var) rel rhs. Terms are sorted by variable index with nonzero
// coefficients; a row without terms is a constant truth/falsity sentinel.
struct LinearRow {
  std::vector<Term> terms;
  Relation rel = Relation::LE;
  Rational rhs;

  bool is_constant() const { return terms.empty(); }
  // Truth value of a constant row.
  bool constant_holds() const;
  Rational coefficient(std::size_t var) const;
  Rational evaluate(const std::vector<Rational>& values) const;
  bool holds(const std::vector<Rational>& values) const;

  static LinearRow falsity();

  friend bool operator==(const LinearRow& a, const LinearRow& b);
};

// Row before normalization: terms may repeat or be zero, any relation.
struct RawRow {
  std::vector<Term> terms;
  RawRelation rel = RawRelation::LE;
  Rational rhs;
};

LinearRow normalize(const RawRow& raw);
LinearRow normalize(const LinearRow& row);
LinearRow make_row(std::vector<Term> terms, RawRelation rel, Rational rhs);
bool holds(const RawRow& raw, const std::vector<Rational>& values);

// Exact rational assignment keyed by variable name, in insertion order.
class PayoffPoint {
 public:
  PayoffPoint() = default;
  PayoffPoint(std::initializer_list<std::pair<std::string, Rational>> init);

  void set(const std::string& name, Rational value);
  const Rational* find(std::string_view name) const;
  const Rational& at(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<std::string, Rational>>& entries() const { return entries_; }

  std::string str() const;

  friend bool operator==(const PayoffPoint& a, const PayoffPoint& b);

 private:
  std::vector<std::pair<std::string, Rational>> entries_;
};

class ConstraintSystem {
 public:
  ConstraintSystem() = default;

  // Throws InputError on duplicate names.
  std::size_t add_variable(Variable v);
  void add_row(LinearRow row);
  void add_row(const RawRow& raw) { add_row(normalize(raw)); }
  void add_row(std::vector<Term> terms, RawRelation rel, Rational rhs) {
    add_row(make_row(std::move(terms), rel, std::move(rhs)));
  }

  // Appends every variable and row of `other` (names must not clash) and
  // returns where each of its variables landed.
  std::vector<std::size_t> append(const ConstraintSystem& other);

  const std::vector<Variable>& variables() const { return vars_; }
  const Variable& variable(std::size_t i) const { return vars_[i]; }
  const std::vector<LinearRow>& rows() const { return rows_; }
  std::size_t num_variables() const { return vars_.size(); }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;
  bool has_integer_variables() const;

  // Rows plus one row per declared variable bound.
  std::vector<LinearRow> rows_with_bounds() const;

  // Same rows, variables renamed positionally. Names must stay distinct.
  ConstraintSystem renamed(const std::vector<std::string>& names) const;

  void set_bounds(std::size_t var, std::optional<Rational> lo, std::optional<Rational> hi);
  void set_domain(std::size_t var, Domain domain);

 private:
  std::vector<Variable> vars_;
  std::vector<LinearRow> rows_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Renames lc for coalition S: payoff variables of players in S become
// "<tag>_<id>", every other variable v becomes "v@<tag>".
ConstraintSystem rename_for_coalition(const ConstraintSystem& lc, Coalition s,
                                      std::string_view tag);

// Residual system over unassigned variables (original order kept). Rows that
// become constant stay as sentinels; a non-integral value for an integer
// variable, or a value outside declared bounds, adds a falsity sentinel.
// Names in `partial` that are not in scope are ignored.
ConstraintSystem substitute(const ConstraintSystem& lc, const PayoffPoint& partial);
ConstraintSystem substitute(const ConstraintSystem& lc,
                            const std::vector<std::optional<Rational>>& by_index);

// Throws MissingAssignment if a scope variable has no value.
bool satisfies(const ConstraintSystem& lc, const PayoffPoint& full);

// Dense value vector in scope order; throws MissingAssignment.
std::vector<Rational> values_in_scope(const ConstraintSystem& lc, const PayoffPoint& full);

}  // namespace cgame

#endif  // CGAME_LINSYS_HPP_
