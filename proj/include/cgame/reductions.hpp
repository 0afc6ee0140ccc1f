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
#ifndef CGAME_REDUCTIONS_HPP_
#define CGAME_REDUCTIONS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgame/game.hpp"

namespace cgame {

struct BoolExpr {
  enum class Kind { Const, Var, Not, And, Or };
  Kind kind = Kind::Const;
  bool value = false;            // Const
  std::string name;              // Var
  std::vector<BoolExpr> args;    // Not (one), And/Or (any number)

  // Printed in the QBF matrix syntax: ! & | with full parentheses.
  std::string str() const;
  friend bool operator==(const BoolExpr& a, const BoolExpr& b) = default;
};

BoolExpr bconst(bool value);
BoolExpr bvar(std::string name);
BoolExpr bnot(BoolExpr e);
BoolExpr band(std::vector<BoolExpr> args);
BoolExpr bor(std::vector<BoolExpr> args);

// Variables in order of first occurrence.
std::vector<std::string> vars(const BoolExpr& e);

using Assignment = std::map<std::string, bool>;

// Throws UnboundVariable.
bool eval_bool(const BoolExpr& e, const Assignment& a);
// Brute force; throws TooManyVariables above 20 variables.
bool satisfiable(const BoolExpr& e);

enum class Quantifier { Exists, Forall };

struct QuantBlock {
  Quantifier q = Quantifier::Exists;
  std::vector<std::string> vars;
};

struct Qbf {
  std::vector<QuantBlock> prefix;
  BoolExpr matrix;

  std::vector<std::string> all_vars() const;
  std::string str() const;  // QBF file syntax
};

// Checks alternation, disjoint nonempty blocks and that the matrix only uses
// quantified variables. Throws BadPrefix or UnboundVariable.
void validate(const Qbf& q);
// Throws TooManyVariables above 20 variables.
bool qbf_valid(const Qbf& q);

// A game built from a formula, the point to check (for the checking
// reductions) and the equivalence it is built to exhibit.
struct ReductionInstance {
  ConstrainedGame game;
  std::optional<PayoffPoint> point;
  std::string claim;
};

// Literal players are named after the variable, negated ones "neg_<var>".
std::string negated_player(const std::string& var);

ReductionInstance build_core_check(const BoolExpr& phi);
// phi2 must be a conjunction of three-literal clauses over variables disjoint
// from phi's; throws NotThreeCnf otherwise.
ReductionInstance build_core_check_dp(const BoolExpr& phi, const BoolExpr& phi2);
// Prefix forall/exists.
ReductionInstance build_bargaining_check(const Qbf& h);
// Prefix exists/forall.
ReductionInstance build_core_nonempty(const Qbf& f);
// Prefix exists/forall/exists; throws PlayerLimitExceeded above max_players.
ReductionInstance build_bs_nonempty(const Qbf& p, std::size_t max_players = 8);

// Fixed formula batteries used by the equivalence tests and the acceptance
// run. Variables are X1..X<k> (formulas) or one variable per block named
// after its position: X1 (exists first), Y1 (forall), Z1 (trailing exists).
std::vector<BoolExpr> template_formulas();
std::vector<std::pair<BoolExpr, BoolExpr>> template_formula_pairs();
// Every template matrix over two variables under the given two-block prefix.
std::vector<Qbf> template_qbfs(Quantifier first, Quantifier second);

}  // namespace cgame

#endif  // CGAME_REDUCTIONS_HPP_
