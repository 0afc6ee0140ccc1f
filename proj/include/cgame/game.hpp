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
#ifndef CGAME_GAME_HPP_
#define CGAME_GAME_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cgame/coalition.hpp"
#include "cgame/linsys.hpp"
#include "cgame/options.hpp"
#include "cgame/rational.hpp"
#include "cgame/solver.hpp"

namespace cgame {

// v: 2^N -> Q, either tabulated (with a default) or computed by an oracle.
// v(empty) is always 0.
class WorthFunction {
 public:
  using Oracle = std::function<Rational(Coalition)>;

  WorthFunction() = default;
  static WorthFunction table(std::map<std::uint64_t, Rational> entries, Rational fallback = Rational());
  static WorthFunction oracle(std::string description, Oracle f);

  Rational operator()(Coalition s) const;

  bool is_table() const { return !oracle_; }
  const std::map<std::uint64_t, Rational>& entries() const { return entries_; }
  const Rational& fallback() const { return fallback_; }
  const std::string& description() const { return description_; }

 private:
  std::map<std::uint64_t, Rational> entries_;
  Rational fallback_;
  std::shared_ptr<const Oracle> oracle_;
  std::string description_;
};

// TU game <N, v> together with a constraint system. The first n variables of
// `lc` are the player payoff variables x_<id>, in player order.
class ConstrainedGame {
 public:
  ConstrainedGame() = default;
  ConstrainedGame(std::vector<std::string> players, WorthFunction worth);

  const std::vector<std::string>& players() const { return players_; }
  std::size_t n() const { return players_.size(); }
  Coalition grand() const { return Coalition::grand(players_.size()); }
  const WorthFunction& worth_function() const { return worth_; }
  Rational worth(Coalition s) const { return worth_(s); }
  const ConstraintSystem& lc() const { return lc_; }
  ConstraintSystem& lc() { return lc_; }
  std::optional<std::size_t> player_index(std::string_view id) const;
  std::string var(std::size_t player) const { return player_var_name(players_[player]); }

  // True when the constraint system adds nothing to the TU game.
  bool is_tu() const;

  ConstrainedGame with_worth(WorthFunction w) const;
  ConstrainedGame without_constraints() const;

 private:
  std::vector<std::string> players_;
  WorthFunction worth_;
  ConstraintSystem lc_;
};

// Coefficient-one terms over the players of S.
std::vector<Term> coalition_sum(Coalition s);
Rational coalition_sum(Coalition s, const std::vector<Rational>& x);

// Player payoffs of a point in player order; throws MissingAssignment.
std::vector<Rational> player_values(const ConstrainedGame& g, const PayoffPoint& x);
PayoffPoint player_point(const ConstrainedGame& g, const std::vector<Rational>& x);
// Point over the players of S (values indexed by player).
PayoffPoint coalition_point(const ConstrainedGame& g, Coalition s, const std::vector<Rational>& x);

// v(S) for every S in bitmask order.
std::vector<Rational> worth_table(const ConstrainedGame& g);

// LC plus x(S) <= v(S); V_LC(S) is its projection onto the payoffs of S.
ConstraintSystem consequence_system(const ConstrainedGame& g, Coalition s);
// V_LC(S) over the player variables of S in player order.
SemilinearSet consequence_set(const ConstrainedGame& g, Coalition s, const SolverOptions& opts = {});
// y must assign exactly the players of S.
bool is_consequence(const ConstrainedGame& g, Coalition s, const PayoffPoint& y,
                    const SolverOptions& opts = {});

bool is_cohesive(const ConstrainedGame& g, const SolverOptions& opts = {});

// "{a,b}" using player ids.
std::string coalition_label(const ConstrainedGame& g, Coalition s);

struct TUReduction {
  bool reducible = false;
  WorthFunction vprime;       // when reducible
  Coalition failing;          // when not
  std::string reason;
};

TUReduction tu_reduce(const ConstrainedGame& g, const SolverOptions& opts = {});

// Builtin games.
ConstrainedGame tu_game(std::vector<std::string> players, WorthFunction worth);
// Players "1".."n".
std::vector<std::string> numbered_players(std::size_t n);

// Constrains a TU game so that its imputations are exactly `points`
// (each given in player order); throws SpecInvalid if some point is not an
// imputation of the TU game.
ConstrainedGame finite_imputations_game(const ConstrainedGame& base,
                                        const std::vector<std::vector<Rational>>& points);
// n+1 players; 0/1 integer payoffs for the first n, 2^n imputations.
ConstrainedGame hypercube_game(std::size_t n);
// v(S) = min(sum alpha, sum beta); nonnegative integer payoffs.
ConstrainedGame producer_game(const std::vector<Rational>& alpha, const std::vector<Rational>& beta);
// costs[i][j], skills[i][j] for agent i and task j; com[S-1] for every
// nonempty S in bitmask order.
ConstrainedGame service_game(const std::vector<std::vector<Rational>>& costs,
                             const std::vector<std::vector<int>>& skills, const std::vector<Rational>& com);
// Three brothers splitting a coin box (amounts in cents).
ConstrainedGame piggybank_game();

}  // namespace cgame

#endif  // CGAME_GAME_HPP_
