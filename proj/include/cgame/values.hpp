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
#ifndef CGAME_VALUES_HPP_
#define CGAME_VALUES_HPP_

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgame/game.hpp"

namespace cgame {

// A rational extended with -inf and +inf. `attained` records whether a
// supremum is reached.
struct ExtendedRational {
  enum class Kind { NegInfinity, Finite, PosInfinity };
  Kind kind = Kind::Finite;
  Rational value;
  bool attained = true;

  static ExtendedRational neg_infinity() { return {Kind::NegInfinity, Rational(), false}; }
  static ExtendedRational pos_infinity() { return {Kind::PosInfinity, Rational(), false}; }
  static ExtendedRational finite(Rational v, bool attained = true) { return {Kind::Finite, std::move(v), attained}; }

  bool is_finite() const { return kind == Kind::Finite; }
  std::string str() const;

  // Order and equality ignore `attained`.
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);
};

using ThetaVector = std::vector<ExtendedRational>;

// sup { t : x_S + (t/|S|)·1 in V_LC(S) }.
ExtendedRational excess_kalai(const ConstrainedGame& g, Coalition s, const PayoffPoint& x,
                              const SolverOptions& opts = {});

// Excesses of all nonempty coalitions, non-increasing; ties by bitmask.
ThetaVector theta(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts = {});

// Throws LengthMismatch on vectors of different length.
bool lex_less(const ThetaVector& a, const ThetaVector& b);

// TU worth the point solutions run on: v itself for an unconstrained game,
// the reduced v' otherwise. Throws NotTUReducible.
WorthFunction tu_worth(const ConstrainedGame& g, const SolverOptions& opts = {});

// Nucleolus of the TU game (n players, worth w), by iterated LPs. Throws
// EmptyImputationSet.
std::vector<Rational> tu_nucleolus(std::size_t n, const WorthFunction& w, const SolverOptions& opts = {});
PayoffPoint nucleolus(const ConstrainedGame& g, const SolverOptions& opts = {});

// max over S with i in S and j not in S of w(S) - x(S).
Rational surplus(std::size_t n, const WorthFunction& w, const std::vector<Rational>& x, std::size_t i,
                 std::size_t j);

struct KernelCheck {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // (i, j) with s_ij > s_ji, x_j > w({j})
};

KernelCheck kernel_check(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts = {});

std::vector<Rational> tu_shapley(std::size_t n, const WorthFunction& w);
PayoffPoint shapley(const ConstrainedGame& g, const SolverOptions& opts = {});

struct ShapleyNTUResult {
  enum class Kind { Accepted, NotConsequence, GameUndefined, ValueMismatch };
  Kind kind = Kind::Accepted;
  Coalition coalition;     // GameUndefined
  std::size_t player = 0;  // ValueMismatch

  bool accepted() const { return kind == Kind::Accepted; }
};

// Checks that x is the Shapley NTU value of g for the weights lambda. The
// rescaled game is checked first since it does not depend on x.
ShapleyNTUResult shapley_ntu_check(const ConstrainedGame& g, const PayoffPoint& x,
                                   const std::vector<Rational>& lambda, const SolverOptions& opts = {});

}  // namespace cgame

#endif  // CGAME_VALUES_HPP_
