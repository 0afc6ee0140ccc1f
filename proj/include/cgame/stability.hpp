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
#ifndef CGAME_STABILITY_HPP_
#define CGAME_STABILITY_HPP_

#include <optional>
#include <string_view>

#include "cgame/game.hpp"

namespace cgame {

enum class ImputationFailure { None, Consequence, Efficiency, Rationality };
std::string_view to_string(ImputationFailure f);

struct ImputationCheck {
  ImputationFailure failure = ImputationFailure::None;
  std::optional<std::size_t> player;  // the irrational player, if any

  bool ok() const { return failure == ImputationFailure::None; }
};

bool is_efficient(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts = {});
bool is_individually_rational(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts = {});
ImputationCheck check_imputation(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts = {});
inline bool is_imputation(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts = {}) {
  return check_imputation(g, x, opts).ok();
}

// X(G|LC) over the player variables in player order.
SemilinearSet imputation_set(const ConstrainedGame& g, const SolverOptions& opts = {});

struct CoreVerdict {
  enum class Kind { Member, NotImputation, Blocked };
  Kind kind = Kind::Member;
  ImputationFailure failure = ImputationFailure::None;
  Coalition coalition;  // Blocked
  PayoffPoint y;        // Blocked: payoffs of the coalition

  bool member() const { return kind == Kind::Member; }
};

CoreVerdict core_check(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts = {});

struct NonemptinessResult {
  std::optional<PayoffPoint> witness;  // nullopt means empty
  bool empty() const { return !witness; }
};

NonemptinessResult core_nonempty(const ConstrainedGame& g, const SolverOptions& opts = {});

// Objection of player i against j through S, with y the payoffs of S.
struct Objection {
  std::size_t i = 0;
  std::size_t j = 0;
  Coalition coalition;
  PayoffPoint y;
};

// Requires x to be an imputation.
std::optional<Objection> justified_objection(const ConstrainedGame& g, const PayoffPoint& x,
                                             const SolverOptions& opts = {});

// Points y over S (player order) that i can use against j with no
// counterobjection; empty when (i, j, S) yields no justified objection.
SemilinearSet justified_objections(const ConstrainedGame& g, const PayoffPoint& x, std::size_t i, std::size_t j,
                                   Coalition s, const SolverOptions& opts = {});

struct BargainingVerdict {
  enum class Kind { Member, NotImputation, Justified };
  Kind kind = Kind::Member;
  ImputationFailure failure = ImputationFailure::None;
  Objection objection;  // Justified

  bool member() const { return kind == Kind::Member; }
};

BargainingVerdict bargaining_check(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts = {});
NonemptinessResult bargaining_nonempty(const ConstrainedGame& g, const SolverOptions& opts = {});

}  // namespace cgame

#endif  // CGAME_STABILITY_HPP_
