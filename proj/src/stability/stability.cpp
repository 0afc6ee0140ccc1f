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
#include "cgame/stability.hpp"

#include <map>
#include <stdexcept>

#include "cgame/errors.hpp"

namespace cgame {

std::string_view to_string(ImputationFailure f) {
  switch (f) {
    case ImputationFailure::None: return "none";
    case ImputationFailure::Consequence: return "consequence";
    case ImputationFailure::Efficiency: return "efficiency";
    case ImputationFailure::Rationality: return "rationality";
  }
  return "?";
}

namespace {

const Rational kOne(1);

std::vector<Coalition> nonempty_coalitions(std::size_t n) {
  std::vector<Coalition> out;
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) out.push_back(Coalition(b));
  return out;
}

// Appends LC renamed for S (players of S become "<tag>_<id>") and returns the
// index of every player's renamed payoff variable.
std::vector<std::size_t> append_renamed(ConstraintSystem& sys, const ConstrainedGame& g, Coalition s,
                                        std::string_view tag) {
  auto map = sys.append(rename_for_coalition(g.lc(), s, tag));
  map.resize(g.n());
  return map;
}

// Fresh unconstrained real variables named "<prefix>_<id>" for the players
// of S; returns their indices by player.
std::vector<std::size_t> add_fresh(ConstraintSystem& sys, const ConstrainedGame& g, Coalition s,
                                   std::string_view prefix) {
  std::vector<std::size_t> idx(g.n(), 0);
  for (auto k : s.members()) {
    idx[k] = sys.add_variable(Variable::real(std::string(prefix) + "_" + g.players()[k]));
  }
  return idx;
}

std::vector<Term> sum_terms(const std::vector<std::size_t>& idx, Coalition s) {
  std::vector<Term> out;
  for (auto k : s.members()) out.push_back(Term{idx[k], kOne});
  return out;
}

// a - b rel 0 for variables a, b.
void add_diff(ConstraintSystem& sys, std::size_t a, std::size_t b, RawRelation rel) {
  sys.add_row({Term{a, kOne}, Term{b, -kOne}}, rel, Rational());
}

// Candidate points x_N dominated on S: some y in V_LC(S) with y_k > x_k for
// every k in S. Scope: x_N in player order.
SemilinearSet dominated_set(const ConstrainedGame& g, Coalition s, const SolverOptions& opts) {
  ConstraintSystem sys;
  auto x = add_fresh(sys, g, g.grand(), "x");
  auto y = append_renamed(sys, g, s, "y");
  sys.add_row(sum_terms(y, s), RawRelation::LE, g.worth(s));
  for (auto k : s.members()) add_diff(sys, y[k], x[k], RawRelation::GT);
  return to_semilinear(sys, x, opts);
}

// Lower bound of x(S) over a set; nullopt when the set is empty or unbounded
// below.
std::optional<LPOutcome> min_sum(const SemilinearSet& set, Coalition s, const SolverOptions& opts) {
  auto r = optimize_over(set, coalition_sum(s), Sense::Min, opts);
  if (r.kind != LPOutcome::Kind::Optimal) return std::nullopt;
  return r;
}

PayoffPoint point_of(const ConstrainedGame& g, Coalition s, const std::vector<Rational>& local) {
  PayoffPoint p;
  auto m = s.members();
  for (std::size_t k = 0; k < m.size(); ++k) p.set(g.var(m[k]), local[k]);
  return p;
}

}  // namespace

bool is_efficient(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts) {
  const auto xs = player_values(g, x);
  ConstraintSystem sys = consequence_system(g, g.grand());
  for (std::size_t i = 0; i < g.n(); ++i) sys.add_row({Term{i, kOne}}, RawRelation::GT, xs[i]);
  return milp_feasible(sys, opts).infeasible();
}

namespace {

std::optional<std::size_t> irrational_player(const ConstrainedGame& g, const std::vector<Rational>& xs,
                                             const SolverOptions& opts) {
  for (std::size_t i = 0; i < g.n(); ++i) {
    ConstraintSystem sys = consequence_system(g, Coalition::singleton(i));
    sys.add_row({Term{i, kOne}}, RawRelation::GT, xs[i]);
    if (milp_feasible(sys, opts).feasible()) return i;
  }
  return std::nullopt;
}

}  // namespace

bool is_individually_rational(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts) {
  return !irrational_player(g, player_values(g, x), opts).has_value();
}

ImputationCheck check_imputation(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts) {
  ImputationCheck out;
  const auto xs = player_values(g, x);
  if (!is_consequence(g, g.grand(), player_point(g, xs), opts)) {
    out.failure = ImputationFailure::Consequence;
  } else if (!is_efficient(g, x, opts)) {
    out.failure = ImputationFailure::Efficiency;
  } else if (auto i = irrational_player(g, xs, opts)) {
    out.failure = ImputationFailure::Rationality;
    out.player = i;
  }
  return out;
}

SemilinearSet imputation_set(const ConstrainedGame& g, const SolverOptions& opts) {
  std::vector<std::size_t> players;
  for (std::size_t i = 0; i < g.n(); ++i) players.push_back(i);
  SemilinearSet x = to_semilinear(consequence_system(g, g.grand()), players, opts);
  for (std::size_t i = 0; i < g.n() && !is_empty(x, opts); ++i) {
    x = difference(x, dominated_set(g, Coalition::singleton(i), opts), opts);
  }
  if (!is_empty(x, opts)) x = difference(x, dominated_set(g, g.grand(), opts), opts);
  return x;
}

CoreVerdict core_check(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts) {
  CoreVerdict out;
  auto imp = check_imputation(g, x, opts);
  if (!imp.ok()) {
    out.kind = CoreVerdict::Kind::NotImputation;
    out.failure = imp.failure;
    return out;
  }
  const auto xs = player_values(g, x);
  for (Coalition s : nonempty_coalitions(g.n())) {
    // An objection needs v(S) >= y(S) > x(S).
    if (g.worth(s) <= coalition_sum(s, xs)) continue;
    ConstraintSystem sys = consequence_system(g, s);
    for (auto k : s.members()) sys.add_row({Term{k, kOne}}, RawRelation::GT, xs[k]);
    auto r = milp_feasible(sys, opts);
    if (r.infeasible()) continue;
    out.kind = CoreVerdict::Kind::Blocked;
    out.coalition = s;
    for (auto k : s.members()) out.y.set(g.var(k), (*r.witness)[k]);
    return out;
  }
  return out;
}

NonemptinessResult core_nonempty(const ConstrainedGame& g, const SolverOptions& opts) {
  SemilinearSet core = imputation_set(g, opts);
  for (Coalition s : nonempty_coalitions(g.n())) {
    if (s == g.grand()) continue;  // already removed with the inefficient points
    if (is_empty(core, opts)) break;
    auto lo = min_sum(core, s, opts);
    if (lo && lo->value >= g.worth(s)) continue;
    core = difference(core, dominated_set(g, s, opts), opts);
  }
  NonemptinessResult out;
  auto w = witness(core, opts);
  if (!w) return out;
  out.witness = player_point(g, *w);
  if (!core_check(g, *out.witness, opts).member()) {
    throw std::logic_error("core witness " + out.witness->str() + " failed re-validation");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bargaining set

namespace {

// Objection and counterobjection sets over y_S for a fixed imputation, cached
// by coalition.
class ObjectionSearch {
 public:
  ObjectionSearch(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts)
      : g_(g), xs_(player_values(g, x)), opts_(opts) {}

  SemilinearSet justified(std::size_t i, std::size_t j, Coalition s) {
    if (!s.contains(i) || s.contains(j) || i == j) {
      throw InputError("objection coalition must contain the objecting player and not the other");
    }
    if (g_.worth(s) <= coalition_sum(s, xs_)) return SemilinearSet(scope(s));
    SemilinearSet rem = objections(s);
    for (Coalition t : nonempty_coalitions(g_.n())) {
      if (!t.contains(j) || t.contains(i)) continue;
      if (is_empty(rem, opts_)) break;
      // A counterobjection needs v(T) >= z(T) >= x(T), strictly when T meets S.
      const Rational vt = g_.worth(t), xt = coalition_sum(t, xs_);
      if (vt < xt || (vt == xt && !(t & s).empty())) continue;
      rem = difference(rem, counters(s, t), opts_);
    }
    return rem;
  }

  std::vector<std::string> scope(Coalition s) const {
    std::vector<std::string> out;
    for (auto k : s.members()) out.push_back("y_" + g_.players()[k]);
    return out;
  }

 private:
  const SemilinearSet& objections(Coalition s) {
    auto it = obj_.find(s.bits());
    if (it != obj_.end()) return it->second;
    ConstraintSystem sys;
    auto y = append_renamed(sys, g_, s, "y");
    sys.add_row(sum_terms(y, s), RawRelation::LE, g_.worth(s));
    std::vector<std::size_t> keep;
    for (auto k : s.members()) {
      sys.add_row({Term{y[k], kOne}}, RawRelation::GT, xs_[k]);
      keep.push_back(y[k]);
    }
    return obj_.emplace(s.bits(), to_semilinear(sys, keep, opts_)).first->second;
  }

  const SemilinearSet& counters(Coalition s, Coalition t) {
    auto key = std::make_pair(s.bits(), t.bits());
    auto it = counter_.find(key);
    if (it != counter_.end()) return it->second;
    ConstraintSystem sys;
    auto y = add_fresh(sys, g_, s, "y");
    auto z = append_renamed(sys, g_, t, "z");
    sys.add_row(sum_terms(z, t), RawRelation::LE, g_.worth(t));
    for (auto k : t.members()) {
      if (s.contains(k)) {
        add_diff(sys, z[k], y[k], RawRelation::GE);
      } else {
        sys.add_row({Term{z[k], kOne}}, RawRelation::GE, xs_[k]);
      }
    }
    std::vector<std::size_t> keep;
    for (auto k : s.members()) keep.push_back(y[k]);
    return counter_.emplace(key, to_semilinear(sys, keep, opts_)).first->second;
  }

  const ConstrainedGame& g_;
  std::vector<Rational> xs_;
  const SolverOptions& opts_;
  std::map<std::uint64_t, SemilinearSet> obj_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, SemilinearSet> counter_;
};

}  // namespace

SemilinearSet justified_objections(const ConstrainedGame& g, const PayoffPoint& x, std::size_t i, std::size_t j,
                                   Coalition s, const SolverOptions& opts) {
  ObjectionSearch search(g, x, opts);
  return search.justified(i, j, s);
}

std::optional<Objection> justified_objection(const ConstrainedGame& g, const PayoffPoint& x,
                                             const SolverOptions& opts) {
  ObjectionSearch search(g, x, opts);
  const auto all = nonempty_coalitions(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) {
    for (std::size_t j = 0; j < g.n(); ++j) {
      if (i == j) continue;
      for (Coalition s : all) {
        if (!s.contains(i) || s.contains(j)) continue;
        auto w = witness(search.justified(i, j, s), opts);
        if (!w) continue;
        return Objection{i, j, s, point_of(g, s, *w)};
      }
    }
  }
  return std::nullopt;
}

BargainingVerdict bargaining_check(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts) {
  BargainingVerdict out;
  auto imp = check_imputation(g, x, opts);
  if (!imp.ok()) {
    out.kind = BargainingVerdict::Kind::NotImputation;
    out.failure = imp.failure;
    return out;
  }
  if (auto obj = justified_objection(g, x, opts)) {
    out.kind = BargainingVerdict::Kind::Justified;
    out.objection = std::move(*obj);
  }
  return out;
}

namespace {

// Embeds a set over x_N into the scope x_N followed by extra variables.
SemilinearSet lift(const SemilinearSet& s, const std::vector<std::string>& scope) {
  SemilinearSet out(scope);
  for (Cell c : s.cells()) {
    c.dim = scope.size();
    out.add_cell(std::move(c));
  }
  return out;
}

}  // namespace

NonemptinessResult bargaining_nonempty(const ConstrainedGame& g, const SolverOptions& opts) {
  if (g.n() > opts.max_bargaining_players) {
    throw PlayerLimitExceeded("bargaining-set non-emptiness is limited to " +
                              std::to_string(opts.max_bargaining_players) + " players");
  }
  const SemilinearSet imputations = imputation_set(g, opts);
  SemilinearSet remaining = imputations;
  const auto all = nonempty_coalitions(g.n());

  // Whether some imputation can have an objection through S / a
  // counterobjection through T; sound filters only.
  auto may_object = [&](Coalition s) {
    auto lo = min_sum(imputations, s, opts);
    return !lo || lo->value < g.worth(s);
  };
  auto may_counter = [&](Coalition s, Coalition t) {
    auto lo = min_sum(imputations, t, opts);
    if (!lo) return true;
    if (lo->value != g.worth(t)) return lo->value < g.worth(t);
    return lo->attained && (s & t).empty();
  };

  std::map<std::uint64_t, SemilinearSet> obj_cache;
  std::map<std::pair<std::uint64_t, std::uint64_t>, SemilinearSet> counter_cache;

  auto joint_scope = [&](Coalition s) {
    std::vector<std::string> scope;
    for (std::size_t k = 0; k < g.n(); ++k) scope.push_back(g.var(k));
    for (auto k : s.members()) scope.push_back("y_" + g.players()[k]);
    return scope;
  };
  auto objections = [&](Coalition s) -> const SemilinearSet& {
    auto it = obj_cache.find(s.bits());
    if (it != obj_cache.end()) return it->second;
    ConstraintSystem sys;
    auto x = add_fresh(sys, g, g.grand(), "x");
    auto y = append_renamed(sys, g, s, "y");
    sys.add_row(sum_terms(y, s), RawRelation::LE, g.worth(s));
    std::vector<std::size_t> keep = x;
    for (auto k : s.members()) {
      add_diff(sys, y[k], x[k], RawRelation::GT);
      keep.push_back(y[k]);
    }
    SemilinearSet set = intersect(to_semilinear(sys, keep, opts), lift(imputations, joint_scope(s)), opts);
    return obj_cache.emplace(s.bits(), std::move(set)).first->second;
  };
  auto counters = [&](Coalition s, Coalition t) -> const SemilinearSet& {
    auto key = std::make_pair(s.bits(), t.bits());
    auto it = counter_cache.find(key);
    if (it != counter_cache.end()) return it->second;
    ConstraintSystem sys;
    auto x = add_fresh(sys, g, g.grand(), "x");
    auto y = add_fresh(sys, g, s, "y");
    auto z = append_renamed(sys, g, t, "z");
    sys.add_row(sum_terms(z, t), RawRelation::LE, g.worth(t));
    for (auto k : t.members()) add_diff(sys, z[k], s.contains(k) ? y[k] : x[k], RawRelation::GE);
    std::vector<std::size_t> keep = x;
    for (auto k : s.members()) keep.push_back(y[k]);
    return counter_cache.emplace(key, to_semilinear(sys, keep, opts)).first->second;
  };

  std::vector<std::string> players;
  for (std::size_t k = 0; k < g.n(); ++k) players.push_back(g.var(k));

  for (std::size_t i = 0; i < g.n() && !is_empty(remaining, opts); ++i) {
    for (std::size_t j = 0; j < g.n() && !is_empty(remaining, opts); ++j) {
      if (i == j) continue;
      for (Coalition s : all) {
        if (!s.contains(i) || s.contains(j) || s == g.grand()) continue;
        if (!may_object(s)) continue;
        // Justified objections of i against j through S, over (x_N, y_S),
        // restricted to imputations still in play.
        SemilinearSet just = intersect(objections(s), lift(remaining, joint_scope(s)), opts);
        for (Coalition t : all) {
          if (is_empty(just, opts)) break;
          if (!t.contains(j) || t.contains(i) || !may_counter(s, t)) continue;
          just = difference(just, counters(s, t), opts);
        }
        if (is_empty(just, opts)) continue;
        remaining = difference(remaining, project(just, players, opts), opts);
        if (is_empty(remaining, opts)) break;
      }
    }
  }

  NonemptinessResult out;
  auto w = witness(remaining, opts);
  if (!w) return out;
  out.witness = player_point(g, *w);
  if (!bargaining_check(g, *out.witness, opts).member()) {
    throw std::logic_error("bargaining-set witness " + out.witness->str() + " failed re-validation");
  }
  return out;
}

}  // namespace cgame
