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
#include "cgame/game.hpp"

#include <algorithm>

#include "cgame/errors.hpp"

namespace cgame {

WorthFunction WorthFunction::table(std::map<std::uint64_t, Rational> entries, Rational fallback) {
  WorthFunction w;
  entries.erase(0);
  w.entries_ = std::move(entries);
  w.fallback_ = std::move(fallback);
  return w;
}

WorthFunction WorthFunction::oracle(std::string description, Oracle f) {
  WorthFunction w;
  w.oracle_ = std::make_shared<const Oracle>(std::move(f));
  w.description_ = std::move(description);
  return w;
}

Rational WorthFunction::operator()(Coalition s) const {
  if (s.empty()) return Rational();
  if (oracle_) return (*oracle_)(s);
  auto it = entries_.find(s.bits());
  return it == entries_.end() ? fallback_ : it->second;
}

ConstrainedGame::ConstrainedGame(std::vector<std::string> players, WorthFunction worth)
    : players_(std::move(players)), worth_(std::move(worth)) {
  if (players_.size() > Coalition::kMaxPlayers) throw InputError("too many players");
  for (std::size_t i = 0; i < players_.size(); ++i) lc_.add_variable(Variable::payoff(players_[i], i));
}

std::optional<std::size_t> ConstrainedGame::player_index(std::string_view id) const {
  auto it = std::find(players_.begin(), players_.end(), id);
  if (it == players_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - players_.begin());
}

bool ConstrainedGame::is_tu() const {
  if (!lc_.rows().empty() || lc_.num_variables() != players_.size()) return false;
  return std::all_of(lc_.variables().begin(), lc_.variables().end(),
                     [](const Variable& v) { return !v.is_integer() && !v.lo && !v.hi; });
}

ConstrainedGame ConstrainedGame::with_worth(WorthFunction w) const {
  ConstrainedGame g = *this;
  g.worth_ = std::move(w);
  return g;
}

ConstrainedGame ConstrainedGame::without_constraints() const { return ConstrainedGame(players_, worth_); }

std::vector<Term> coalition_sum(Coalition s) {
  std::vector<Term> out;
  for (auto i : s.members()) out.push_back(Term{i, Rational(1)});
  return out;
}

Rational coalition_sum(Coalition s, const std::vector<Rational>& x) {
  Rational total;
  for (auto i : s.members()) total += x[i];
  return total;
}

std::vector<Rational> player_values(const ConstrainedGame& g, const PayoffPoint& x) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < g.n(); ++i) out.push_back(x.at(g.var(i)));
  return out;
}

PayoffPoint player_point(const ConstrainedGame& g, const std::vector<Rational>& x) {
  return coalition_point(g, g.grand(), x);
}

PayoffPoint coalition_point(const ConstrainedGame& g, Coalition s, const std::vector<Rational>& x) {
  PayoffPoint p;
  for (auto i : s.members()) p.set(g.var(i), x[i]);
  return p;
}

std::vector<Rational> worth_table(const ConstrainedGame& g) {
  const std::uint64_t total = std::uint64_t{1} << g.n();
  std::vector<Rational> out(total);
  for (std::uint64_t b = 1; b < total; ++b) out[b] = g.worth(Coalition(b));
  return out;
}

ConstraintSystem consequence_system(const ConstrainedGame& g, Coalition s) {
  ConstraintSystem sys = g.lc();
  sys.add_row(coalition_sum(s), RawRelation::LE, g.worth(s));
  return sys;
}

SemilinearSet consequence_set(const ConstrainedGame& g, Coalition s, const SolverOptions& opts) {
  return to_semilinear(consequence_system(g, s), s.members(), opts);
}

bool is_consequence(const ConstrainedGame& g, Coalition s, const PayoffPoint& y, const SolverOptions& opts) {
  for (const auto& [name, value] : y.entries()) {
    auto idx = g.lc().find(name);
    if (!idx || *idx >= g.n() || !s.contains(*idx)) {
      throw ScopeMismatch(name + " is not a payoff variable of the coalition");
    }
  }
  for (auto i : s.members()) {
    if (!y.contains(g.var(i))) throw MissingAssignment(g.var(i));
  }
  return milp_feasible(substitute(consequence_system(g, s), y), opts).feasible();
}

bool is_cohesive(const ConstrainedGame& g, const SolverOptions& opts) {
  if (g.n() > opts.max_cohesive_players) {
    throw PlayerLimitExceeded("cohesiveness check is limited to " + std::to_string(opts.max_cohesive_players) +
                              " players");
  }
  // best[S] = max over partitions of S of the summed worth.
  const auto v = worth_table(g);
  std::vector<Rational> best(v.size());
  for (std::uint64_t s = 1; s < v.size(); ++s) {
    opts.deadline.check();
    const std::uint64_t low = s & (~s + 1);
    best[s] = v[s];
    // Blocks containing the lowest member of S, strictly smaller than S.
    for (std::uint64_t t = (s - 1) & s; t != 0; t = (t - 1) & s) {
      if (!(t & low)) continue;
      best[s] = max(best[s], v[t] + best[s & ~t]);
    }
  }
  return v.back() >= best.back();
}

TUReduction tu_reduce(const ConstrainedGame& g, const SolverOptions& opts) {
  std::map<std::uint64_t, Rational> vprime;
  TUReduction out;
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << g.n()); ++b) {
    const Coalition s(b);
    SemilinearSet set = consequence_set(g, s, opts);
    std::vector<Term> sum;
    for (std::size_t k = 0; k < s.size(); ++k) sum.push_back(Term{k, Rational(1)});
    auto best = optimize_over(set, sum, Sense::Max, opts);
    out.failing = s;
    if (best.infeasible()) {
      out.reason = "empty consequence set";
      return out;
    }
    if (!best.attained) {
      out.reason = "coalition sum supremum " + best.value.str() + " is not attained";
      return out;
    }
    SemilinearSet half(set.scope());
    half.add_cell(Cell{s.size(), {LinearRow{sum, Relation::LE, best.value}}});
    if (!is_empty(difference(half, set, opts), opts)) {
      out.reason = "consequence set is not the half-space x(S) <= " + best.value.str();
      return out;
    }
    vprime.emplace(b, best.value);
  }
  out.reducible = true;
  out.failing = Coalition();
  out.vprime = WorthFunction::table(std::move(vprime));
  return out;
}

std::string coalition_label(const ConstrainedGame& g, Coalition s) {
  std::string out = "{";
  for (auto k : s.members()) {
    if (out.size() > 1) out += ",";
    out += g.players()[k];
  }
  return out + "}";
}

}  // namespace cgame
