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
#include "cgame/game.hpp"

namespace cgame {

std::vector<std::string> numbered_players(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

ConstrainedGame tu_game(std::vector<std::string> players, WorthFunction worth) {
  return ConstrainedGame(std::move(players), std::move(worth));
}

ConstrainedGame finite_imputations_game(const ConstrainedGame& base,
                                        const std::vector<std::vector<Rational>>& points) {
  if (points.empty()) throw SpecInvalid("finite-imputations needs at least one point");
  const std::size_t n = base.n();
  const Rational vn = base.worth(base.grand());
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& p = points[k];
    if (p.size() != n) throw SpecInvalid("point " + std::to_string(k + 1) + " has the wrong length");
    if (coalition_sum(base.grand(), p) != vn) {
      throw SpecInvalid("point " + std::to_string(k + 1) + " does not distribute v(N)");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] < base.worth(Coalition::singleton(i))) {
        throw SpecInvalid("point " + std::to_string(k + 1) + " is not individually rational");
      }
    }
  }
  ConstrainedGame g = base.without_constraints();
  ConstraintSystem& lc = g.lc();
  std::vector<std::size_t> sel;
  std::vector<Term> total;
  for (std::size_t k = 0; k < points.size(); ++k) {
    auto idx = lc.add_variable(Variable::integer("sel_" + std::to_string(k + 1)));
    sel.push_back(idx);
    total.push_back(Term{idx, Rational(1)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> row{Term{i, Rational(1)}};
    for (std::size_t k = 0; k < points.size(); ++k) row.push_back(Term{sel[k], -points[k][i]});
    lc.add_row(std::move(row), RawRelation::EQ, Rational());
  }
  for (auto idx : sel) {
    lc.add_row({Term{idx, Rational(1)}}, RawRelation::GE, Rational());
    lc.add_row({Term{idx, Rational(1)}}, RawRelation::LE, Rational(1));
  }
  lc.add_row(std::move(total), RawRelation::EQ, Rational(1));
  return g;
}

ConstrainedGame hypercube_game(std::size_t n) {
  if (n == 0) throw SpecInvalid("hypercube needs n >= 1");
  const std::uint64_t all = Coalition::grand(n + 1).bits();
  const Rational vn(static_cast<long>(n));
  ConstrainedGame g(numbered_players(n + 1),
                    WorthFunction::table({{all, vn}}, Rational()));
  ConstraintSystem& lc = g.lc();
  std::vector<Term> last{Term{n, Rational(1)}};
  for (std::size_t i = 0; i < n; ++i) {
    lc.set_domain(i, Domain::Integer);
    lc.add_row({Term{i, Rational(1)}}, RawRelation::GE, Rational());
    lc.add_row({Term{i, Rational(1)}}, RawRelation::LE, Rational(1));
    last.push_back(Term{i, Rational(1)});
  }
  lc.add_row(std::move(last), RawRelation::GE, vn);
  return g;
}

ConstrainedGame producer_game(const std::vector<Rational>& alpha, const std::vector<Rational>& beta) {
  if (alpha.empty() || alpha.size() != beta.size()) throw SpecInvalid("producer needs equal-length alpha and beta");
  auto worth = [alpha, beta](Coalition s) {
    return min(coalition_sum(s, alpha), coalition_sum(s, beta));
  };
  ConstrainedGame g(numbered_players(alpha.size()), WorthFunction::oracle("producer", worth));
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    g.lc().set_domain(i, Domain::Integer);
    g.lc().add_row({Term{i, Rational(1)}}, RawRelation::GE, Rational());
  }
  return g;
}

ConstrainedGame service_game(const std::vector<std::vector<Rational>>& costs,
                             const std::vector<std::vector<int>>& skills, const std::vector<Rational>& com) {
  const std::size_t n = skills.size();
  if (n == 0 || costs.size() != n) throw SpecInvalid("service needs one cost and skill row per agent");
  const std::size_t m = skills[0].size();
  for (std::size_t i = 0; i < n; ++i) {
    if (skills[i].size() != m || costs[i].size() != m) throw SpecInvalid("ragged cost/skill rows");
    for (int s : skills[i]) {
      if (s != 0 && s != 1) throw SpecInvalid("skills must be 0 or 1");
    }
  }
  if (com.size() != (std::size_t{1} << n) - 1) {
    throw SpecInvalid("com needs one value per nonempty coalition");
  }
  auto worth = [skills, com, m](Coalition s) {
    for (std::size_t j = 0; j < m; ++j) {
      bool covered = false;
      for (auto i : s.members()) covered = covered || skills[i][j] == 1;
      if (!covered) return Rational();
    }
    return Rational(100) - com[s.bits() - 1];
  };
  ConstrainedGame g(numbered_players(n), WorthFunction::oracle("service", worth));
  ConstraintSystem& lc = g.lc();
  std::vector<std::vector<std::size_t>> gamma(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      gamma[i].push_back(
          lc.add_variable(Variable::integer("gamma_" + std::to_string(i + 1) + "_" + std::to_string(j + 1))));
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Term> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back(Term{gamma[i][j], Rational(1)});
    lc.add_row(std::move(row), RawRelation::EQ, Rational(1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Term> row{Term{i, Rational(1)}};
    for (std::size_t j = 0; j < m; ++j) row.push_back(Term{gamma[i][j], -costs[i][j]});
    lc.add_row(std::move(row), RawRelation::GE, Rational());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      lc.add_row({Term{gamma[i][j], Rational(1)}}, RawRelation::GE, Rational());
      lc.add_row({Term{gamma[i][j], Rational(1)}}, RawRelation::LE, Rational(skills[i][j]));
    }
  }
  return g;
}

ConstrainedGame piggybank_game() {
  static const long kCoins[] = {1, 2, 5, 10};
  static const long kCounts[] = {100, 70, 50, 30};
  ConstrainedGame g(numbered_players(3), WorthFunction::table({{Coalition::grand(3).bits(), Rational(790)}}));
  ConstraintSystem& lc = g.lc();
  std::size_t alpha[4][3];
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t c = 0; c < 4; ++c) {
      alpha[c][i] = lc.add_variable(
          Variable::integer("alpha" + std::to_string(kCoins[c]) + "_" + std::to_string(i + 1)));
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Term> row{Term{i, Rational(1)}};
    for (std::size_t c = 0; c < 4; ++c) row.push_back(Term{alpha[c][i], Rational(-kCoins[c])});
    lc.add_row(std::move(row), RawRelation::EQ, Rational());
  }
  for (std::size_t c = 0; c < 4; ++c) {
    lc.add_row({Term{alpha[c][0], Rational(1)}, Term{alpha[c][1], Rational(1)}, Term{alpha[c][2], Rational(1)}},
               RawRelation::EQ, Rational(kCounts[c]));
  }
  lc.add_row({Term{0, Rational(1)}, Term{1, Rational(mpz_class(-10), mpz_class(8))}}, RawRelation::GE, Rational());
  lc.add_row({Term{1, Rational(1)}, Term{2, Rational(mpz_class(-8), mpz_class(5))}}, RawRelation::GE, Rational());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t c = 0; c < 4; ++c) lc.add_row({Term{alpha[c][i], Rational(1)}}, RawRelation::GE, Rational());
  }
  return g;
}

}  // namespace cgame
