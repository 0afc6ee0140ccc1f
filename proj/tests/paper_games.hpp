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
#ifndef CGAME_TESTS_PAPER_GAMES_HPP_
#define CGAME_TESTS_PAPER_GAMES_HPP_

#include <initializer_list>
#include <utility>
#include <vector>

#include "cgame/game.hpp"
#include "generators.hpp"

// Small games used across the test suites, built directly through the API.
namespace cgame::testing {

struct Worth {
  std::vector<std::size_t> members;  // 1-based
  Rational value;
};

inline Coalition C(std::initializer_list<std::size_t> one_based) {
  std::uint64_t b = 0;
  for (auto i : one_based) b |= std::uint64_t{1} << (i - 1);
  return Coalition(b);
}

inline ConstrainedGame table_game(std::size_t n, const std::vector<Worth>& worths) {
  std::map<std::uint64_t, Rational> t;
  for (const auto& w : worths) {
    std::uint64_t b = 0;
    for (auto i : w.members) b |= std::uint64_t{1} << (i - 1);
    t[b] = w.value;
  }
  return ConstrainedGame(numbered_players(n), WorthFunction::table(std::move(t)));
}

// Adds sum(coef * x_i) rel rhs with 1-based players.
inline void add(ConstrainedGame& g, std::vector<std::pair<std::size_t, Rational>> terms, RawRelation rel,
                Rational rhs) {
  std::vector<Term> row;
  for (auto& [i, c] : terms) row.push_back(Term{i - 1, c});
  g.lc().add_row(std::move(row), rel, std::move(rhs));
}

inline std::vector<Rational> pt(std::initializer_list<Rational> v) { return v; }

inline ConstrainedGame two_player_split(bool constrained) {
  auto g = table_game(2, {{{1, 2}, R(2)}});
  if (constrained) add(g, {{1, R(1)}, {2, R(1)}}, RawRelation::LE, R(1));
  return g;
}

inline ConstrainedGame strict_half(bool constrained = true) {
  auto g = table_game(2, {{{1, 2}, R(1)}});
  if (constrained) add(g, {{1, R(1)}}, RawRelation::LT, R(1, 2));
  return g;
}

inline ConstrainedGame integer_pair_demand() {
  auto g = table_game(3, {{{1, 2, 3}, R(3)}});
  for (std::size_t i = 0; i < 3; ++i) g.lc().set_domain(i, Domain::Integer);
  add(g, {{1, R(1)}, {2, R(1)}}, RawRelation::GE, R(2));
  return g;
}

inline ConstrainedGame unique_imputation_game(bool constrained = true) {
  auto g = table_game(4, {{{1, 2, 3, 4}, R(3)}, {{1, 2}, R(2)}, {{2, 3, 4}, R(3)}, {{1, 3, 4}, R(3)}, {{2}, R(1)}});
  if (constrained) {
    add(g, {{1, R(1)}, {2, R(1)}, {3, R(1)}, {4, R(1)}}, RawRelation::EQ, R(3));
    add(g, {{2, R(1)}, {3, R(1)}, {4, R(1)}}, RawRelation::EQ, R(3));
    add(g, {{1, R(1)}, {3, R(1)}}, RawRelation::EQ, R(1));
    add(g, {{1, R(1)}, {4, R(1)}}, RawRelation::EQ, R(1));
  }
  return g;
}

inline ConstrainedGame empty_core_game(bool constrained) {
  auto g = table_game(3, {{{1}, R(1)}, {{2}, R(1)}, {{3}, R(2)}, {{1, 2}, R(3)}, {{1, 2, 3}, R(4)}});
  if (constrained) add(g, {{1, R(1)}, {2, R(1)}}, RawRelation::LE, R(2));
  return g;
}

inline ConstrainedGame five_player_game(bool constrained) {
  auto g = table_game(5, {{{1, 2, 3, 4, 5}, R(8)}, {{2, 3, 4}, R(8)}, {{1, 3, 4}, R(7)}, {{1, 2}, R(2)}, {{5}, R(1)}});
  if (constrained) add(g, {{2, R(1)}, {3, R(1)}, {4, R(1)}}, RawRelation::LE, R(7));
  return g;
}

inline ConstrainedGame pair_cap_game(bool constrained) {
  auto g = table_game(3, {{{1}, R(1)}, {{2}, R(1)}, {{1, 3}, R(4)}, {{2, 3}, R(4)}, {{1, 2}, R(5)}, {{1, 2, 3}, R(3)}});
  if (constrained) add(g, {{1, R(1)}, {2, R(1)}}, RawRelation::LE, R(4));
  return g;
}

inline ConstrainedGame kernel_shift_game(bool constrained) {
  auto g = table_game(3, {{{1, 2, 3}, R(3)}, {{1, 2}, R(5)}, {{1, 3}, R(4)}, {{2, 3}, R(3)}});
  if (constrained) {
    add(g, {{1, R(1)}, {2, R(1)}}, RawRelation::LE, R(3));
    add(g, {{1, R(1)}, {3, R(1)}}, RawRelation::LE, R(3));
    add(g, {{2, R(1)}, {3, R(1)}}, RawRelation::LE, R(3));
  }
  return g;
}

inline ConstrainedGame shapley_shift_game(bool constrained) {
  auto g = table_game(3, {{{1, 2, 3}, R(3)}, {{1, 2}, R(4)}, {{1, 3}, R(3)}, {{2, 3}, R(3)}});
  if (constrained) add(g, {{1, R(1)}, {2, R(1)}}, RawRelation::LE, R(3));
  return g;
}

}  // namespace cgame::testing

#endif  // CGAME_TESTS_PAPER_GAMES_HPP_
