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
#include "cgame/errors.hpp"
#include "cgame/reductions.hpp"
#include "cgame/stability.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace cgame;
using namespace cgame::testing;

namespace {

Qbf qbf(std::vector<QuantBlock> prefix, BoolExpr matrix) { return Qbf{std::move(prefix), std::move(matrix)}; }

const Quantifier E = Quantifier::Exists;
const Quantifier A = Quantifier::Forall;

// Renames variables throughout a formula.
BoolExpr rename(const BoolExpr& e, const std::map<std::string, std::string>& m) {
  BoolExpr out = e;
  if (e.kind == BoolExpr::Kind::Var) out.name = m.at(e.name);
  for (auto& a : out.args) a = rename(a, m);
  return out;
}

}  // namespace

TEST_CASE("eval_bool and satisfiable") {
  auto x = bvar("X");
  CHECK_FALSE(eval_bool(band({x, bnot(x)}), {{"X", true}}));
  CHECK_FALSE(eval_bool(band({x, bnot(x)}), {{"X", false}}));
  CHECK(eval_bool(bor({x, bvar("Y")}), {{"X", false}, {"Y", true}}));
  CHECK(eval_bool(x, {{"X", true}}));
  CHECK_THROWS_AS(eval_bool(bvar("Q"), {{"X", true}}), UnboundVariable);
  CHECK(satisfiable(bor({x, bvar("Y")})));
  CHECK_FALSE(satisfiable(band({x, bnot(x)})));
  CHECK(satisfiable(bconst(true)));
  CHECK_FALSE(satisfiable(bconst(false)));
  CHECK(vars(band({bvar("B"), bor({bvar("A"), bvar("B")})})) == std::vector<std::string>{"B", "A"});
  CHECK(band({x, bnot(bvar("Y"))}).str() == "(X & !Y)");
}

TEST_CASE("qbf_valid") {
  auto y = bvar("Y"), z = bvar("Z"), x = bvar("X");
  CHECK(qbf_valid(qbf({{A, {"Y"}}, {E, {"Z"}}}, bor({band({y, z}), band({bnot(y), bnot(z)})}))));
  CHECK(qbf_valid(qbf({{E, {"X"}}, {A, {"Y"}}}, bor({x, y}))));
  CHECK_FALSE(qbf_valid(qbf({{A, {"Y"}}}, y)));
  CHECK_FALSE(qbf_valid(qbf({{E, {"X"}}, {A, {"Y"}}}, band({x, y}))));
  CHECK(qbf_valid(qbf({{A, {"Y1", "Y2"}}, {E, {"Z"}}}, bor({bvar("Y1"), bvar("Y2"), bnot(bvar("Y2"))}))));

  CHECK_THROWS_AS(validate(qbf({{E, {"X"}}, {E, {"Y"}}}, x)), BadPrefix);
  CHECK_THROWS_AS(validate(qbf({{E, {"X"}}, {A, {"X"}}}, x)), BadPrefix);
  CHECK_THROWS_AS(validate(qbf({{E, {"X"}}}, y)), UnboundVariable);
  std::vector<std::string> many;
  for (int k = 0; k < 21; ++k) many.push_back("V" + std::to_string(k));
  CHECK_THROWS_AS(qbf_valid(qbf({{E, many}}, bconst(true))), TooManyVariables);
}

TEST_CASE("core check construction") {
  auto contradiction = build_core_check(band({bvar("X1"), bnot(bvar("X1"))}));
  REQUIRE(contradiction.point);
  CHECK(contradiction.game.players() == std::vector<std::string>{"X1", "w", "e"});
  CHECK(is_imputation(contradiction.game, *contradiction.point));
  CHECK(core_check(contradiction.game, *contradiction.point).member());

  auto single = build_core_check(bvar("X1"));
  auto v = core_check(single.game, *single.point);
  REQUIRE(v.kind == CoreVerdict::Kind::Blocked);
  CHECK(v.coalition == Coalition::of({0, 1}));
  CHECK(single.game.worth(Coalition::of({0, 1})) == R(1));
  CHECK(single.game.worth(Coalition::of({1})) == R(0));
  CHECK(is_cohesive(single.game));
}

TEST_CASE("equivalence: core check versus unsatisfiability") {
  const auto formulas = template_formulas();
  CHECK(formulas.size() >= 50);
  int unsat = 0;
  for (const auto& phi : formulas) {
    CAPTURE(phi.str());
    auto inst = build_core_check(phi);
    CHECK(is_cohesive(inst.game));
    // Player w alone is worth 1 exactly when the all-false assignment
    // satisfies the formula; only then is the point not an imputation.
    Assignment all_false;
    for (const auto& v : vars(phi)) all_false[v] = false;
    CHECK(is_imputation(inst.game, *inst.point) == !eval_bool(phi, all_false));
    const bool expected = !satisfiable(phi);
    unsat += expected;
    CHECK(core_check(inst.game, *inst.point).member() == expected);
  }
  CHECK(unsat > 5);
}

TEST_CASE("equivalence: core check with integer constraints") {
  auto ys = [](bool neg) { return neg ? bnot(bvar("Y")) : bvar("Y"); };
  auto unsat_phi = band({bvar("X1"), bnot(bvar("X1"))});
  auto one = build_core_check_dp(unsat_phi, bor({ys(false), ys(false), ys(false)}));
  CHECK(core_check(one.game, *one.point).member());
  auto both = build_core_check_dp(unsat_phi, band({bor({ys(false), ys(false), ys(false)}),
                                                   bor({ys(true), ys(true), ys(true)})}));
  auto nv = core_check(both.game, *both.point);
  CHECK(nv.kind == CoreVerdict::Kind::NotImputation);
  auto sat = build_core_check_dp(bvar("X1"), bor({ys(false), ys(false), ys(false)}));
  CHECK(core_check(sat.game, *sat.point).kind == CoreVerdict::Kind::Blocked);

  CHECK_THROWS_AS(build_core_check_dp(unsat_phi, bor({ys(false), ys(true)})), NotThreeCnf);
  CHECK_THROWS_AS(build_core_check_dp(unsat_phi, bor({ys(false), band({ys(true)}), ys(false)})), NotThreeCnf);
  CHECK_THROWS_AS(build_core_check_dp(bvar("Y"), bor({ys(false), ys(false), ys(false)})), SpecInvalid);

  const auto pairs = template_formula_pairs();
  CHECK(pairs.size() >= 20);
  for (const auto& [phi, phi2] : pairs) {
    CAPTURE(phi.str());
    CAPTURE(phi2.str());
    auto inst = build_core_check_dp(phi, phi2);
    CHECK(is_cohesive(inst.game));
    const bool expected = !satisfiable(phi) && satisfiable(phi2);
    CHECK(core_check(inst.game, *inst.point).member() == expected);
  }
}

TEST_CASE("equivalence: bargaining check versus forall-exists validity") {
  auto y = bvar("Y"), z = bvar("Z");
  auto valid = build_bargaining_check(qbf({{A, {"Y"}}, {E, {"Z"}}}, bor({band({y, z}), band({bnot(y), bnot(z)})})));
  CHECK(valid.game.players() ==
        std::vector<std::string>{"Y", "neg_Y", "Y_pad", "neg_Y_pad", "Z", "neg_Z", "a", "a_prime"});
  CHECK(bargaining_check(valid.game, *valid.point).member());
  auto invalid = build_bargaining_check(qbf({{A, {"Y"}}, {E, {"Z"}}}, band({y, z})));
  CHECK(bargaining_check(invalid.game, *invalid.point).kind == BargainingVerdict::Kind::Justified);
  CHECK_THROWS_AS(build_bargaining_check(qbf({{E, {"Y"}}, {A, {"Z"}}}, y)), BadPrefix);
  // Two universal variables need no padding.
  auto y2 = bvar("Y2");
  auto wide = build_bargaining_check(qbf({{A, {"Y", "Y2"}}, {E, {"Z"}}}, bor({band({y, z}), band({bnot(y), bnot(z)}), y2})));
  CHECK(wide.game.n() == 8);
  CHECK(bargaining_check(wide.game, *wide.point).member());
  auto wide_invalid = build_bargaining_check(qbf({{A, {"Y", "Y2"}}, {E, {"Z"}}}, band({y, z, y2})));
  CHECK(bargaining_check(wide_invalid.game, *wide_invalid.point).kind == BargainingVerdict::Kind::Justified);

  for (const auto& h : template_qbfs(A, E)) {
    CAPTURE(h.str());
    auto inst = build_bargaining_check(h);
    CHECK(is_cohesive(inst.game));
    REQUIRE(is_imputation(inst.game, *inst.point));
    auto v = bargaining_check(inst.game, *inst.point);
    CHECK(v.member() == qbf_valid(h));
  }
}

TEST_CASE("equivalence: core non-emptiness versus exists-forall validity") {
  auto x = bvar("X"), y = bvar("Y");
  auto valid = build_core_nonempty(qbf({{E, {"X"}}, {A, {"Y"}}}, bor({x, y})));
  CHECK(valid.game.lc().rows().size() == 4);
  CHECK(valid.game.worth(valid.game.grand()) == R(3));
  CHECK(core_nonempty(valid.game).witness.has_value());
  CHECK(core_nonempty(build_core_nonempty(qbf({{E, {"X"}}, {A, {"Y"}}}, band({x, y}))).game).empty());
  CHECK_THROWS_AS(build_core_nonempty(qbf({{A, {"X"}}, {E, {"Y"}}}, x)), BadPrefix);

  for (const auto& f : template_qbfs(E, A)) {
    CAPTURE(f.str());
    auto inst = build_core_nonempty(f);
    CHECK(is_cohesive(inst.game));
    CHECK(!core_nonempty(inst.game).empty() == qbf_valid(f));
  }
}

TEST_CASE("bargaining non-emptiness instances") {
  auto x = bvar("X"), y = bvar("Y"), z = bvar("Z");
  const std::vector<QuantBlock> prefix{{E, {"X"}}, {A, {"Y"}}, {E, {"Z"}}};
  SolverOptions opts;
  opts.max_bargaining_players = 8;
  auto check = [&](const BoolExpr& matrix) {
    auto p = qbf(prefix, matrix);
    auto inst = build_bs_nonempty(p);
    CHECK(inst.game.n() == 8);
    CHECK(is_cohesive(inst.game));
    CHECK(!bargaining_nonempty(inst.game, opts).empty() == qbf_valid(p));
    return qbf_valid(p);
  };
  CHECK(check(band({bor({x, y, z}), bor({x, bnot(y), z})})));
  CHECK_FALSE(check(bconst(false)));
  CHECK_THROWS_AS(build_bs_nonempty(qbf(prefix, x), 7), PlayerLimitExceeded);
  CHECK_THROWS_AS(build_bs_nonempty(qbf({{E, {"X"}}, {A, {"Y"}}}, x)), BadPrefix);
}

TEST_CASE("property: worth depends only on the literal pattern") {
  // Renaming the variables of a formula permutes nothing: players keep their
  // positions, so the worth tables coincide coalition by coalition.
  const std::map<std::string, std::string> fwd{{"X1", "P"}, {"X2", "Q"}, {"X3", "R"}};
  for (const auto& phi : template_formulas()) {
    auto a = build_core_check(phi);
    auto b = build_core_check(rename(phi, fwd));
    REQUIRE(a.game.n() == b.game.n());
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << a.game.n()); ++s) {
      CHECK(a.game.worth(Coalition(s)) == b.game.worth(Coalition(s)));
    }
  }
  const std::map<std::string, std::string> qmap{{"X1", "U"}, {"Y1", "V"}};
  for (const auto& f : template_qbfs(E, A)) {
    auto a = build_core_nonempty(f);
    Qbf g{{{E, {"U"}}, {A, {"V"}}}, rename(f.matrix, qmap)};
    auto b = build_core_nonempty(g);
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << a.game.n()); ++s) {
      CHECK(a.game.worth(Coalition(s)) == b.game.worth(Coalition(s)));
    }
  }
}
