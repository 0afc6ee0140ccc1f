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
// Acceptance run: one PASS/FAIL line per criterion, with a wall-clock budget
// each. Detail lines below a criterion are either failures ("fail:") or
// informational output ("info:") that does not affect the verdict.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cgame/cli.hpp"
#include "cgame/errors.hpp"
#include "cgame/io.hpp"
#include "cgame/reductions.hpp"
#include "cgame/relations.hpp"
#include "cgame/stability.hpp"
#include "cgame/values.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "paper_games.hpp"

using namespace cgame;
using namespace cgame::testing;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void info(const std::string& what) { notes.push_back(what); }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&, const SolverOptions&)> body;
};

PayoffPoint P(const ConstrainedGame& g, const std::vector<Rational>& v) { return player_point(g, v); }

std::string fixture_path(const std::string& name) { return std::string(CGAME_FIXTURE_DIR) + "/" + name; }

ConstrainedGame fixture(const std::string& name) { return read_game_file(fixture_path(name + ".cg")).game; }

std::string show(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
  return s + ")";
}

std::string show(const ConstrainedGame& g, Coalition s) { return coalition_label(g, s); }

std::vector<Rational> values_of(const ConstrainedGame& g, const PayoffPoint& p) { return player_values(g, p); }

// Runs the section and records any exception as a failure of that section,
// so one unmet requirement does not hide the others.
void section(Outcome& out, const std::string& what, const std::function<void()>& f) {
  try {
    f();
  } catch (const NotTUReducible& e) {
    out.failures.push_back(what + ": NotTUReducible: " + e.what());
  } catch (const TimeLimitExceeded&) {
    throw;
  } catch (const std::exception& e) {
    out.failures.push_back(what + ": " + e.what());
  }
}

// Exit code and stdout of one CLI invocation.
std::pair<int, std::string> cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

// sup of x(S) over V_LC(S) for every nonempty S; the TU game a point solution
// would see if each consequence set were replaced by its supporting
// half-space. Coalitions with an empty consequence set are reported.
std::optional<WorthFunction> supporting_worth(const ConstrainedGame& g, const SolverOptions& opts) {
  std::map<std::uint64_t, Rational> t;
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << g.n()); ++b) {
    Coalition s(b);
    auto set = consequence_set(g, s, opts);
    std::vector<Term> sum;
    for (std::size_t k = 0; k < s.size(); ++k) sum.push_back(Term{k, R(1)});
    auto r = optimize_over(set, sum, Sense::Max, opts);
    if (r.kind != LPOutcome::Kind::Optimal) return std::nullopt;
    t[b] = r.value;
  }
  return WorthFunction::table(std::move(t));
}

// ---------------------------------------------------------------------------

void split_pair(Outcome& out, const SolverOptions& opts) {
  const auto g = fixture("split_pair");
  section(out, "TU core equals the imputation segment", [&] {
    auto imps = imputation_set(g, opts);
    for (long k = 0; k <= 8; ++k) {
      const auto x = pt({R(k, 4), R(2) - R(k, 4)});
      out.expect(imps.contains(x), "imputation set misses " + show(x));
      out.expect(core_check(g, P(g, x), opts).member(), "core misses " + show(x));
    }
    for (const auto& x : {pt({R(-1, 4), R(9, 4)}), pt({R(9, 4), R(-1, 4)}), pt({R(1), R(1, 2)})}) {
      out.expect(!imps.contains(x), "imputation set contains " + show(x));
      out.expect(!core_check(g, P(g, x), opts).member(), "core contains " + show(x));
    }
    for (const auto& x : {pt({R(2), R(0)}), pt({R(0), R(2)}), pt({R(1), R(1)})}) {
      out.expect(core_check(g, P(g, x), opts).member(), show(x) + " is not a core member");
    }
  });
  section(out, "TU nucleolus and Shapley value", [&] {
    out.expect(values_of(g, nucleolus(g, opts)) == pt({R(1), R(1)}), "nucleolus is not (1, 1)");
    out.expect(values_of(g, shapley(g, opts)) == pt({R(1), R(1)}), "Shapley value is not (1, 1)");
  });
  const auto c = fixture("split_pair_capped");
  section(out, "capped nucleolus and kernel", [&] {
    const auto nu = values_of(c, nucleolus(c, opts));
    out.expect(nu == pt({R(1, 2), R(1, 2)}), "capped nucleolus is " + show(nu));
    out.expect(kernel_check(c, P(c, pt({R(1, 2), R(1, 2)})), opts).ok, "(1/2, 1/2) is not a kernel point");
  });
  section(out, "Shapley NTU checks", [&] {
    const auto half = P(c, pt({R(1, 2), R(1, 2)}));
    out.expect(shapley_ntu_check(c, half, {R(1), R(1)}, opts).accepted(), "lambda (1, 1) is not accepted");
    auto r = shapley_ntu_check(c, half, {R(1), R(2)}, opts);
    out.expect(r.kind == ShapleyNTUResult::Kind::GameUndefined, "lambda (1, 2) is not rejected as undefined");
  });
}

void empty_core(Outcome& out, const SolverOptions& opts) {
  const auto x = pt({R(1), R(1), R(2)});
  const auto g = fixture("empty_core");
  section(out, "TU game", [&] {
    auto v = core_check(g, P(g, x), opts);
    out.expect(v.kind == CoreVerdict::Kind::Blocked && v.coalition == Coalition::of({0, 1}),
               "(1, 1, 2) is not blocked by {1,2}");
    out.expect(core_nonempty(g, opts).empty(), "TU core is not empty");
  });
  const auto c = fixture("empty_core_capped");
  section(out, "capped game", [&] {
    out.expect(core_check(c, P(c, x), opts).member(), "(1, 1, 2) is not a core member");
    auto w = core_nonempty(c, opts).witness;
    out.expect(w.has_value(), "capped core is empty");
    if (w) out.expect(values_of(c, *w) == x, "witness is " + show(values_of(c, *w)));
  });
}

void unique_imputation(Outcome& out, const SolverOptions& opts) {
  const auto g = fixture("unique_imputation");
  const auto x = pt({R(0), R(1), R(1), R(1)});
  section(out, "imputation set", [&] {
    auto imps = imputation_set(g, opts);
    auto only = point_set(imps.scope(), x);
    out.expect(!is_empty(intersect(imps, only, opts), opts), "(0, 1, 1, 1) is not an imputation");
    out.expect(is_empty(difference(imps, only, opts), opts), "imputation set has other points");
  });
  section(out, "bargaining check", [&] {
    auto v = bargaining_check(g, P(g, x), opts);
    out.expect(v.kind == BargainingVerdict::Kind::Justified, "(0, 1, 1, 1) has no justified objection");
    if (v.kind == BargainingVerdict::Kind::Justified) {
      out.expect(v.objection.coalition == Coalition::of({0, 1}),
                 "objection is through " + show(g, v.objection.coalition));
    }
    // The constraints pin every payoff of {1,2} and of N; report what the
    // consequence sets of the coalitions through player 1 allow.
    for (auto s : {Coalition::of({0}), Coalition::of({0, 1})}) {
      auto set = consequence_set(g, s, opts);
      auto w = witness(set, opts);
      out.info("V_LC(" + show(g, s) + ") " + (w ? "contains " + show(*w) : std::string("is empty")));
    }
  });
  section(out, "bargaining set emptiness", [&] {
    auto r = bargaining_nonempty(g, opts);
    out.expect(r.empty(), "bargaining set is not empty");
    if (r.witness) out.info("bargaining set witness " + show(values_of(g, *r.witness)));
  });
}

void verdict_flips(Outcome& out, const SolverOptions& opts) {
  auto describe = [](const ConstrainedGame& g, const BargainingVerdict& v) {
    if (v.kind != BargainingVerdict::Kind::Justified) return std::string("no objection");
    return "player " + g.players()[v.objection.i] + " against " + g.players()[v.objection.j] + " through " +
           show(g, v.objection.coalition) + " with " + v.objection.y.str();
  };
  // Each instance has its own budget of 60 s inside the criterion's total.
  auto timed = [&](const std::string& what, const std::function<void()>& f) {
    const auto start = std::chrono::steady_clock::now();
    section(out, what, f);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.expect(s <= 60, what + " took " + std::to_string(s) + " s");
  };
  const auto x5 = pt({R(0), R(1), R(3), R(3), R(1)});
  timed("five players", [&] {
    const auto base = fixture("five_player");
    const auto capped = fixture("five_player_capped");
    auto b = bargaining_check(base, P(base, x5), opts);
    out.expect(b.member(), "(0, 1, 3, 3, 1) is not in the base bargaining set: " + describe(base, b));
    auto c = bargaining_check(capped, P(capped, x5), opts);
    out.expect(c.kind == BargainingVerdict::Kind::Justified, "(0, 1, 3, 3, 1) is in the capped bargaining set");
    out.info("five players, capped: " + describe(capped, c));
  });
  const auto x3 = pt({R(1), R(1), R(1)});
  timed("pair objection", [&] {
    const auto base = fixture("pair_objection");
    const auto capped = fixture("pair_objection_capped");
    auto b = bargaining_check(base, P(base, x3), opts);
    out.expect(b.kind == BargainingVerdict::Kind::Justified, "(1, 1, 1) is in the base bargaining set");
    out.info("pair objection, base: " + describe(base, b));
    auto c = bargaining_check(capped, P(capped, x3), opts);
    out.expect(c.member(), "(1, 1, 1) is not in the capped bargaining set: " + describe(capped, c));
  });
}

void kernel_shift(Outcome& out, const SolverOptions& opts) {
  const auto g = fixture("kernel_shift");
  section(out, "base game", [&] {
    const auto nu = values_of(g, nucleolus(g, opts));
    out.expect(nu == pt({R(2), R(1), R(0)}), "base nucleolus is " + show(nu));
    out.expect(kernel_check(g, P(g, pt({R(2), R(1), R(0)})), opts).ok, "(2, 1, 0) is not a kernel point");
  });
  const auto c = fixture("kernel_shift_capped");
  section(out, "reduction of the capped game", [&] {
    auto r = tu_reduce(c, opts);
    out.expect(r.reducible, "capped game is not TU-reducible at " + show(c, r.failing) + ": " + r.reason);
    if (r.reducible) {
      for (std::uint64_t b = 1; b < 8; ++b) {
        Coalition s(b);
        if (s.size() >= 2) out.expect(r.vprime(s) == R(3), "v'(" + show(c, s) + ") = " + r.vprime(s).str());
      }
    }
  });
  section(out, "capped nucleolus and kernel", [&] {
    const auto nu = values_of(c, nucleolus(c, opts));
    out.expect(nu == pt({R(1), R(1), R(1)}), "capped nucleolus is " + show(nu));
    out.expect(kernel_check(c, P(c, pt({R(1), R(1), R(1)})), opts).ok, "(1, 1, 1) is not a kernel point");
  });
  section(out, "supporting worth", [&] {
    if (auto w = supporting_worth(c, opts)) {
      out.info("nucleolus of sup x(S) over V_LC(S): " + show(tu_nucleolus(3, *w, opts)));
    }
  });
}

void shapley_shift(Outcome& out, const SolverOptions& opts) {
  const auto g = fixture("shapley_shift");
  section(out, "base game", [&] {
    const auto phi = values_of(g, shapley(g, opts));
    out.expect(phi == pt({R(7, 6), R(7, 6), R(4, 6)}), "base Shapley value is " + show(phi));
  });
  const auto c = fixture("shapley_shift_capped");
  section(out, "reduction of the capped game", [&] {
    auto r = tu_reduce(c, opts);
    out.expect(r.reducible, "capped game is not TU-reducible at " + show(c, r.failing) + ": " + r.reason);
    if (r.reducible) {
      const auto phi = tu_shapley(3, r.vprime);
      out.expect(phi == pt({R(1), R(1), R(1)}), "reduced Shapley value is " + show(phi));
    }
  });
  section(out, "supporting worth", [&] {
    if (auto w = supporting_worth(c, opts)) out.info("Shapley value of sup x(S) over V_LC(S): " + show(tu_shapley(3, *w)));
  });
}

void strict_cap(Outcome& out, const SolverOptions& opts) {
  const auto g = fixture("strict_half");
  section(out, "every imputation is improved", [&] {
    for (const auto& x1 : {R(0), R(1, 4), R(2, 5)}) {
      const Rational y1 = x1 + (R(1, 2) - x1) / R(2);
      const auto x = P(g, pt({x1, R(1) - x1}));
      const auto y = P(g, pt({y1, R(1) - y1}));
      out.expect(is_imputation(g, x, opts), x.str() + " is not an imputation");
      out.expect(is_imputation(g, y, opts), y.str() + " is not an imputation");
      out.expect(lex_less(theta(g, y, opts), theta(g, x, opts)), y.str() + " does not improve on " + x.str());
    }
  });
  section(out, "nucleolus command", [&] {
    auto [code, text] = cli({"nucleolus", fixture_path("strict_half.cg")});
    out.expect(code == cli::kUnsupported, "nucleolus exited " + std::to_string(code) + ": " + text);
  });
}

void examples(Outcome& out, const SolverOptions& opts) {
  section(out, "coin box", [&] {
    const auto g = fixture("piggybank");
    auto r = milp_feasible(g.lc(), opts);
    out.expect(r.feasible() && r.witness, "coin box system is infeasible");
    if (!r.witness) return;
    auto p = to_point(g.lc(), *r.witness);
    const auto& x1 = p.at("x_1");
    const auto& x2 = p.at("x_2");
    const auto& x3 = p.at("x_3");
    out.expect(R(8) * x1 >= R(10) * x2, "first ratio row fails");
    out.expect(R(5) * x2 >= R(8) * x3, "second ratio row fails");
    const long coins[] = {1, 2, 5, 10}, counts[] = {100, 70, 50, 30};
    for (int c = 0; c < 4; ++c) {
      Rational count;
      for (int i = 1; i <= 3; ++i) {
        const auto& a = p.at("alpha" + std::to_string(coins[c]) + "_" + std::to_string(i));
        out.expect(a.is_integer() && a >= R(0), "coin count is not a nonnegative integer");
        count += a;
      }
      out.expect(count == R(counts[c]), std::to_string(coins[c]) + "-cent coins sum to " + count.str());
    }
    for (int i = 1; i <= 3; ++i) {
      Rational worth;
      for (long coin : coins) worth += R(coin) * p.at("alpha" + std::to_string(coin) + "_" + std::to_string(i));
      out.expect(worth == p.at("x_" + std::to_string(i)), "payoff of brother " + std::to_string(i) + " is off");
    }
    out.info("coin split " + show(pt({x1, x2, x3})));
  });
  section(out, "pair demand has no consequence for {1,2}", [&] {
    const auto g = fixture("integer_pair_demand");
    std::mt19937 rng(36);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 4);
    int sampled = 0;
    for (long a = -3; a <= 3; ++a) {
      for (long b = -3; b <= 3; ++b) {
        ++sampled;
        out.expect(!is_consequence(g, Coalition::of({0, 1}), PayoffPoint{{"x_1", R(a)}, {"x_2", R(b)}}, opts),
                   "(" + std::to_string(a) + ", " + std::to_string(b) + ") is a consequence");
      }
    }
    for (int k = 0; k < 200; ++k, ++sampled) {
      PayoffPoint y{{"x_1", R(num(rng), den(rng))}, {"x_2", R(num(rng), den(rng))}};
      out.expect(!is_consequence(g, Coalition::of({0, 1}), y, opts), y.str() + " is a consequence");
    }
    out.info(std::to_string(sampled) + " points sampled on {1,2}");
  });
  section(out, "hypercube imputations", [&] {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto g = hypercube_game(n);
      auto rest = imputation_set(g, opts);
      const auto scope = rest.scope();
      std::size_t found = 0;
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        std::vector<Rational> p;
        long ones = 0;
        for (std::size_t i = 0; i < n; ++i) {
          p.push_back(R((b >> i) & 1));
          ones += (b >> i) & 1;
        }
        p.push_back(R(static_cast<long>(n) - ones));
        found += rest.contains(p);
        rest = difference(rest, point_set(scope, p), opts);
      }
      out.expect(found == (std::size_t{1} << n), "hypercube " + std::to_string(n) + " misses imputations");
      out.expect(is_empty(rest, opts), "hypercube " + std::to_string(n) + " has extra imputations");
    }
  });
}

void reductions(Outcome& out, const SolverOptions& opts) {
  section(out, "core check versus unsatisfiability", [&] {
    const auto formulas = template_formulas();
    out.expect(formulas.size() >= 50, "fewer than 50 formulas");
    int agree = 0;
    for (const auto& phi : formulas) {
      auto inst = build_core_check(phi);
      out.expect(is_cohesive(inst.game, opts), "not cohesive for " + phi.str());
      const bool ok = core_check(inst.game, *inst.point, opts).member() == !satisfiable(phi);
      out.expect(ok, "disagrees on " + phi.str());
      agree += ok;
    }
    out.info("core check: " + std::to_string(agree) + "/" + std::to_string(formulas.size()) + " agree");
  });
  section(out, "core check with integer constraints", [&] {
    const auto pairs = template_formula_pairs();
    out.expect(pairs.size() >= 20, "fewer than 20 formula pairs");
    for (const auto& [phi, phi2] : pairs) {
      auto inst = build_core_check_dp(phi, phi2);
      out.expect(is_cohesive(inst.game, opts), "not cohesive for " + phi.str() + " / " + phi2.str());
      const bool expected = !satisfiable(phi) && satisfiable(phi2);
      out.expect(core_check(inst.game, *inst.point, opts).member() == expected,
                 "disagrees on " + phi.str() + " / " + phi2.str());
    }
    out.info("integer core check: " + std::to_string(pairs.size()) + " pairs");
  });
  section(out, "bargaining check versus forall-exists validity", [&] {
    const auto qbfs = template_qbfs(Quantifier::Forall, Quantifier::Exists);
    for (const auto& h : qbfs) {
      auto inst = build_bargaining_check(h);
      out.expect(is_cohesive(inst.game, opts), "not cohesive for " + h.str());
      out.expect(bargaining_check(inst.game, *inst.point, opts).member() == qbf_valid(h), "disagrees on " + h.str());
    }
    out.info("bargaining check: " + std::to_string(qbfs.size()) + " formulas");
  });
  section(out, "core emptiness versus exists-forall validity", [&] {
    const auto qbfs = template_qbfs(Quantifier::Exists, Quantifier::Forall);
    for (const auto& f : qbfs) {
      auto inst = build_core_nonempty(f);
      out.expect(is_cohesive(inst.game, opts), "not cohesive for " + f.str());
      out.expect(!core_nonempty(inst.game, opts).empty() == qbf_valid(f), "disagrees on " + f.str());
    }
    out.info("core emptiness: " + std::to_string(qbfs.size()) + " formulas");
  });
  section(out, "bargaining set emptiness smoke pair", [&] {
    SolverOptions wide = opts;
    wide.max_bargaining_players = 8;
    for (const auto* name : {"exists_forall_exists_valid.qbf", "exists_forall_exists_invalid.qbf"}) {
      const auto p = read_qbf_file(fixture_path(name));
      auto inst = build_bs_nonempty(p);
      out.expect(is_cohesive(inst.game, opts), std::string("not cohesive for ") + name);
      out.expect(!bargaining_nonempty(inst.game, wide).empty() == qbf_valid(p), std::string("disagrees on ") + name);
    }
  });
}

void oracles(Outcome& out, const SolverOptions& opts) {
  section(out, "integer games against enumeration", [&] {
    std::mt19937 rng(2025);
    int games = 0, points = 0, nonempty = 0;
    for (; games < 120; ++games) {
      std::uniform_int_distribution<std::size_t> players(2, 3), rows(0, 2);
      std::uniform_int_distribution<long> bound(1, 3);
      const std::size_t n = players(rng);
      const long hi = bound(rng);
      auto g = random_game(rng, n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        g.lc().set_domain(i, Domain::Integer);
        g.lc().add_row({Term{i, R(1)}}, RawRelation::GE, R(0));
        g.lc().add_row({Term{i, R(1)}}, RawRelation::LE, R(hi));
      }
      for (std::size_t k = rows(rng); k > 0; --k) g.lc().add_row(random_row(rng, n, 2, 4, false));
      GridOracle oracle(g, hi);
      bool any = false;
      for (const auto& x : oracle.omega) {
        ++points;
        const bool expected = oracle.core(x);
        any = any || expected;
        out.expect(core_check(g, P(g, x), opts).member() == expected,
                   "game " + std::to_string(games) + ": core check disagrees at " + show(x));
      }
      auto r = core_nonempty(g, opts);
      out.expect(r.empty() == !any, "game " + std::to_string(games) + ": core emptiness disagrees");
      if (r.witness) out.expect(oracle.core(values_of(g, *r.witness)), "core witness rejected by enumeration");
      nonempty += any;
    }
    out.info(std::to_string(games) + " integer games, " + std::to_string(points) + " grid points, " +
             std::to_string(nonempty) + " with a nonempty core");
  });
  section(out, "projection against direct feasibility", [&] {
    std::mt19937 rng(77);
    int samples = 0, inside = 0, systems = 0;
    for (; systems < 120; ++systems) {
      const std::size_t dim = 2 + static_cast<std::size_t>(systems % 3);
      Cell c = random_cell(rng, dim, 2 + static_cast<std::size_t>(systems % 3));
      std::vector<std::size_t> keep{0};
      if (dim > 2) keep.push_back(dim - 1);
      SemilinearSet s(names(dim));
      s.add_cell(c);
      std::vector<std::string> keep_names;
      for (auto v : keep) keep_names.push_back(s.scope()[v]);
      const SemilinearSet proj = project(s, keep_names, opts);
      // Half the samples sit near a point of the cell so both answers occur.
      auto w = lp_feasible(c, opts).witness;
      for (int q = 0; q < 10; ++q, ++samples) {
        auto p = random_point(rng, keep.size(), 2, 4);
        if (w && q % 2 == 0) {
          for (std::size_t j = 0; j < keep.size(); ++j) p[j] = (*w)[keep[j]] + p[j] / R(8);
        }
        Cell fixed = c;
        for (std::size_t j = 0; j < keep.size(); ++j) {
          fixed.rows.push_back(LinearRow{{Term{keep[j], R(1)}}, Relation::EQ, p[j]});
        }
        const bool direct = lp_feasible(fixed, opts).feasible();
        inside += direct;
        out.expect(proj.contains(p) == direct, "system " + std::to_string(systems) + ": disagrees at " + show(p));
      }
    }
    out.expect(samples >= 1000, "fewer than 1000 samples");
    out.info(std::to_string(systems) + " systems, " + std::to_string(samples) + " samples, " +
             std::to_string(inside) + " inside");
  });
  section(out, "Kalai excess without constraints", [&] {
    std::mt19937 rng(5);
    int games = 0;
    for (; games < 120; ++games) {
      std::uniform_int_distribution<std::size_t> players(1, 4);
      auto g = random_game(rng, players(rng), 0);
      auto x = random_point(rng, g.n(), 3, 3);
      for (std::uint64_t b = 1; b < (std::uint64_t{1} << g.n()); ++b) {
        Coalition s(b);
        auto e = excess_kalai(g, s, P(g, x), opts);
        out.expect(e.is_finite() && e.value == g.worth(s) - coalition_sum(s, x),
                   "game " + std::to_string(games) + ": excess of " + show(g, s) + " is " + e.str());
      }
    }
    out.info(std::to_string(games) + " TU games");
  });
}

void relations(Outcome& out, const SolverOptions& opts) {
  int checked = 0, skipped = 0;
  auto run = [&](const std::string& label, const ConstrainedGame& g) {
    for (const auto& c : relation_battery(g, opts)) {
      ++checked;
      if (c.status == RelationCheck::Status::Skipped) ++skipped;
      out.expect(c.status != RelationCheck::Status::Violated, label + ": " + c.name + " violated " + c.detail);
    }
  };
  int fixtures = 0;
  section(out, "fixtures", [&] {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(CGAME_FIXTURE_DIR)) {
      if (e.path().extension() == ".cg") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      run(f.stem().string(), read_game_file(f.string()).game);
      ++fixtures;
    }
  });
  int games = 0;
  section(out, "random games", [&] {
    std::mt19937 rng(711);
    std::uniform_int_distribution<std::size_t> rows(0, 2);
    for (; games < 60; ++games) run("random game " + std::to_string(games), random_game(rng, 3, rows(rng)));
  });
  out.info(std::to_string(fixtures) + " fixtures, " + std::to_string(games) + " random games, " +
           std::to_string(checked) + " relations checked, " + std::to_string(skipped) + " skipped");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "split pair: core, nucleolus, Shapley and NTU checks", 1, split_pair},
      {2, "empty core restored by a cap", 5, empty_core},
      {3, "unique imputation and the bargaining set", 30, unique_imputation},
      {4, "bargaining verdict flips", 120, verdict_flips},
      {5, "kernel shift under pairwise caps", 5, kernel_shift},
      {6, "Shapley shift under a pair cap", 1, shapley_shift},
      {7, "strict cap: no nucleolus", 1, strict_cap},
      {8, "coin box, pair demand and hypercube", 5, examples},
      {9, "reduction equivalence batteries", 300, reductions},
      {10, "oracle cross-checks", 120, oracles},
      {11, "relationship battery", 120, relations},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    SolverOptions opts;
    opts.deadline = Deadline::after(std::chrono::duration<double>(c.budget_seconds));
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out, opts);
    } catch (const TimeLimitExceeded& e) {
      out.failures.push_back(std::string("time limit: ") + e.what());
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("unexpected error: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.budget_seconds) out.failures.push_back("over budget");
    const bool pass = out.failures.empty();
    failed += !pass;
    std::printf("criterion %2d: %s  %s (%.2f s, budget %.0f s)\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(),
                elapsed, c.budget_seconds);
    for (const auto& f : out.failures) std::printf("    fail: %s\n", f.c_str());
    for (const auto& n : out.notes) std::printf("    info: %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
