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
#include "cgame/reductions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cgame/errors.hpp"

namespace cgame {

BoolExpr bconst(bool value) { return BoolExpr{BoolExpr::Kind::Const, value, {}, {}}; }
BoolExpr bvar(std::string name) { return BoolExpr{BoolExpr::Kind::Var, false, std::move(name), {}}; }
BoolExpr bnot(BoolExpr e) { return BoolExpr{BoolExpr::Kind::Not, false, {}, {std::move(e)}}; }
BoolExpr band(std::vector<BoolExpr> args) { return BoolExpr{BoolExpr::Kind::And, false, {}, std::move(args)}; }
BoolExpr bor(std::vector<BoolExpr> args) { return BoolExpr{BoolExpr::Kind::Or, false, {}, std::move(args)}; }

std::string BoolExpr::str() const {
  switch (kind) {
    case Kind::Const: return value ? "true" : "false";
    case Kind::Var: return name;
    case Kind::Not: return "!" + args[0].str();
    case Kind::And:
    case Kind::Or: {
      if (args.empty()) return kind == Kind::And ? "true" : "false";
      if (args.size() == 1) return args[0].str();
      std::string out = "(";
      for (std::size_t k = 0; k < args.size(); ++k) {
        if (k) out += kind == Kind::And ? " & " : " | ";
        out += args[k].str();
      }
      return out + ")";
    }
  }
  return "?";
}

namespace {

void collect_vars(const BoolExpr& e, std::vector<std::string>& out) {
  if (e.kind == BoolExpr::Kind::Var) {
    if (std::find(out.begin(), out.end(), e.name) == out.end()) out.push_back(e.name);
    return;
  }
  for (const auto& a : e.args) collect_vars(a, out);
}

constexpr std::size_t kMaxBruteForceVars = 20;

}  // namespace

std::vector<std::string> vars(const BoolExpr& e) {
  std::vector<std::string> out;
  collect_vars(e, out);
  return out;
}

bool eval_bool(const BoolExpr& e, const Assignment& a) {
  switch (e.kind) {
    case BoolExpr::Kind::Const: return e.value;
    case BoolExpr::Kind::Var: {
      auto it = a.find(e.name);
      if (it == a.end()) throw UnboundVariable(e.name);
      return it->second;
    }
    case BoolExpr::Kind::Not: return !eval_bool(e.args[0], a);
    case BoolExpr::Kind::And:
      return std::all_of(e.args.begin(), e.args.end(), [&](const BoolExpr& x) { return eval_bool(x, a); });
    case BoolExpr::Kind::Or:
      return std::any_of(e.args.begin(), e.args.end(), [&](const BoolExpr& x) { return eval_bool(x, a); });
  }
  return false;
}

bool satisfiable(const BoolExpr& e) {
  const auto vs = vars(e);
  if (vs.size() > kMaxBruteForceVars) throw TooManyVariables("formula has more than 20 variables");
  Assignment a;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vs.size()); ++bits) {
    for (std::size_t k = 0; k < vs.size(); ++k) a[vs[k]] = (bits >> k) & 1u;
    if (eval_bool(e, a)) return true;
  }
  return false;
}

std::vector<std::string> Qbf::all_vars() const {
  std::vector<std::string> out;
  for (const auto& b : prefix) out.insert(out.end(), b.vars.begin(), b.vars.end());
  return out;
}

std::string Qbf::str() const {
  std::string out;
  for (const auto& b : prefix) {
    out += b.q == Quantifier::Exists ? "exists" : "forall";
    for (const auto& v : b.vars) out += " " + v;
    out += "\n";
  }
  return out + "matrix " + matrix.str() + "\n";
}

void validate(const Qbf& q) {
  std::set<std::string> seen;
  for (std::size_t k = 0; k < q.prefix.size(); ++k) {
    const auto& b = q.prefix[k];
    if (b.vars.empty()) throw BadPrefix("empty quantifier block");
    if (k > 0 && q.prefix[k - 1].q == b.q) throw BadPrefix("quantifier blocks must alternate");
    for (const auto& v : b.vars) {
      if (!seen.insert(v).second) throw BadPrefix("variable " + v + " is quantified twice");
    }
  }
  for (const auto& v : vars(q.matrix)) {
    if (!seen.count(v)) throw UnboundVariable(v);
  }
}

bool qbf_valid(const Qbf& q) {
  validate(q);
  const auto all = q.all_vars();
  if (all.size() > kMaxBruteForceVars) throw TooManyVariables("QBF has more than 20 variables");
  Assignment a;
  // Expands block by block, variable by variable.
  std::function<bool(std::size_t, std::size_t)> solve = [&](std::size_t block, std::size_t var) -> bool {
    if (block == q.prefix.size()) return eval_bool(q.matrix, a);
    const auto& b = q.prefix[block];
    if (var == b.vars.size()) return solve(block + 1, 0);
    const bool exists = b.q == Quantifier::Exists;
    for (bool value : {false, true}) {
      a[b.vars[var]] = value;
      if (solve(block, var + 1) == exists) return exists;
    }
    return !exists;
  };
  return solve(0, 0);
}

std::string negated_player(const std::string& var) { return "neg_" + var; }

namespace {

// Players for literals of `vs` (each variable followed by its negation) then
// the named extra players.
struct LiteralGame {
  std::vector<std::string> vs;
  std::vector<std::string> players;

  LiteralGame(std::vector<std::string> variables, const std::vector<std::string>& extra) : vs(std::move(variables)) {
    for (const auto& v : vs) {
      players.push_back(v);
      players.push_back(negated_player(v));
    }
    players.insert(players.end(), extra.begin(), extra.end());
    std::set<std::string> distinct(players.begin(), players.end());
    if (distinct.size() != players.size()) throw SpecInvalid("variable names clash with player names");
  }

  std::size_t pos(std::size_t k) const { return 2 * k; }
  std::size_t neg(std::size_t k) const { return 2 * k + 1; }
  std::size_t extra(std::size_t k) const { return 2 * vs.size() + k; }
  Coalition literals() const { return Coalition::grand(2 * vs.size()); }
  std::size_t index(const std::string& v) const {
    return static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin());
  }

  // Exactly one literal of each variable in `which` (indices into vs).
  bool consistent(Coalition s, const std::vector<std::size_t>& which) const {
    for (auto k : which) {
      if (s.contains(pos(k)) == s.contains(neg(k))) return false;
    }
    return true;
  }

  Assignment sigma(Coalition s) const {
    Assignment a;
    for (std::size_t k = 0; k < vs.size(); ++k) a[vs[k]] = s.contains(pos(k));
    return a;
  }

  std::vector<std::size_t> indices(const std::vector<std::string>& names) const {
    std::vector<std::size_t> out;
    for (const auto& n : names) out.push_back(index(n));
    return out;
  }

  std::vector<std::size_t> all() const {
    std::vector<std::size_t> out(vs.size());
    for (std::size_t k = 0; k < vs.size(); ++k) out[k] = k;
    return out;
  }
};

std::vector<std::string> require_prefix(const Qbf& q, std::initializer_list<Quantifier> shape, const char* what) {
  validate(q);
  if (q.prefix.size() != shape.size() ||
      !std::equal(shape.begin(), shape.end(), q.prefix.begin(), [](Quantifier a, const QuantBlock& b) {
        return a == b.q;
      })) {
    throw BadPrefix(std::string("expected a prefix of the form ") + what);
  }
  return q.all_vars();
}

void add_sum(ConstraintSystem& lc, std::vector<std::size_t> vars, RawRelation rel, Rational rhs) {
  std::vector<Term> terms;
  for (auto v : vars) terms.push_back(Term{v, Rational(1)});
  lc.add_row(std::move(terms), rel, std::move(rhs));
}

// Rows x_X + x_negX = 1, x_X >= 0, x_negX >= 0 for each variable of the
// first block.
void add_literal_split(ConstraintSystem& lc, const LiteralGame& lg, const std::vector<std::string>& block) {
  for (auto k : lg.indices(block)) {
    add_sum(lc, {lg.pos(k), lg.neg(k)}, RawRelation::EQ, Rational(1));
    add_sum(lc, {lg.pos(k)}, RawRelation::GE, Rational());
    add_sum(lc, {lg.neg(k)}, RawRelation::GE, Rational());
  }
}

struct Literal {
  std::string var;
  bool negated = false;
};

std::optional<Literal> as_literal(const BoolExpr& e) {
  if (e.kind == BoolExpr::Kind::Var) return Literal{e.name, false};
  if (e.kind == BoolExpr::Kind::Not && e.args[0].kind == BoolExpr::Kind::Var) return Literal{e.args[0].name, true};
  return std::nullopt;
}

std::vector<std::vector<Literal>> three_cnf_clauses(const BoolExpr& e) {
  std::vector<const BoolExpr*> clauses;
  if (e.kind == BoolExpr::Kind::And) {
    for (const auto& c : e.args) clauses.push_back(&c);
  } else {
    clauses.push_back(&e);
  }
  if (clauses.empty()) throw NotThreeCnf("no clauses");
  std::vector<std::vector<Literal>> out;
  for (const auto* c : clauses) {
    if (c->kind != BoolExpr::Kind::Or || c->args.size() != 3) throw NotThreeCnf("clause " + c->str() + " does not have three literals");
    std::vector<Literal> lits;
    for (const auto& a : c->args) {
      auto l = as_literal(a);
      if (!l) throw NotThreeCnf("clause " + c->str() + " contains a non-literal");
      lits.push_back(*l);
    }
    out.push_back(std::move(lits));
  }
  return out;
}

}  // namespace

ReductionInstance build_core_check(const BoolExpr& phi) {
  // One player per variable plus w and e.
  const auto vs = vars(phi);
  std::vector<std::string> players = vs;
  for (const auto& v : vs) {
    if (v == "w" || v == "e") throw SpecInvalid("variable names clash with player names");
  }
  players.push_back("w");
  players.push_back("e");
  const std::size_t w = vs.size(), e = vs.size() + 1;
  const Coalition grand = Coalition::grand(players.size());
  auto worth = [phi, vs, w, e, grand](Coalition s) {
    if (s == grand) return Rational(1);
    if (s.contains(e) || !s.contains(w)) return Rational();
    Assignment a;
    for (std::size_t k = 0; k < vs.size(); ++k) a[vs[k]] = s.contains(k);
    return eval_bool(phi, a) ? Rational(1) : Rational();
  };
  ConstrainedGame g(players, WorthFunction::oracle("core-check(" + phi.str() + ")", worth));
  PayoffPoint x;
  for (std::size_t i = 0; i < g.n(); ++i) x.set(g.var(i), i == e ? Rational(1) : Rational());
  return ReductionInstance{std::move(g), std::move(x), "core member iff the formula is unsatisfiable"};
}

ReductionInstance build_core_check_dp(const BoolExpr& phi, const BoolExpr& phi2) {
  auto clauses = three_cnf_clauses(phi2);
  const auto left = vars(phi);
  const auto right = vars(phi2);
  for (const auto& v : right) {
    if (std::find(left.begin(), left.end(), v) != left.end()) {
      throw SpecInvalid("variable " + v + " occurs in both formulas");
    }
  }
  ReductionInstance inst = build_core_check(phi);
  ConstraintSystem& lc = inst.game.lc();
  std::map<std::string, std::size_t> t;
  for (const auto& v : right) {
    const auto idx = lc.add_variable(Variable::integer("T_" + v));
    t[v] = idx;
    lc.add_row({Term{idx, Rational(1)}}, RawRelation::GE, Rational());
    lc.add_row({Term{idx, Rational(1)}}, RawRelation::LE, Rational(1));
  }
  for (const auto& c : clauses) {
    // rho(l) is T for a positive literal and 1 - T for a negative one.
    std::map<std::size_t, Rational> coef;
    Rational rhs(1);
    for (const auto& l : c) {
      if (l.negated) {
        coef[t[l.var]] -= Rational(1);
        rhs -= Rational(1);
      } else {
        coef[t[l.var]] += Rational(1);
      }
    }
    std::vector<Term> terms;
    for (auto& [v, a] : coef) terms.push_back(Term{v, a});
    lc.add_row(std::move(terms), RawRelation::GE, rhs);
  }
  inst.claim = "core member iff the first formula is unsatisfiable and the second satisfiable";
  return inst;
}

ReductionInstance build_bargaining_check(const Qbf& input) {
  require_prefix(input, {Quantifier::Forall, Quantifier::Exists}, "forall/exists");
  Qbf h = input;
  if (h.prefix[0].vars.size() == 1) {
    // With one universal variable its literal players would be singletons of
    // worth 1 and the checked point would not be individually rational. An
    // unused universal variable keeps validity unchanged.
    const auto all = h.all_vars();
    std::string pad = "Y_pad";
    while (std::find(all.begin(), all.end(), pad) != all.end()) pad += "'";
    h.prefix[0].vars.push_back(pad);
  }
  const auto& ys = h.prefix[0].vars;
  LiteralGame lg(h.all_vars(), {"a", "a_prime"});
  const std::size_t a = lg.extra(0), ap = lg.extra(1);
  const std::size_t n = ys.size();
  const auto yidx = lg.indices(ys);
  const Coalition grand = Coalition::grand(lg.players.size());
  const Coalition lits = lg.literals();
  auto worth = [lg, matrix = h.matrix, yidx, n, a, ap, grand, lits](Coalition s) {
    if (s == grand) return Rational(2);
    if (s.size() == n && s.subset_of(lits) && lg.consistent(s, yidx)) return Rational(1);
    if (s.contains(a) != s.contains(ap) && (s - lits).size() == 1 && lg.consistent(s, lg.all()) &&
        eval_bool(matrix, lg.sigma(s))) {
      return Rational(1);
    }
    return Rational();
  };
  ConstrainedGame g(lg.players, WorthFunction::oracle("bargaining-check", worth));
  PayoffPoint x;
  for (std::size_t i = 0; i < g.n(); ++i) x.set(g.var(i), (i == a || i == ap) ? Rational(1) : Rational());
  return ReductionInstance{std::move(g), std::move(x), "bargaining-set member iff the QBF is valid"};
}

ReductionInstance build_core_nonempty(const Qbf& f) {
  require_prefix(f, {Quantifier::Exists, Quantifier::Forall}, "exists/forall");
  const auto& xs = f.prefix[0].vars;
  LiteralGame lg(f.all_vars(), {"a"});
  const Rational n(static_cast<long>(xs.size()));
  const Coalition grand = Coalition::grand(lg.players.size());
  const Coalition lits = lg.literals();
  auto worth = [lg, matrix = f.matrix, n, grand, lits](Coalition s) {
    if (s == grand) return Rational(3) * n;
    if (s.subset_of(lits) && lg.consistent(s, lg.all()) && !eval_bool(matrix, lg.sigma(s))) return n;
    return Rational();
  };
  ConstrainedGame g(lg.players, WorthFunction::oracle("core-nonempty", worth));
  add_literal_split(g.lc(), lg, xs);
  add_sum(g.lc(), {lg.extra(0)}, RawRelation::EQ, Rational(2) * n);
  return ReductionInstance{std::move(g), std::nullopt, "core nonempty iff the QBF is valid"};
}

ReductionInstance build_bs_nonempty(const Qbf& p, std::size_t max_players) {
  require_prefix(p, {Quantifier::Exists, Quantifier::Forall, Quantifier::Exists}, "exists/forall/exists");
  const auto& xs = p.prefix[0].vars;
  const auto& ys = p.prefix[1].vars;
  LiteralGame lg(p.all_vars(), {"a", "w"});
  if (lg.players.size() > max_players) {
    throw PlayerLimitExceeded("instance has " + std::to_string(lg.players.size()) + " players, cap is " +
                              std::to_string(max_players));
  }
  const std::size_t a = lg.extra(0), w = lg.extra(1);
  const Rational m(static_cast<long>(xs.size()));
  const std::size_t n = ys.size();
  const auto yidx = lg.indices(ys);
  std::vector<Coalition> pairs;
  for (auto k : lg.indices(xs)) pairs.push_back(Coalition::singleton(lg.pos(k)).with(lg.neg(k)));
  const Coalition grand = Coalition::grand(lg.players.size());
  const Coalition lits = lg.literals();
  auto worth = [lg, matrix = p.matrix, m, n, yidx, pairs, a, w, grand, lits](Coalition s) {
    if (s == grand) return m + Rational(1);
    if (s.contains(w) && s.size() == n + 1 && s.without(w).subset_of(lits) && lg.consistent(s, yidx)) {
      return Rational(1);
    }
    if (std::find(pairs.begin(), pairs.end(), s) != pairs.end()) return Rational(1);
    if (s.contains(a) && s.without(a).subset_of(lits) && lg.consistent(s, lg.all()) &&
        eval_bool(matrix, lg.sigma(s))) {
      return Rational(1);
    }
    return Rational();
  };
  ConstrainedGame g(lg.players, WorthFunction::oracle("bargaining-nonempty", worth));
  add_literal_split(g.lc(), lg, xs);
  add_sum(g.lc(), {a}, RawRelation::EQ, Rational(1));
  return ReductionInstance{std::move(g), std::nullopt, "bargaining set nonempty iff the QBF is valid"};
}

// ---------------------------------------------------------------------------
// Template batteries

namespace {

BoolExpr lit(const std::string& v, bool negated) { return negated ? bnot(bvar(v)) : bvar(v); }

// Matrices over two variables u, v.
std::vector<BoolExpr> two_var_matrices(const std::string& u, const std::string& v) {
  std::vector<BoolExpr> out;
  for (bool nu : {false, true}) out.push_back(lit(u, nu));
  for (bool nv : {false, true}) out.push_back(lit(v, nv));
  for (bool nu : {false, true}) {
    for (bool nv : {false, true}) {
      out.push_back(band({lit(u, nu), lit(v, nv)}));
      out.push_back(bor({lit(u, nu), lit(v, nv)}));
    }
  }
  out.push_back(bor({band({bvar(u), bvar(v)}), band({bnot(bvar(u)), bnot(bvar(v))})}));
  out.push_back(bor({band({bvar(u), bnot(bvar(v))}), band({bnot(bvar(u)), bvar(v)})}));
  out.push_back(band({bvar(u), bnot(bvar(u))}));
  out.push_back(band({bvar(v), bnot(bvar(v))}));
  out.push_back(bor({bvar(u), bnot(bvar(u))}));
  out.push_back(bconst(true));
  out.push_back(bconst(false));
  return out;
}

}  // namespace

std::vector<BoolExpr> template_formulas() {
  const std::vector<std::string> x{"X1", "X2", "X3"};
  std::vector<BoolExpr> out;
  for (const auto& v : x) {
    out.push_back(lit(v, false));
    out.push_back(lit(v, true));
    out.push_back(band({bvar(v), bnot(bvar(v))}));
    out.push_back(bor({bvar(v), bnot(bvar(v))}));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      for (bool ni : {false, true}) {
        for (bool nj : {false, true}) {
          out.push_back(band({lit(x[i], ni), lit(x[j], nj)}));
          out.push_back(bor({lit(x[i], ni), lit(x[j], nj)}));
          // Unsatisfiable: a literal, its complement and a third conjunct.
          out.push_back(band({lit(x[i], ni), lit(x[j], nj), lit(x[i], !ni)}));
        }
      }
    }
  }
  for (int signs = 0; signs < 8; ++signs) {
    auto a = lit(x[0], signs & 1), b = lit(x[1], signs & 2), c = lit(x[2], signs & 4);
    out.push_back(band({bor({a, b}), c}));
    out.push_back(bor({band({a, b}), c}));
    out.push_back(band({a, b, c}));
  }
  return out;
}

std::vector<std::pair<BoolExpr, BoolExpr>> template_formula_pairs() {
  const std::vector<BoolExpr> left{
      bvar("X1"),
      band({bvar("X1"), bnot(bvar("X1"))}),
      band({bvar("X1"), bvar("X2")}),
      band({bor({bvar("X1"), bvar("X2")}), bnot(bvar("X1")), bnot(bvar("X2"))}),
      bor({bnot(bvar("X1")), bvar("X2")}),
      band({bvar("X2"), bnot(bvar("X2")), bvar("X1")}),
  };
  auto clause = [](Literal a, Literal b, Literal c) {
    return bor({lit(a.var, a.negated), lit(b.var, b.negated), lit(c.var, c.negated)});
  };
  const Literal y1{"Y1", false}, ny1{"Y1", true}, y2{"Y2", false}, ny2{"Y2", true};
  const std::vector<BoolExpr> right{
      band({clause(y1, y1, y1)}),
      band({clause(y1, y1, y1), clause(ny1, ny1, ny1)}),
      band({clause(y1, ny2, y2)}),
      band({clause(ny1, y2, y2), clause(y1, y1, y1)}),
      band({clause(ny1, ny1, ny2), clause(y2, y2, y2)}),
  };
  std::vector<std::pair<BoolExpr, BoolExpr>> out;
  for (const auto& l : left) {
    for (const auto& r : right) out.emplace_back(l, r);
  }
  return out;
}

std::vector<Qbf> template_qbfs(Quantifier first, Quantifier second) {
  const std::string u = first == Quantifier::Exists ? "X1" : "Y1";
  const std::string v = second == Quantifier::Exists ? "Z1" : "Y1";
  std::vector<Qbf> out;
  for (auto& m : two_var_matrices(u, v)) {
    out.push_back(Qbf{{QuantBlock{first, {u}}, QuantBlock{second, {v}}}, std::move(m)});
  }
  return out;
}

}  // namespace cgame
