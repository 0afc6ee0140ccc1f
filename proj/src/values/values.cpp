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
#include "cgame/values.hpp"

#include <algorithm>

#include "cgame/errors.hpp"

namespace cgame {

std::string ExtendedRational::str() const {
  switch (kind) {
    case Kind::NegInfinity: return "-inf";
    case Kind::PosInfinity: return "+inf";
    case Kind::Finite: break;
  }
  return value.str();
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  return a.kind == b.kind && (!a.is_finite() || a.value == b.value);
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  if (!a.is_finite()) return std::strong_ordering::equal;
  return a.value <=> b.value;
}

namespace {

const Rational kOne(1);

std::string fresh_name(const ConstraintSystem& sys, std::string base) {
  while (sys.find(base)) base += "'";
  return base;
}

std::vector<Term> coalition_terms(Coalition s) {
  std::vector<Term> out;
  for (auto k : s.members()) out.push_back(Term{k, kOne});
  return out;
}

ExtendedRational from_outcome(const LPOutcome& r) {
  switch (r.kind) {
    case LPOutcome::Kind::Infeasible: return ExtendedRational::neg_infinity();
    case LPOutcome::Kind::Unbounded: return ExtendedRational::pos_infinity();
    default: return ExtendedRational::finite(r.value, r.attained);
  }
}

}  // namespace

ExtendedRational excess_kalai(const ConstrainedGame& g, Coalition s, const PayoffPoint& x,
                              const SolverOptions& opts) {
  if (s.empty()) throw InputError("excess of the empty coalition");
  ConstraintSystem sys = consequence_system(g, s);
  const auto t = sys.add_variable(Variable::real(fresh_name(sys, "t")));
  const Rational step = kOne / Rational(static_cast<long>(s.size()));
  for (auto k : s.members()) {
    const Rational* xk = x.find(g.var(k));
    if (!xk) throw MissingAssignment(g.var(k));
    sys.add_row({Term{k, kOne}, Term{t, -step}}, RawRelation::EQ, *xk);
  }
  auto set = to_semilinear(sys, {t}, opts);
  return from_outcome(optimize_over(set, {Term{0, kOne}}, Sense::Max, opts));
}

ThetaVector theta(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts) {
  ThetaVector out;
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << g.n()); ++b) out.push_back(excess_kalai(g, Coalition(b), x, opts));
  // Stable sort keeps the bitmask order among ties.
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a > b; });
  return out;
}

bool lex_less(const ThetaVector& a, const ThetaVector& b) {
  if (a.size() != b.size()) throw LengthMismatch("theta vectors have different lengths");
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

WorthFunction tu_worth(const ConstrainedGame& g, const SolverOptions& opts) {
  if (g.is_tu()) return g.worth_function();
  auto red = tu_reduce(g, opts);
  if (!red.reducible) {
    throw NotTUReducible("the constrained game is not TU-reducible at coalition " + coalition_label(g, red.failing) +
                         (red.reason.empty() ? "" : ": " + red.reason));
  }
  return red.vprime;
}

std::vector<Rational> tu_nucleolus(std::size_t n, const WorthFunction& w, const SolverOptions& opts) {
  const Coalition grand = Coalition::grand(n);
  const std::size_t eps = n;  // index of the excess bound
  Rational floor_sum;
  for (std::size_t i = 0; i < n; ++i) floor_sum += w(Coalition::singleton(i));
  if (floor_sum > w(grand)) throw EmptyImputationSet();

  // Imputations plus coalitions whose excess is already settled.
  Cell settled{n + 1, {}};
  settled.rows.push_back(make_row(coalition_terms(grand), RawRelation::EQ, w(grand)));
  for (std::size_t i = 0; i < n; ++i) {
    settled.rows.push_back(make_row({Term{i, kOne}}, RawRelation::GE, w(Coalition::singleton(i))));
  }
  std::vector<Coalition> open;
  for (std::uint64_t b = 1; b < grand.bits(); ++b) open.push_back(Coalition(b));

  // excess(S) <= bound, i.e. x(S) >= w(S) - bound.
  auto excess_row = [&](Coalition s, std::optional<Rational> bound) {
    auto terms = coalition_terms(s);
    if (!bound) {
      terms.push_back(Term{eps, kOne});
      return make_row(std::move(terms), RawRelation::GE, w(s));
    }
    return make_row(std::move(terms), RawRelation::GE, w(s) - *bound);
  };
  auto determined = [&](const Cell& face) {
    for (std::size_t i = 0; i < n; ++i) {
      auto lo = lp_optimize({Term{i, kOne}}, face, Sense::Min, opts);
      auto hi = lp_optimize({Term{i, kOne}}, face, Sense::Max, opts);
      if (lo.value != hi.value) return false;
    }
    return true;
  };

  Cell face = settled;
  while (!open.empty()) {
    Cell lp = settled;
    for (Coalition s : open) lp.rows.push_back(excess_row(s, std::nullopt));
    auto best = lp_optimize({Term{eps, kOne}}, lp, Sense::Min, opts);
    if (best.kind != LPOutcome::Kind::Optimal) throw std::logic_error("nucleolus LP has no optimum");
    const Rational level = best.value;

    face = settled;
    for (Coalition s : open) face.rows.push_back(excess_row(s, level));
    std::vector<Coalition> still_open;
    for (Coalition s : open) {
      auto top = lp_optimize(coalition_terms(s), face, Sense::Max, opts);
      if (top.kind == LPOutcome::Kind::Optimal && w(s) - top.value == level) {
        settled.rows.push_back(make_row(coalition_terms(s), RawRelation::EQ, w(s) - level));
      } else {
        still_open.push_back(s);
      }
    }
    if (still_open.size() == open.size()) throw std::logic_error("nucleolus iteration made no progress");
    open = std::move(still_open);
    face = settled;
    for (Coalition s : open) face.rows.push_back(excess_row(s, level));
    if (determined(face)) break;
  }
  auto point = lp_feasible(face, opts);
  if (!point.witness) throw std::logic_error("nucleolus face is empty");
  point.witness->resize(n);
  return *point.witness;
}

PayoffPoint nucleolus(const ConstrainedGame& g, const SolverOptions& opts) {
  return player_point(g, tu_nucleolus(g.n(), tu_worth(g, opts), opts));
}

Rational surplus(std::size_t n, const WorthFunction& w, const std::vector<Rational>& x, std::size_t i,
                 std::size_t j) {
  if (i == j) throw InputError("surplus needs two distinct players");
  std::optional<Rational> best;
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
    Coalition s(b);
    if (!s.contains(i) || s.contains(j)) continue;
    Rational e = w(s) - coalition_sum(s, x);
    if (!best || e > *best) best = std::move(e);
  }
  return *best;
}

KernelCheck kernel_check(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts) {
  const WorthFunction w = tu_worth(g, opts);
  const auto xs = player_values(g, x);
  KernelCheck out;
  for (std::size_t i = 0; i < g.n(); ++i) {
    for (std::size_t j = 0; j < g.n(); ++j) {
      if (i == j) continue;
      if (surplus(g.n(), w, xs, i, j) > surplus(g.n(), w, xs, j, i) && xs[j] != w(Coalition::singleton(j))) {
        out.ok = false;
        out.violation = std::make_pair(i, j);
        return out;
      }
    }
  }
  return out;
}

std::vector<Rational> tu_shapley(std::size_t n, const WorthFunction& w) {
  // weight[s] = s! (n - s - 1)! / n!
  std::vector<Rational> fact(n + 1, kOne);
  for (std::size_t k = 1; k <= n; ++k) fact[k] = fact[k - 1] * Rational(static_cast<long>(k));
  std::vector<Rational> phi(n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    Coalition s(b);
    const Rational ws = w(s);
    for (std::size_t i = 0; i < n; ++i) {
      if (s.contains(i)) continue;
      const Rational weight = fact[s.size()] * fact[n - s.size() - 1] / fact[n];
      phi[i] += weight * (w(s.with(i)) - ws);
    }
  }
  return phi;
}

PayoffPoint shapley(const ConstrainedGame& g, const SolverOptions& opts) {
  return player_point(g, tu_shapley(g.n(), tu_worth(g, opts)));
}

ShapleyNTUResult shapley_ntu_check(const ConstrainedGame& g, const PayoffPoint& x,
                                   const std::vector<Rational>& lambda, const SolverOptions& opts) {
  if (lambda.size() != g.n()) throw LengthMismatch("lambda needs one weight per player");
  for (const auto& l : lambda) {
    if (l <= Rational()) throw NonpositiveLambda("lambda weights must be positive");
  }
  ShapleyNTUResult out;
  std::map<std::uint64_t, Rational> scaled;
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << g.n()); ++b) {
    Coalition s(b);
    std::vector<Term> objective;
    std::size_t k = 0;
    for (auto i : s.members()) objective.push_back(Term{k++, lambda[i]});
    auto r = optimize_over(consequence_set(g, s, opts), objective, Sense::Max, opts);
    if (r.kind != LPOutcome::Kind::Optimal) {
      out.kind = ShapleyNTUResult::Kind::GameUndefined;
      out.coalition = s;
      return out;
    }
    scaled[b] = r.value;
  }
  if (!is_consequence(g, g.grand(), x, opts)) {
    out.kind = ShapleyNTUResult::Kind::NotConsequence;
    return out;
  }
  const auto phi = tu_shapley(g.n(), WorthFunction::table(std::move(scaled)));
  const auto xs = player_values(g, x);
  for (std::size_t i = 0; i < g.n(); ++i) {
    if (lambda[i] * xs[i] != phi[i]) {
      out.kind = ShapleyNTUResult::Kind::ValueMismatch;
      out.player = i;
      return out;
    }
  }
  return out;
}

}  // namespace cgame
