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
#include "cgame/relations.hpp"

#include <algorithm>
#include <functional>

#include "cgame/errors.hpp"
#include "cgame/stability.hpp"
#include "cgame/values.hpp"

namespace cgame {

std::string_view to_string(RelationCheck::Status s) {
  switch (s) {
    case RelationCheck::Status::Holds: return "holds";
    case RelationCheck::Status::Violated: return "violated";
    case RelationCheck::Status::Skipped: return "skipped";
  }
  return "?";
}

namespace {

using Status = RelationCheck::Status;

// Runs body; resource limits and unsupported cases turn into Skipped, except
// for the time limit, which ends the whole battery.
RelationCheck guarded(std::string name, const std::function<void(RelationCheck&)>& body) {
  RelationCheck c{std::move(name), Status::Holds, ""};
  try {
    body(c);
  } catch (const TimeLimitExceeded&) {
    throw;
  } catch (const Unsupported& e) {
    c.status = Status::Skipped;
    c.detail = e.what();
  } catch (const ResourceLimit& e) {
    c.status = Status::Skipped;
    c.detail = e.what();
  }
  return c;
}

void violated(RelationCheck& c, const PayoffPoint& x) {
  if (c.status == Status::Violated) return;
  c.status = Status::Violated;
  c.detail = "at " + x.str();
}

// True when the constraints have a solution with the player payoffs fixed to x.
bool extends(const ConstrainedGame& g, const PayoffPoint& x, const SolverOptions& opts) {
  return milp_feasible(substitute(g.lc(), x), opts).feasible();
}

}  // namespace

std::vector<RelationCheck> relation_battery(const ConstrainedGame& g, const SolverOptions& opts) {
  const ConstrainedGame tu = g.without_constraints();
  std::vector<RelationCheck> out;

  std::vector<PayoffPoint> points;
  auto add = [&](const std::vector<Rational>& x) {
    auto p = player_point(g, x);
    if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(std::move(p));
  };
  std::optional<PayoffPoint> core_witness;
  bool core_known = false;
  out.push_back(guarded("candidate points", [&](RelationCheck& c) {
    std::vector<std::string> missing;
    auto source = [&](const std::string& what, const std::function<void()>& f) {
      try {
        f();
      } catch (const TimeLimitExceeded&) {
        throw;
      } catch (const Error& e) {
        missing.push_back(what + " (" + e.what() + ")");
      }
    };
    source("TU core witness", [&] {
      if (auto w = core_nonempty(tu, opts).witness) add(player_values(tu, *w));
    });
    source("core witness", [&] {
      core_witness = core_nonempty(g, opts).witness;
      core_known = true;
      if (core_witness) add(player_values(g, *core_witness));
    });
    source("TU nucleolus", [&] { add(tu_nucleolus(g.n(), g.worth_function(), opts)); });
    source("TU Shapley value", [&] { add(tu_shapley(g.n(), g.worth_function())); });
    c.detail = std::to_string(points.size()) + " points";
    for (const auto& m : missing) c.detail += "; no " + m;
  }));

  out.push_back(guarded("individual rationality carries over from the TU game", [&](RelationCheck& c) {
    for (const auto& x : points) {
      if (is_individually_rational(tu, x, opts) && !is_individually_rational(g, x, opts)) violated(c, x);
    }
  }));
  out.push_back(guarded("TU imputations that satisfy the constraints are imputations", [&](RelationCheck& c) {
    for (const auto& x : points) {
      if (is_imputation(tu, x, opts) && extends(g, x, opts) && !is_imputation(g, x, opts)) violated(c, x);
    }
  }));
  out.push_back(guarded("TU core points that are imputations are in the core", [&](RelationCheck& c) {
    for (const auto& x : points) {
      if (core_check(tu, x, opts).member() && is_imputation(g, x, opts) && !core_check(g, x, opts).member()) {
        violated(c, x);
      }
    }
  }));
  out.push_back(guarded("core points are in the bargaining set", [&](RelationCheck& c) {
    for (const auto& x : points) {
      if (core_check(g, x, opts).member() && !bargaining_check(g, x, opts).member()) violated(c, x);
    }
  }));

  std::optional<PayoffPoint> nu;
  out.push_back(guarded("nucleolus is an imputation", [&](RelationCheck& c) {
    nu = nucleolus(g, opts);
    if (!is_imputation(g, *nu, opts)) violated(c, *nu);
  }));
  if (nu) {
    out.push_back(guarded("nucleolus is in the kernel", [&](RelationCheck& c) {
      if (!kernel_check(g, *nu, opts).ok) violated(c, *nu);
    }));
    out.push_back(guarded("nucleolus is in a nonempty core", [&](RelationCheck& c) {
      if (!core_known) {
        c.status = Status::Skipped;
        c.detail = "core was not computed";
      } else if (!core_witness) {
        c.detail = "core is empty";
      } else if (!core_check(g, *nu, opts).member()) {
        violated(c, *nu);
      }
    }));
  }
  return out;
}

}  // namespace cgame
