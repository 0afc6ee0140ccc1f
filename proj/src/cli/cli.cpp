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
#include "cgame/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "cgame/errors.hpp"
#include "cgame/io.hpp"
#include "cgame/reductions.hpp"
#include "cgame/relations.hpp"
#include "cgame/stability.hpp"
#include "cgame/values.hpp"

namespace cgame::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Args {
  std::string game;
  std::string point;
  std::string lambda;
  std::string coalition;
  std::string kind;
  std::string formula;
  std::string formula2;
  std::string out;
  bool json = false;
  std::uint64_t max_int_enum = 1'000'000;
  double time_limit = 0;
  unsigned threads = 1;
  std::size_t max_bargaining_players = 0;  // 0: library default
};

struct Reply {
  Json j = Json::object();
  std::ostringstream text;
};

struct Context {
  Args args;
  SolverOptions opts;

  GameDocument doc() const { return read_game_file(args.game); }
  PayoffPoint point() const {
    if (args.point.empty()) throw InputError("this command needs --point");
    return parse_point(args.point);
  }
};

Json point_json(const PayoffPoint& p) {
  Json j = Json::object();
  for (const auto& [name, value] : p.entries()) j[name] = value.str();
  return j;
}


Json coalition_json(const ConstrainedGame& g, Coalition s) {
  Json j = Json::array();
  for (auto i : s.members()) j.push_back(g.players()[i]);
  return j;
}

void verdict(Reply& r, const std::string& v) {
  r.j["verdict"] = v;
  r.text << v;
}

void emit_failure(Reply& r, const ConstrainedGame& g, ImputationFailure f, std::optional<std::size_t> player) {
  r.j["failure"] = std::string(to_string(f));
  r.text << ": " << to_string(f);
  if (player) {
    r.j["player"] = g.players()[*player];
    r.text << " (player " << g.players()[*player] << ")";
  }
}

void nonempty_reply(Reply& r, const NonemptinessResult& res) {
  if (res.witness) {
    verdict(r, "Witness");
    r.j["witness"] = point_json(*res.witness);
    r.text << ": " << format_point(*res.witness);
  } else {
    verdict(r, "Empty");
  }
}

// Commands -------------------------------------------------------------------

void check_imputation_cmd(const Context& c, Reply& r) {
  auto doc = c.doc();
  auto check = check_imputation(doc.game, c.point(), c.opts);
  if (check.ok()) {
    verdict(r, "Imputation");
    return;
  }
  verdict(r, "NotImputation");
  emit_failure(r, doc.game, check.failure, check.player);
}

void check_core_cmd(const Context& c, Reply& r) {
  auto doc = c.doc();
  auto v = core_check(doc.game, c.point(), c.opts);
  switch (v.kind) {
    case CoreVerdict::Kind::Member:
      verdict(r, "Member");
      break;
    case CoreVerdict::Kind::NotImputation:
      verdict(r, "NotImputation");
      emit_failure(r, doc.game, v.failure, std::nullopt);
      break;
    case CoreVerdict::Kind::Blocked:
      verdict(r, "Blocked");
      r.j["coalition"] = coalition_json(doc.game, v.coalition);
      r.j["y"] = point_json(v.y);
      r.text << ": " << coalition_label(doc.game, v.coalition) << " can reach " << format_point(v.y);
      break;
  }
}

void core_nonempty_cmd(const Context& c, Reply& r) { nonempty_reply(r, core_nonempty(c.doc().game, c.opts)); }

void check_bargaining_cmd(const Context& c, Reply& r) {
  auto doc = c.doc();
  const auto& g = doc.game;
  auto v = bargaining_check(g, c.point(), c.opts);
  switch (v.kind) {
    case BargainingVerdict::Kind::Member:
      verdict(r, "Member");
      break;
    case BargainingVerdict::Kind::NotImputation:
      verdict(r, "NotImputation");
      emit_failure(r, g, v.failure, std::nullopt);
      break;
    case BargainingVerdict::Kind::Justified: {
      const auto& o = v.objection;
      verdict(r, "Justified");
      r.j["objector"] = g.players()[o.i];
      r.j["target"] = g.players()[o.j];
      r.j["coalition"] = coalition_json(g, o.coalition);
      r.j["y"] = point_json(o.y);
      r.text << ": player " << g.players()[o.i] << " against player " << g.players()[o.j] << " through "
             << coalition_label(g, o.coalition) << " with " << format_point(o.y);
      break;
    }
  }
}

void bargaining_nonempty_cmd(const Context& c, Reply& r) {
  nonempty_reply(r, bargaining_nonempty(c.doc().game, c.opts));
}

void excess_cmd(const Context& c, Reply& r) {
  auto doc = c.doc();
  const auto& g = doc.game;
  const auto x = c.point();
  std::vector<Coalition> coalitions;
  if (!c.args.coalition.empty()) {
    coalitions.push_back(parse_coalition(g, c.args.coalition));
  } else {
    for (std::uint64_t s = 1; s <= g.grand().bits(); ++s) coalitions.emplace_back(s);
  }
  verdict(r, "Excess");
  Json list = Json::array();
  for (auto s : coalitions) {
    auto e = excess_kalai(g, s, x, c.opts);
    list.push_back(Json{{"coalition", coalition_json(g, s)}, {"value", e.str()}, {"attained", e.attained}});
    r.text << "\ne(" << coalition_label(g, s) << ") = " << e.str();
    if (e.is_finite() && !e.attained) r.text << " (supremum, not attained)";
  }
  r.j["excess"] = std::move(list);
}

void theta_cmd(const Context& c, Reply& r) {
  auto doc = c.doc();
  auto th = theta(doc.game, c.point(), c.opts);
  verdict(r, "Theta");
  Json list = Json::array();
  r.text << ":";
  for (const auto& e : th) {
    list.push_back(e.str());
    r.text << " " << e.str();
  }
  r.j["theta"] = std::move(list);
}

void point_reply(Reply& r, const std::string& name, const PayoffPoint& p) {
  verdict(r, name);
  r.j["point"] = point_json(p);
  r.text << ": " << format_point(p);
}

void nucleolus_cmd(const Context& c, Reply& r) { point_reply(r, "Nucleolus", nucleolus(c.doc().game, c.opts)); }
void shapley_cmd(const Context& c, Reply& r) { point_reply(r, "Shapley", shapley(c.doc().game, c.opts)); }

void kernel_check_cmd(const Context& c, Reply& r) {
  auto doc = c.doc();
  const auto& g = doc.game;
  auto k = kernel_check(g, c.point(), c.opts);
  if (k.ok) {
    verdict(r, "Kernel");
    return;
  }
  verdict(r, "Violation");
  const auto [i, j] = *k.violation;
  r.j["i"] = g.players()[i];
  r.j["j"] = g.players()[j];
  r.text << ": player " << g.players()[i] << " outweighs player " << g.players()[j];
}

void shapley_ntu_cmd(const Context& c, Reply& r) {
  auto doc = c.doc();
  const auto& g = doc.game;
  if (c.args.lambda.empty()) throw InputError("shapley-ntu-check needs --lambda");
  auto res = shapley_ntu_check(g, c.point(), parse_rational_list(c.args.lambda), c.opts);
  if (res.accepted()) {
    verdict(r, "Accepted");
    return;
  }
  verdict(r, "Rejected");
  switch (res.kind) {
    case ShapleyNTUResult::Kind::NotConsequence:
      r.j["reason"] = "NotConsequence";
      r.text << ": the point is not feasible for the grand coalition";
      break;
    case ShapleyNTUResult::Kind::GameUndefined:
      r.j["reason"] = "GameUndefined";
      r.j["coalition"] = coalition_json(g, res.coalition);
      r.text << ": GameUndefined, the weighted sum is unbounded or unattained for "
             << coalition_label(g, res.coalition);
      break;
    case ShapleyNTUResult::Kind::ValueMismatch:
      r.j["reason"] = "ValueMismatch";
      r.j["player"] = g.players()[res.player];
      r.text << ": ValueMismatch at player " << g.players()[res.player];
      break;
    case ShapleyNTUResult::Kind::Accepted:
      break;
  }
}

void tu_reduce_cmd(const Context& c, Reply& r) {
  auto doc = c.doc();
  const auto& g = doc.game;
  auto red = tu_reduce(g, c.opts);
  if (!red.reducible) {
    verdict(r, "NotReducible");
    r.j["coalition"] = coalition_json(g, red.failing);
    r.j["reason"] = red.reason;
    r.text << ": " << coalition_label(g, red.failing) << ": " << red.reason;
    return;
  }
  verdict(r, "Reducible");
  Json table = Json::array();
  for (std::uint64_t s = 1; s <= g.grand().bits(); ++s) {
    const Rational v = red.vprime(Coalition(s));
    table.push_back(Json{{"coalition", coalition_json(g, Coalition(s))}, {"worth", v.str()}});
    r.text << "\nv'(" << coalition_label(g, Coalition(s)) << ") = " << v;
  }
  r.j["worth"] = std::move(table);
}

void cohesive_cmd(const Context& c, Reply& r) {
  verdict(r, is_cohesive(c.doc().game, c.opts) ? "Cohesive" : "NotCohesive");
}

void gen_reduction_cmd(const Context& c, Reply& r) {
  const auto& a = c.args;
  auto first = read_qbf_file(a.formula);
  std::optional<ReductionInstance> inst;
  if (a.kind == "core-check") {
    inst = build_core_check(first.matrix);
  } else if (a.kind == "int-core-check") {
    if (a.formula2.empty()) throw InputError("int-core-check needs a second formula file");
    inst = build_core_check_dp(first.matrix, read_qbf_file(a.formula2).matrix);
  } else if (a.kind == "bargaining-check") {
    inst = build_bargaining_check(first);
  } else if (a.kind == "core-nonempty") {
    inst = build_core_nonempty(first);
  } else if (a.kind == "bargaining-nonempty") {
    inst = a.max_bargaining_players ? build_bs_nonempty(first, a.max_bargaining_players) : build_bs_nonempty(first);
  } else {
    throw InputError("unknown reduction " + a.kind);
  }
  if (!a.formula2.empty() && a.kind != "int-core-check") throw InputError(a.kind + " takes one formula file");
  std::string id = a.kind;
  std::replace(id.begin(), id.end(), '-', '_');
  std::string text = serialize_game(document_for(inst->game, id));
  verdict(r, "Generated");
  r.j["claim"] = inst->claim;
  if (inst->point) r.j["point"] = point_json(*inst->point);
  r.text << "\n# " << inst->claim;
  if (inst->point) r.text << "\n# point " << format_point(*inst->point);
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f || !(f << text)) throw InputError("cannot write " + a.out);
    r.j["file"] = a.out;
    r.text << "\n# written to " << a.out;
  } else {
    r.j["game"] = text;
    r.text << "\n" << text;
  }
}

void verify_cmd(const Context& c, Reply& r) {
  auto checks = relation_battery(c.doc().game, c.opts);
  const bool ok = std::none_of(checks.begin(), checks.end(),
                               [](const RelationCheck& k) { return k.status == RelationCheck::Status::Violated; });
  verdict(r, ok ? "Consistent" : "Violation");
  Json list = Json::array();
  for (const auto& k : checks) {
    list.push_back(Json{{"name", k.name}, {"status", std::string(to_string(k.status))}, {"detail", k.detail}});
    r.text << "\n" << to_string(k.status) << ": " << k.name;
    if (!k.detail.empty()) r.text << " (" << k.detail << ")";
  }
  r.j["checks"] = std::move(list);
}

std::string error_name(const std::exception& e) {
#define CGAME_ERROR_NAME(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  CGAME_ERROR_NAME(ParseError)
  CGAME_ERROR_NAME(MissingAssignment)
  CGAME_ERROR_NAME(ScopeMismatch)
  CGAME_ERROR_NAME(LengthMismatch)
  CGAME_ERROR_NAME(SpecInvalid)
  CGAME_ERROR_NAME(NonpositiveLambda)
  CGAME_ERROR_NAME(UnboundVariable)
  CGAME_ERROR_NAME(NotThreeCnf)
  CGAME_ERROR_NAME(BadPrefix)
  CGAME_ERROR_NAME(InputError)
  CGAME_ERROR_NAME(UnboundedInteger)
  CGAME_ERROR_NAME(NotTUReducible)
  CGAME_ERROR_NAME(EmptyImputationSet)
  CGAME_ERROR_NAME(Unsupported)
  CGAME_ERROR_NAME(EnumerationBudgetExceeded)
  CGAME_ERROR_NAME(TimeLimitExceeded)
  CGAME_ERROR_NAME(PlayerLimitExceeded)
  CGAME_ERROR_NAME(TooManyVariables)
  CGAME_ERROR_NAME(ResourceLimit)
#undef CGAME_ERROR_NAME
  return "InternalError";
}

int fail(const Args& a, std::ostream& out, std::ostream& err, const std::exception& e, int code) {
  const std::string name = error_name(e);
  err << "error: " << name << ": " << e.what() << "\n";
  if (a.json) {
    out << Json{{"error", name}, {"message", e.what()}, {"exit_code", code}}.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Exact solver for TU games with mixed-integer linear constraints", "cgame"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", a.json, "Machine-readable output");
  app.add_option("--max-int-enum", a.max_int_enum, "Cap on enumerated integer grid points")->check(CLI::PositiveNumber);
  app.add_option("--time-limit", a.time_limit, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
  app.add_option("--threads", a.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-bargaining-players", a.max_bargaining_players,
                 "Player cap for bargaining-set non-emptiness")->check(CLI::PositiveNumber);

  using Handler = std::function<void(const Context&, Reply&)>;
  std::map<std::string, Handler> handlers;
  auto game_cmd = [&](const std::string& name, const std::string& help, Handler h, bool point = false) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("game", a.game, "Game file (.cg)")->required();
    if (point) sub->add_option("--point", a.point, "Payoff point, e.g. x_1=1,x_2=7/6")->required();
    handlers[name] = std::move(h);
    return sub;
  };
  game_cmd("check-imputation", "Is the point an imputation", check_imputation_cmd, true);
  game_cmd("check-core", "Core membership of a point", check_core_cmd, true);
  game_cmd("core-nonempty", "Core non-emptiness with a witness", core_nonempty_cmd);
  game_cmd("check-bargaining", "Bargaining-set membership of a point", check_bargaining_cmd, true);
  game_cmd("bargaining-nonempty", "Bargaining-set non-emptiness with a witness", bargaining_nonempty_cmd);
  game_cmd("excess", "Excess of a point for one or all coalitions", excess_cmd, true)
      ->add_option("--coalition", a.coalition, "Player ids, e.g. 1,2");
  game_cmd("theta", "Sorted excess vector of a point", theta_cmd, true);
  game_cmd("nucleolus", "Nucleolus of a TU or TU-reducible game", nucleolus_cmd);
  game_cmd("kernel-check", "Kernel membership of a point", kernel_check_cmd, true);
  game_cmd("shapley", "Shapley value of a TU or TU-reducible game", shapley_cmd);
  game_cmd("shapley-ntu-check", "Check a point against the weighted Shapley NTU value", shapley_ntu_cmd, true)
      ->add_option("--lambda", a.lambda, "Positive weights, e.g. 1,2")->required();
  game_cmd("tu-reduce", "Equivalent TU worth function, if any", tu_reduce_cmd);
  game_cmd("cohesive", "Cohesiveness", cohesive_cmd);
  game_cmd("verify", "Run the cross-concept relation battery", verify_cmd);
  {
    auto* sub = app.add_subcommand("gen-reduction", "Build a game from a formula");
    sub->add_option("kind", a.kind, "core-check | int-core-check | bargaining-check | core-nonempty | bargaining-nonempty")
        ->required()
        ->check(CLI::IsMember({"core-check", "int-core-check", "bargaining-check", "core-nonempty", "bargaining-nonempty"}));
    sub->add_option("formula", a.formula, "Formula file (.qbf)")->required();
    sub->add_option("formula2", a.formula2, "Second formula file (int-core-check)");
    sub->add_option("--out", a.out, "Write the game here instead of stdout");
    handlers["gen-reduction"] = gen_reduction_cmd;
  }
  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAnswered : kInputError;
  }

  Context c{a, {}};
  c.opts.max_int_enum = a.max_int_enum;
  c.opts.threads = a.threads;
  if (a.max_bargaining_players) c.opts.max_bargaining_players = a.max_bargaining_players;
  if (a.time_limit > 0) c.opts.deadline = Deadline::after(std::chrono::duration<double>(a.time_limit));

  const std::string command = app.get_subcommands().front()->get_name();
  Reply r;
  r.j["command"] = command;
  const auto start = std::chrono::steady_clock::now();
  try {
    handlers.at(command)(c, r);
  } catch (const InputError& e) {
    return fail(a, out, err, e, kInputError);
  } catch (const Unsupported& e) {
    return fail(a, out, err, e, kUnsupported);
  } catch (const ResourceLimit& e) {
    return fail(a, out, err, e, kResourceLimit);
  } catch (const std::exception& e) {
    return fail(a, out, err, e, kInternalError);
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  r.j["elapsed_ms"] = ms.count();
  if (a.json) {
    out << r.j.dump(2) << "\n";
  } else {
    out << r.text.str() << "\n";
  }
  return kAnswered;
}

}  // namespace cgame::cli
