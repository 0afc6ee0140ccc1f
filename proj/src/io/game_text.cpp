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
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "cgame/errors.hpp"
#include "cgame/io.hpp"
#include "text_util.hpp"

namespace cgame {

namespace {

using detail::is_identifier;
using detail::parse_rational;
using detail::split;
using detail::trim;

struct Line {
  std::size_t number;
  std::string keyword;
  std::string rest;
};

std::vector<Line> logical_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      std::size_t sp = 0;
      while (sp < line.size() && !std::isspace(static_cast<unsigned char>(line[sp]))) ++sp;
      out.push_back(Line{number, std::string(line.substr(0, sp)), std::string(trim(line.substr(sp)))});
    }
    pos = end + 1;
  }
  return out;
}

// "[lo..hi]" with either side optional.
std::pair<std::optional<Rational>, std::optional<Rational>> parse_bounds(std::string_view text, std::size_t line) {
  text = trim(text);
  if (text.empty()) return {};
  if (text.front() != '[' || text.back() != ']') throw ParseError(line, "bounds must be written [lo..hi]");
  auto inner = text.substr(1, text.size() - 2);
  auto dots = inner.find("..");
  if (dots == std::string_view::npos) throw ParseError(line, "bounds must be written [lo..hi]");
  std::optional<Rational> lo, hi;
  auto a = trim(inner.substr(0, dots));
  auto b = trim(inner.substr(dots + 2));
  if (!a.empty()) lo = parse_rational(a, line);
  if (!b.empty()) hi = parse_rational(b, line);
  if (lo && hi && *lo > *hi) throw ParseError(line, "empty bounds");
  return {lo, hi};
}

std::string format_bounds(const Variable& v) {
  if (!v.lo && !v.hi) return "";
  return " [" + (v.lo ? v.lo->str() : "") + ".." + (v.hi ? v.hi->str() : "") + "]";
}

// Linear expressions ------------------------------------------------------

struct Token {
  enum class Kind { Number, Name, Plus, Minus, Star, Rel, End } kind;
  std::string text;
};

std::vector<Token> lex_constraint(std::string_view s, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '+' || c == '-' || c == '*') {
      out.push_back({c == '+' ? Token::Kind::Plus : (c == '-' ? Token::Kind::Minus : Token::Kind::Star), {c}});
      ++i;
    } else if (c == '<' || c == '>' || c == '=') {
      std::string rel{c};
      if ((c == '<' || c == '>') && i + 1 < s.size() && s[i + 1] == '=') rel += '=';
      out.push_back({Token::Kind::Rel, rel});
      i += rel.size();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/' || s[j] == '.')) ++j;
      out.push_back({Token::Kind::Number, std::string(s.substr(i, j - i))});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::Name, std::string(s.substr(i, j - i))});
      i = j;
    } else {
      throw ParseError(line, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::End, ""});
  return out;
}

class ConstraintParser {
 public:
  ConstraintParser(std::vector<Token> toks, const ConstraintSystem& lc, std::size_t line)
      : toks_(std::move(toks)), lc_(lc), line_(line) {}

  RawRow parse() {
    RawRow row;
    Rational lhs_const = side(row.terms, Rational(1));
    const Token& rel = next();
    if (rel.kind != Token::Kind::Rel) throw ParseError(line_, "expected a relation (<=, <, =, >=, >)");
    if (rel.text == "<=") row.rel = RawRelation::LE;
    else if (rel.text == "<") row.rel = RawRelation::LT;
    else if (rel.text == "=") row.rel = RawRelation::EQ;
    else if (rel.text == ">=") row.rel = RawRelation::GE;
    else row.rel = RawRelation::GT;
    Rational rhs_const = side(row.terms, Rational(-1));
    if (peek().kind != Token::Kind::End) throw ParseError(line_, "unexpected '" + peek().text + "'");
    // side() returns the constants already multiplied by its sign.
    row.rhs = -rhs_const - lhs_const;
    return row;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  // Adds sign * (variable terms) to `terms` and returns the constant part.
  Rational side(std::vector<Term>& terms, const Rational& sign) {
    Rational constant;
    bool first = true;
    for (;;) {
      Rational s = sign;
      const Token& t = peek();
      if (t.kind == Token::Kind::Plus || t.kind == Token::Kind::Minus) {
        if (t.kind == Token::Kind::Minus) s = -s;
        next();
      } else if (!first) {
        break;
      }
      first = false;
      const Token& a = next();
      if (a.kind == Token::Kind::Number) {
        Rational coef = parse_rational(a.text, line_);
        if (peek().kind == Token::Kind::Star) {
          next();
          const Token& v = next();
          if (v.kind != Token::Kind::Name) throw ParseError(line_, "expected a variable after '*'");
          terms.push_back(Term{resolve(v.text), s * coef});
        } else {
          constant += s * coef;
        }
      } else if (a.kind == Token::Kind::Name) {
        terms.push_back(Term{resolve(a.text), s});
      } else {
        throw ParseError(line_, a.kind == Token::Kind::End ? "expression ends early"
                                                           : "unexpected '" + a.text + "'");
      }
    }
    return constant;
  }

  std::size_t resolve(const std::string& name) const {
    if (auto i = lc_.find(name)) return *i;
    if (name.rfind("x_", 0) == 0) throw ParseError(line_, name + " does not name a player");
    throw ParseError(line_, "unknown variable " + name);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ConstraintSystem& lc_;
  std::size_t line_;
};

// Builtins ----------------------------------------------------------------

std::vector<std::vector<Rational>> parse_matrix(std::string_view text, std::size_t line) {
  std::vector<std::vector<Rational>> out;
  for (auto row : split(text, ';')) {
    std::vector<Rational> r;
    for (auto cell : split(row, ',')) r.push_back(parse_rational(cell, line));
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_matrix(const std::vector<std::vector<Rational>>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out += ',';
      out += m[i][j].str();
    }
  }
  return out;
}

struct BuiltinArgs {
  std::map<std::string, std::string> values;
  std::size_t line;

  std::string take(const std::string& key) {
    auto it = values.find(key);
    if (it == values.end()) throw ParseError(line, "builtin needs " + key + "=...");
    std::string v = it->second;
    values.erase(it);
    return v;
  }
  void done() const {
    if (!values.empty()) throw ParseError(line, "unexpected builtin argument " + values.begin()->first);
  }
};

const std::vector<std::string> kBuiltins{"piggybank", "hypercube", "producer", "service", "finite-imputations"};

// Builds the builtin game and rewrites spec.args canonically. `tu` is the
// game given by players/worth lines (finite-imputations only).
ConstrainedGame build_builtin(BuiltinSpec& spec, const ConstrainedGame* tu) {
  BuiltinArgs a{{}, spec.line};
  for (auto& [k, v] : spec.args) {
    if (!a.values.emplace(k, v).second) throw ParseError(spec.line, "repeated builtin argument " + k);
  }
  spec.args.clear();
  try {
    if (spec.name == "piggybank") {
      a.done();
      return piggybank_game();
    }
    if (spec.name == "hypercube") {
      Rational n = parse_rational(a.take("n"), spec.line);
      a.done();
      if (!n.is_integer() || n.sign() <= 0 || n > Rational(20)) throw ParseError(spec.line, "hypercube n must be in 1..20");
      spec.args = {{"n", n.str()}};
      return hypercube_game(n.numerator().get_ui());
    }
    if (spec.name == "producer") {
      auto alpha = parse_matrix(a.take("alpha"), spec.line);
      auto beta = parse_matrix(a.take("beta"), spec.line);
      a.done();
      if (alpha.size() != 1 || beta.size() != 1) throw ParseError(spec.line, "alpha and beta are flat lists");
      spec.args = {{"alpha", format_matrix(alpha)}, {"beta", format_matrix(beta)}};
      return producer_game(alpha[0], beta[0]);
    }
    if (spec.name == "service") {
      auto costs = parse_matrix(a.take("costs"), spec.line);
      auto skills_q = parse_matrix(a.take("skills"), spec.line);
      auto com = parse_matrix(a.take("com"), spec.line);
      a.done();
      if (com.size() != 1) throw ParseError(spec.line, "com is a flat list");
      std::vector<std::vector<int>> skills;
      for (const auto& row : skills_q) {
        std::vector<int> r;
        for (const auto& q : row) {
          if (q != Rational(0) && q != Rational(1)) throw ParseError(spec.line, "skills must be 0 or 1");
          r.push_back(q.is_zero() ? 0 : 1);
        }
        skills.push_back(std::move(r));
      }
      spec.args = {{"costs", format_matrix(costs)}, {"skills", format_matrix(skills_q)}, {"com", format_matrix(com)}};
      return service_game(costs, skills, com[0]);
    }
    if (spec.name == "finite-imputations") {
      auto points = parse_matrix(a.take("points"), spec.line);
      a.done();
      if (!tu) throw ParseError(spec.line, "finite-imputations needs players and worth lines");
      spec.args = {{"points", format_matrix(points)}};
      return finite_imputations_game(*tu, points);
    }
  } catch (const SpecInvalid& e) {
    throw ParseError(spec.line, e.what());
  }
  throw ParseError(spec.line, "unknown builtin " + spec.name);
}

bool wraps_tu_game(const std::string& builtin) { return builtin == "finite-imputations"; }

// The game before any file-level declarations: the builtin, or the TU game.
ConstrainedGame base_game(const GameDocument& doc) {
  ConstrainedGame tu(doc.game.players(), doc.game.worth_function());
  if (!doc.builtin) return tu;
  BuiltinSpec spec = *doc.builtin;
  return build_builtin(spec, &tu);
}

Coalition parse_braced_coalition(const std::vector<std::string>& players, std::string_view text, std::size_t line) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw ParseError(line, "coalition must be written {id, ...}");
  }
  auto inner = trim(text.substr(1, text.size() - 2));
  if (inner.empty()) throw ParseError(line, "the empty coalition has worth 0");
  Coalition s;
  for (auto id : split(inner, ',')) {
    id = trim(id);
    auto it = std::find(players.begin(), players.end(), id);
    if (it == players.end()) throw ParseError(line, "unknown player " + std::string(id));
    auto i = static_cast<std::size_t>(it - players.begin());
    if (s.contains(i)) throw ParseError(line, "player " + std::string(id) + " repeated");
    s = s.with(i);
  }
  return s;
}

std::string braced(const ConstrainedGame& g, Coalition s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.members()) {
    if (!first) out += ", ";
    first = false;
    out += g.players()[i];
  }
  return out + "}";
}

std::string format_row(const ConstraintSystem& lc, const LinearRow& row) {
  std::string out;
  for (const auto& t : row.terms) {
    const std::string& name = lc.variable(t.var).name;
    Rational c = t.coef;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    c = c.abs();
    if (c != Rational(1)) out += c.str() + "*";
    out += name;
  }
  if (out.empty()) out = "0";
  return out + " " + std::string(to_string(row.rel)) + " " + row.rhs.str();
}

}  // namespace

GameDocument parse_game(std::string_view text) {
  GameDocument doc;
  const auto lines = logical_lines(text);
  std::optional<std::size_t> game_line, players_line, default_line;
  std::vector<std::string> players;
  Rational fallback;
  std::vector<const Line*> worth_lines, decls;
  for (const auto& l : lines) {
    if (l.keyword == "game") {
      if (game_line) throw ParseError(l.number, "second game line");
      if (!is_identifier(l.rest, true)) throw ParseError(l.number, "game needs an id");
      game_line = l.number;
      doc.id = l.rest;
    } else if (l.keyword == "players") {
      if (players_line) throw ParseError(l.number, "second players line");
      players_line = l.number;
      std::istringstream in(l.rest);
      for (std::string id; in >> id;) {
        if (!is_identifier(id, true)) throw ParseError(l.number, "bad player id " + id);
        if (std::find(players.begin(), players.end(), id) != players.end()) {
          throw ParseError(l.number, "player " + id + " repeated");
        }
        players.push_back(id);
      }
      if (players.empty()) throw ParseError(l.number, "players needs at least one id");
      if (players.size() > Coalition::kMaxPlayers) throw ParseError(l.number, "too many players");
    } else if (l.keyword == "worth") {
      if (l.rest.rfind("default", 0) == 0) {
        if (default_line) throw ParseError(l.number, "second worth default line");
        default_line = l.number;
        fallback = parse_rational(trim(std::string_view(l.rest).substr(7)), l.number);
      } else {
        worth_lines.push_back(&l);
      }
    } else if (l.keyword == "builtin") {
      if (doc.builtin) throw ParseError(l.number, "second builtin line");
      std::istringstream in(l.rest);
      BuiltinSpec spec;
      spec.line = l.number;
      in >> spec.name;
      if (spec.name.empty()) throw ParseError(l.number, "builtin needs a name");
      for (std::string arg; in >> arg;) {
        auto eq = arg.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError(l.number, "builtin arguments are key=value");
        spec.args.emplace_back(arg.substr(0, eq), arg.substr(eq + 1));
      }
      doc.builtin = std::move(spec);
    } else if (l.keyword == "realvar" || l.keyword == "intvar" || l.keyword == "playerint" ||
               l.keyword == "constraint") {
      decls.push_back(&l);
    } else {
      throw ParseError(l.number, "unknown keyword " + l.keyword);
    }
  }
  if (!game_line) throw ParseError(0, "missing game line");

  const bool wraps = doc.builtin && wraps_tu_game(doc.builtin->name);
  if (doc.builtin && !wraps) {
    if (players_line) throw ParseError(*players_line, "players come from the builtin");
    if (default_line) throw ParseError(*default_line, "worth lines cannot be combined with a builtin");
    if (!worth_lines.empty()) throw ParseError(worth_lines.front()->number, "worth lines cannot be combined with a builtin");
  } else if (!players_line) {
    throw ParseError(0, "missing players line");
  }

  if (!doc.builtin || wraps) {
    std::map<std::uint64_t, Rational> table;
    for (const Line* l : worth_lines) {
      auto eq = l->rest.rfind('=');
      if (eq == std::string::npos) throw ParseError(l->number, "worth line needs '= value'");
      Coalition s = parse_braced_coalition(players, std::string_view(l->rest).substr(0, eq), l->number);
      if (doc.worth_lines.count(s.bits())) {
        throw ParseError(l->number, "worth of this coalition already given on line " +
                                        std::to_string(doc.worth_lines[s.bits()]));
      }
      doc.worth_lines[s.bits()] = l->number;
      table[s.bits()] = parse_rational(trim(std::string_view(l->rest).substr(eq + 1)), l->number);
    }
    doc.game = ConstrainedGame(players, WorthFunction::table(std::move(table), fallback));
  }
  if (doc.builtin) {
    const ConstrainedGame tu = doc.game;
    doc.game = build_builtin(*doc.builtin, wraps ? &tu : nullptr);
  }
  ConstraintSystem& lc = doc.game.lc();
  doc.builtin_variables = lc.num_variables();
  doc.builtin_rows = lc.rows().size();
  doc.variable_lines.assign(lc.num_variables(), 0);
  doc.row_lines.assign(lc.rows().size(), 0);

  std::set<std::size_t> integer_players;
  for (const Line* l : decls) {
    if (l->keyword == "constraint") continue;
    std::istringstream in(l->rest);
    std::string name;
    in >> name;
    std::string bounds_text;
    std::getline(in, bounds_text);
    if (l->keyword == "playerint") {
      auto p = doc.game.player_index(name);
      if (!p) throw ParseError(l->number, "unknown player " + name);
      if (!integer_players.insert(*p).second) throw ParseError(l->number, "player " + name + " declared twice");
      auto [lo, hi] = parse_bounds(bounds_text, l->number);
      lc.set_domain(*p, Domain::Integer);
      lc.set_bounds(*p, lo, hi);
      continue;
    }
    if (!is_identifier(name, false)) throw ParseError(l->number, "bad variable name " + name);
    if (name.rfind("x_", 0) == 0) throw ParseError(l->number, "names starting with x_ are reserved for players");
    if (lc.find(name)) throw ParseError(l->number, "variable " + name + " already declared");
    if (l->keyword == "realvar") {
      if (!trim(bounds_text).empty()) throw ParseError(l->number, "realvar takes no bounds");
      lc.add_variable(Variable::real(name));
    } else {
      auto [lo, hi] = parse_bounds(bounds_text, l->number);
      lc.add_variable(Variable::integer(name, lo, hi));
    }
    doc.variable_lines.push_back(l->number);
  }
  for (const Line* l : decls) {
    if (l->keyword != "constraint") continue;
    ConstraintParser p(lex_constraint(l->rest, l->number), lc, l->number);
    lc.add_row(p.parse());
    doc.row_lines.push_back(l->number);
  }
  return doc;
}

GameDocument document_for(const ConstrainedGame& g, std::string id) {
  GameDocument doc;
  doc.id = std::move(id);
  doc.game = g;
  doc.variable_lines.assign(g.lc().num_variables(), 0);
  doc.row_lines.assign(g.lc().rows().size(), 0);
  return doc;
}

std::string serialize_game(const GameDocument& doc) {
  const ConstrainedGame& g = doc.game;
  const ConstraintSystem& lc = g.lc();
  const ConstrainedGame base = base_game(doc);
  std::ostringstream out;
  out << "game " << (doc.id.empty() ? "game" : doc.id) << "\n";
  const bool tabulate = !doc.builtin || wraps_tu_game(doc.builtin->name);
  if (tabulate) {
    out << "players";
    for (const auto& p : g.players()) out << ' ' << p;
    out << "\n";
    const WorthFunction& w = g.worth_function();
    const Rational fallback = w.is_table() ? w.fallback() : Rational();
    if (!fallback.is_zero()) out << "worth default " << fallback << "\n";
    if (!w.is_table() && g.n() > 20) throw PlayerLimitExceeded("too many players to tabulate the worth function");
    auto emit = [&](std::uint64_t bits, const Rational& value) {
      if (value != fallback) out << "worth " << braced(g, Coalition(bits)) << " = " << value << "\n";
    };
    if (w.is_table()) {
      for (const auto& [bits, value] : w.entries()) {
        if (bits != 0) emit(bits, value);
      }
    } else {
      for (std::uint64_t s = 1; s <= g.grand().bits(); ++s) emit(s, w(Coalition(s)));
    }
  }
  if (doc.builtin) {
    out << "builtin " << doc.builtin->name;
    for (const auto& [k, v] : doc.builtin->args) out << ' ' << k << '=' << v;
    out << "\n";
  }
  // Bounds on real variables have no declaration syntax and become rows.
  std::vector<std::string> bound_rows;
  auto real_bounds = [&](const Variable& v) {
    if (v.lo) bound_rows.push_back(v.name + " >= " + v.lo->str());
    if (v.hi) bound_rows.push_back(v.name + " <= " + v.hi->str());
  };
  for (std::size_t i = 0; i < g.n(); ++i) {
    const Variable& v = lc.variable(i);
    const Variable& b = base.lc().variable(i);
    if (v.domain == b.domain && v.lo == b.lo && v.hi == b.hi) continue;
    if (v.is_integer()) {
      out << "playerint " << g.players()[i] << format_bounds(v) << "\n";
    } else {
      real_bounds(v);
    }
  }
  for (std::size_t i = base.lc().num_variables(); i < lc.num_variables(); ++i) {
    const Variable& v = lc.variable(i);
    if (v.is_integer()) {
      out << "intvar " << v.name << format_bounds(v) << "\n";
    } else {
      out << "realvar " << v.name << "\n";
      real_bounds(v);
    }
  }
  for (const auto& r : bound_rows) out << "constraint " << r << "\n";
  for (std::size_t r = base.lc().rows().size(); r < lc.rows().size(); ++r) {
    out << "constraint " << format_row(lc, lc.rows()[r]) << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GameDocument read_game_file(const std::string& path) {
  try {
    return parse_game(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

}  // namespace cgame
