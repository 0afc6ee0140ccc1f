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
#include <cctype>
#include <set>
#include <sstream>

#include "cgame/errors.hpp"
#include "cgame/io.hpp"
#include "text_util.hpp"

namespace cgame {

namespace {

struct Tok {
  enum class Kind { Name, Not, And, Or, Open, Close, End } kind;
  std::string text;
  std::size_t line;
};

std::vector<Tok> lex(std::string_view s, std::size_t line) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '!' || c == '&' || c == '|' || c == '(' || c == ')') {
      Tok::Kind k = c == '!' ? Tok::Kind::Not
                  : c == '&' ? Tok::Kind::And
                  : c == '|' ? Tok::Kind::Or
                  : c == '(' ? Tok::Kind::Open
                             : Tok::Kind::Close;
      out.push_back({k, {c}, line});
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Kind::Name, std::string(s.substr(i, j - i)), line});
      i = j;
    } else {
      throw ParseError(line, std::string("unexpected character '") + c + "' in matrix");
    }
  }
  out.push_back({Tok::Kind::End, "", line});
  return out;
}

// expr := conj ('|' conj)*, conj := unary ('&' unary)*,
// unary := '!' unary | '(' expr ')' | name | true | false
class FormulaParser {
 public:
  explicit FormulaParser(std::vector<Tok> toks) : toks_(std::move(toks)) {}

  BoolExpr parse() {
    BoolExpr e = expr();
    if (peek().kind != Tok::Kind::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Tok& peek() const { return toks_[pos_]; }
  const Tok& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(peek().line, msg); }

  BoolExpr expr() {
    std::vector<BoolExpr> parts{conj()};
    while (peek().kind == Tok::Kind::Or) {
      next();
      parts.push_back(conj());
    }
    return parts.size() == 1 ? parts[0] : bor(std::move(parts));
  }

  BoolExpr conj() {
    std::vector<BoolExpr> parts{unary()};
    while (peek().kind == Tok::Kind::And) {
      next();
      parts.push_back(unary());
    }
    return parts.size() == 1 ? parts[0] : band(std::move(parts));
  }

  BoolExpr unary() {
    switch (peek().kind) {
      case Tok::Kind::Not:
        next();
        return bnot(unary());
      case Tok::Kind::Open: {
        next();
        BoolExpr e = expr();
        if (peek().kind != Tok::Kind::Close) fail("missing ')'");
        next();
        return e;
      }
      case Tok::Kind::Name: {
        std::string name = next().text;
        if (name == "true") return bconst(true);
        if (name == "false") return bconst(false);
        return bvar(name);
      }
      case Tok::Kind::End:
        fail("matrix ends early");
      default:
        fail("unexpected '" + peek().text + "'");
    }
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Qbf parse_qbf(std::string_view text) {
  Qbf q;
  std::set<std::string> seen;
  std::size_t line = 0;
  std::size_t pos = 0;
  std::optional<std::size_t> matrix_line;
  std::string matrix_text;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    if (matrix_line) {
      matrix_text += "\n";
      matrix_text += raw;
      continue;
    }
    std::string_view l = raw;
    if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = detail::trim(l);
    if (l.empty()) continue;
    std::istringstream in{std::string(l)};
    std::string keyword;
    in >> keyword;
    if (keyword == "matrix") {
      matrix_line = line;
      matrix_text = std::string(l.substr(6));
      continue;
    }
    if (keyword != "exists" && keyword != "forall") throw ParseError(line, "expected exists, forall or matrix");
    QuantBlock block{keyword == "exists" ? Quantifier::Exists : Quantifier::Forall, {}};
    if (!q.prefix.empty() && q.prefix.back().q == block.q) {
      throw ParseError(line, "quantifier blocks must alternate");
    }
    for (std::string v; in >> v;) {
      if (!detail::is_identifier(v, false) || v == "true" || v == "false") {
        throw ParseError(line, "bad variable name " + v);
      }
      if (!seen.insert(v).second) throw ParseError(line, "variable " + v + " quantified twice");
      block.vars.push_back(v);
    }
    if (block.vars.empty()) throw ParseError(line, keyword + " needs at least one variable");
    q.prefix.push_back(std::move(block));
  }
  if (!matrix_line) throw ParseError(0, "missing matrix line");
  if (q.prefix.empty()) throw ParseError(*matrix_line, "missing quantifier prefix");
  q.matrix = FormulaParser(lex(matrix_text, *matrix_line)).parse();
  for (const auto& v : vars(q.matrix)) {
    if (!seen.count(v)) throw ParseError(*matrix_line, "matrix variable " + v + " is not quantified");
  }
  validate(q);
  return q;
}

Qbf read_qbf_file(const std::string& path) {
  try {
    return parse_qbf(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

}  // namespace cgame
