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
#include "cgame/io.hpp"
#include "text_util.hpp"

namespace cgame {

using detail::is_identifier;
using detail::parse_rational;
using detail::split;
using detail::trim;

PayoffPoint parse_point(std::string_view text) {
  PayoffPoint p;
  text = trim(text);
  if (text.empty()) return p;
  for (auto part : split(text, ',')) {
    auto eq = part.find('=');
    if (eq == std::string_view::npos) throw ParseError(0, "point entries are name=value, got '" + std::string(part) + "'");
    std::string name(trim(part.substr(0, eq)));
    if (!is_identifier(name, false)) throw ParseError(0, "bad variable name '" + name + "'");
    if (p.contains(name)) throw ParseError(0, name + " assigned twice");
    p.set(name, parse_rational(part.substr(eq + 1), 0));
  }
  return p;
}

std::string format_point(const PayoffPoint& p) {
  std::string out;
  for (const auto& [name, value] : p.entries()) {
    if (!out.empty()) out += ',';
    out += name + "=" + value.str();
  }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) throw ParseError(0, "empty list");
  for (auto part : split(text, ',')) out.push_back(parse_rational(part, 0));
  return out;
}

Coalition parse_coalition(const ConstrainedGame& g, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw ParseError(0, "unbalanced braces in coalition");
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty()) throw ParseError(0, "empty coalition");
  Coalition s;
  for (auto id : split(text, ',')) {
    auto i = g.player_index(id);
    if (!i) throw ParseError(0, "unknown player " + std::string(id));
    if (s.contains(*i)) throw ParseError(0, "player " + std::string(id) + " repeated");
    s = s.with(*i);
  }
  return s;
}

}  // namespace cgame
