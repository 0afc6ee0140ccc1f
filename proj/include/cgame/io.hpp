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
#ifndef CGAME_IO_HPP_
#define CGAME_IO_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgame/game.hpp"
#include "cgame/reductions.hpp"

namespace cgame {

// A `builtin <name> <args>` stanza. Arguments are kept as key=value text in
// canonical form so the stanza can be written back out.
struct BuiltinSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> args;
  std::size_t line = 0;
};

struct GameDocument {
  std::string id;
  ConstrainedGame game;
  std::optional<BuiltinSpec> builtin;
  // Variables and rows that came from the builtin; the rest were declared in
  // the file.
  std::size_t builtin_variables = 0;
  std::size_t builtin_rows = 0;
  // Source line of each coalition worth, declared variable and row (0 when
  // generated).
  std::map<std::uint64_t, std::size_t> worth_lines;
  std::vector<std::size_t> variable_lines;
  std::vector<std::size_t> row_lines;
};

// Throws ParseError(line, message). Also surfaces SpecInvalid from builtins.
GameDocument parse_game(std::string_view text);
GameDocument read_game_file(const std::string& path);

// Canonical text. Tabulated or oracle worth functions are written as one
// `worth` line per coalition that differs from the default.
std::string serialize_game(const GameDocument& doc);
// Document for a game built through the API.
GameDocument document_for(const ConstrainedGame& g, std::string id);

// "x_1=1,x_2=7/6". Throws ParseError; decimals are rejected.
PayoffPoint parse_point(std::string_view text);
std::string format_point(const PayoffPoint& p);
// Comma-separated rationals, e.g. a weight vector "1,2".
std::vector<Rational> parse_rational_list(std::string_view text);
// Player ids, with or without braces: "{1,2}" or "1,2". Throws ParseError on
// unknown or repeated ids.
Coalition parse_coalition(const ConstrainedGame& g, std::string_view text);

// One exists/forall line per block, then `matrix <expr>` (may span lines).
// The prefix is validated; problems are reported as ParseError.
Qbf parse_qbf(std::string_view text);
Qbf read_qbf_file(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace cgame

#endif  // CGAME_IO_HPP_
