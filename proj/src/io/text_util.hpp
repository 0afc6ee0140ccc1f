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
#ifndef CGAME_SRC_IO_TEXT_UTIL_HPP_
#define CGAME_SRC_IO_TEXT_UTIL_HPP_

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgame/errors.hpp"
#include "cgame/rational.hpp"

namespace cgame::detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto at = s.find(sep);
    out.push_back(trim(s.substr(0, at)));
    if (at == std::string_view::npos) return out;
    s.remove_prefix(at + 1);
  }
}

// Letters, digits and '_'; player ids may start with a digit.
inline bool is_identifier(std::string_view s, bool leading_digit) {
  if (s.empty()) return false;
  if (!leading_digit && std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

inline Rational parse_rational(std::string_view text, std::size_t line) {
  text = trim(text);
  if (text.find_first_of(".eE") != std::string_view::npos && !text.empty() &&
      (std::isdigit(static_cast<unsigned char>(text.front())) || text.front() == '-')) {
    throw ParseError(line, "decimal literal " + std::string(text) + " is not accepted; write p/q");
  }
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw ParseError(line, "bad rational '" + std::string(text) + "'");
  }
}

}  // namespace cgame::detail

#endif  // CGAME_SRC_IO_TEXT_UTIL_HPP_
