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
#ifndef CGAME_CLI_HPP_
#define CGAME_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace cgame::cli {

// Exit codes.
inline constexpr int kAnswered = 0;
inline constexpr int kInternalError = 1;
inline constexpr int kInputError = 2;
inline constexpr int kUnsupported = 3;
inline constexpr int kResourceLimit = 4;

// Runs one command; args exclude the program name. Results go to out (JSON
// with --json), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgame::cli

#endif  // CGAME_CLI_HPP_
