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
#ifndef CGAME_OPTIONS_HPP_
#define CGAME_OPTIONS_HPP_

#include <chrono>
#include <cstdint>
#include <optional>

namespace cgame {

class Deadline {
 public:
  Deadline() = default;
  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
    return d;
  }
  bool expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }
  // Throws TimeLimitExceeded once the deadline has passed.
  void check() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

struct SolverOptions {
  // Cap on the integer grid enumerated by to_semilinear.
  std::uint64_t max_int_enum = 1'000'000;
  // milp_feasible enumerates grids up to this size and branches above it.
  std::uint64_t milp_enumeration_threshold = 4096;
  std::uint64_t max_bb_nodes = 200'000;
  std::size_t max_bargaining_players = 5;
  std::size_t max_cohesive_players = 12;
  unsigned threads = 1;
  Deadline deadline;
};

}  // namespace cgame

#endif  // CGAME_OPTIONS_HPP_
