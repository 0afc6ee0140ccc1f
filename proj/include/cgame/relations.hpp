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
#ifndef CGAME_RELATIONS_HPP_
#define CGAME_RELATIONS_HPP_

#include <string>
#include <vector>

#include "cgame/game.hpp"

namespace cgame {

// Outcome of one cross-concept relation on one game.
struct RelationCheck {
  enum class Status { Holds, Violated, Skipped };
  std::string name;
  Status status = Status::Holds;
  std::string detail;  // the offending point, or why the check was skipped
};

std::string_view to_string(RelationCheck::Status s);

// Checks on g and its unconstrained version, over candidate points drawn
// from core witnesses, the TU nucleolus and the TU Shapley value:
//   - individual rationality in the TU game carries over to g;
//   - TU imputations that extend to a solution of the constraints are
//     imputations of g;
//   - TU core points that are imputations of g are in the core of g;
//   - core points of g are in its bargaining set;
//   - when g is TU or TU-reducible, its nucleolus is an imputation, passes
//     the kernel check, and lies in the core whenever the core is nonempty.
// A check whose computation hits a resource limit or an unsupported case is
// reported as Skipped.
std::vector<RelationCheck> relation_battery(const ConstrainedGame& g, const SolverOptions& opts = {});

}  // namespace cgame

#endif  // CGAME_RELATIONS_HPP_
