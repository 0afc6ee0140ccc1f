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
#ifndef CGAME_ERRORS_HPP_
#define CGAME_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: game/QBF/point text, or inconsistent API arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

// The question cannot be answered by the implemented algorithms.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A configured cap (enumeration size, time, player count) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& message)
      : InputError(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class MissingAssignment : public InputError {
 public:
  explicit MissingAssignment(const std::string& var)
      : InputError("no value for variable " + var) {}
};

class ScopeMismatch : public InputError {
 public:
  using InputError::InputError;
};

class LengthMismatch : public InputError {
 public:
  using InputError::InputError;
};

class SpecInvalid : public InputError {
 public:
  using InputError::InputError;
};

class NonpositiveLambda : public InputError {
 public:
  using InputError::InputError;
};

class UnboundVariable : public InputError {
 public:
  explicit UnboundVariable(const std::string& var)
      : InputError("unbound variable " + var) {}
};

class NotThreeCnf : public InputError {
 public:
  using InputError::InputError;
};

class BadPrefix : public InputError {
 public:
  using InputError::InputError;
};

class UnboundedInteger : public Unsupported {
 public:
  explicit UnboundedInteger(const std::string& var)
      : Unsupported("integer variable " + var + " has no finite bounds"), var_(var) {}
  const std::string& variable() const { return var_; }

 private:
  std::string var_;
};

class NotTUReducible : public Unsupported {
 public:
  using Unsupported::Unsupported;
};

class EmptyImputationSet : public Unsupported {
 public:
  EmptyImputationSet() : Unsupported("the game has no imputations") {}
};

class EnumerationBudgetExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

class TimeLimitExceeded : public ResourceLimit {
 public:
  TimeLimitExceeded() : ResourceLimit("time limit exceeded") {}
};

class PlayerLimitExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

class TooManyVariables : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

}  // namespace cgame

#endif  // CGAME_ERRORS_HPP_
