// Copyright 2026 The Delphi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace delphi {

enum class ErrorKind {
  // term core
  SortMismatch,
  EvalError,
  BadPosition,
  // frontend
  ParseError,
  SortError,
  DuplicateOracleDefinition,
  UnknownLogic,
  ValueSyntaxError,
  UnsupportedInput,
  // oracle runtime
  OracleCrash,
  OracleTimeout,
  MalformedResponse,
  FunctionalViolation,
  // smt backend
  BackendCrash,
  BackendTimeout,
  ModelParseError,
  // engines
  InvalidProblem,
  IterationLimit,
  InternalProgressFailure,
  BudgetExhausted,
  ExternalSolverError,
  UnknownTemplate,
  RankMismatch,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A ParseError that remembers where in the input it happened (1-based).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::ParseError,
              std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace delphi
