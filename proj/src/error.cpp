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

#include "delphi/error.hpp"

namespace delphi {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SortMismatch: return "SortMismatch";
    case ErrorKind::EvalError: return "EvalError";
    case ErrorKind::BadPosition: return "BadPosition";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SortError: return "SortError";
    case ErrorKind::DuplicateOracleDefinition: return "DuplicateOracleDefinition";
    case ErrorKind::UnknownLogic: return "UnknownLogic";
    case ErrorKind::ValueSyntaxError: return "ValueSyntaxError";
    case ErrorKind::UnsupportedInput: return "UnsupportedInput";
    case ErrorKind::OracleCrash: return "OracleCrash";
    case ErrorKind::OracleTimeout: return "OracleTimeout";
    case ErrorKind::MalformedResponse: return "MalformedResponse";
    case ErrorKind::FunctionalViolation: return "FunctionalViolation";
    case ErrorKind::BackendCrash: return "BackendCrash";
    case ErrorKind::BackendTimeout: return "BackendTimeout";
    case ErrorKind::ModelParseError: return "ModelParseError";
    case ErrorKind::InvalidProblem: return "InvalidProblem";
    case ErrorKind::IterationLimit: return "IterationLimit";
    case ErrorKind::InternalProgressFailure: return "InternalProgressFailure";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::ExternalSolverError: return "ExternalSolverError";
    case ErrorKind::UnknownTemplate: return "UnknownTemplate";
    case ErrorKind::RankMismatch: return "RankMismatch";
  }
  return "Error";
}

}  // namespace delphi
