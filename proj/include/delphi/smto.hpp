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
#include <string>
#include <vector>

#include "delphi/oracle.hpp"
#include "delphi/smt_backend.hpp"
#include "delphi/term.hpp"

namespace delphi {

struct Script;

struct SmtoProblem {
  std::vector<SortedVar> ordinary;
  std::vector<SortedVar> oracles;
  Term formula;
  /// Exactly one definitional interface per oracle symbol.
  std::vector<OracleInterface> interfaces;
  std::string logic;

  const OracleInterface& interface_for(const std::string& oracle) const;
};

SmtoProblem smto_problem(const Script& s);

/// Throws InvalidProblem when the problem is outside the definitional fragment
/// or mentions undeclared symbols.
void validate(const SmtoProblem& p);

struct SmtoOptions {
  std::optional<std::size_t> max_iterations;
};

struct SmtoIteration {
  Verdict backend = Verdict::Unknown;
  /// Oracle calls made while checking this iteration's model.
  std::vector<OracleCallRecord> calls;
  std::size_t assumptions_added = 0;
  std::size_t assumptions_total = 0;
  bool consistent = false;
};

struct SmtoReport {
  std::vector<SmtoIteration> iterations;
  std::vector<std::string> log;
};

enum class SmtoStatus { Sat, Unsat, Unknown };

std::string_view to_string(SmtoStatus s);

struct SmtoVerdict {
  SmtoStatus status = SmtoStatus::Unknown;
  AssumptionSet assumptions;
  /// Restricted to the ordinary symbols; present only for Sat.
  std::optional<Model> model;
  std::string reason;
  SmtoReport report;
};

struct ConsistencyResult {
  bool ok = false;
  std::vector<OracleCallRecord> calls;
  std::size_t added = 0;
  /// The final normal form (the value true when ok).
  Term residual;
};

/// Grounds every oracle application of ↓(ρ·{f̄ → f̄^M}) via `a` or the oracle,
/// extending `a` with each new answer.
ConsistencyResult consistency_check(const SmtoProblem& p, const Model& m, AssumptionSet& a,
                                    OracleRuntime& oracles, std::vector<std::string>* log = nullptr);

SmtoVerdict smto_solve(const SmtoProblem& p, const AssumptionSet& seed, SmtBackend& backend,
                       OracleRuntime& oracles, const SmtoOptions& opts = {});

}  // namespace delphi
