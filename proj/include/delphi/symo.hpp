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
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "delphi/grammar.hpp"
#include "delphi/oracle.hpp"
#include "delphi/smt_backend.hpp"
#include "delphi/smto.hpp"
#include "delphi/synth.hpp"
#include "delphi/term.hpp"

namespace delphi {

struct Script;

struct SymoProblem {
  std::vector<SynthTarget> targets;
  std::vector<SortedVar> oracles;
  /// Universally quantified variables x̄ of φ.
  std::vector<SortedVar> variables;
  /// Quantifier-free body φ of ∀x̄. φ.
  Term spec;
  /// Interfaces defining the oracle symbols (used in verification).
  std::vector<OracleInterface> definitional;
  /// Constraint-only interfaces (called after a failed verification).
  std::vector<OracleInterface> constraint_only;
  std::string logic;
};

SymoProblem symo_problem(const Script& s);

void validate(const SymoProblem& p);

struct SymoOptions {
  SynthOptions synth;
  SmtoOptions smto;
  std::optional<std::size_t> max_iterations;
};

struct SymoIteration {
  FunctionBinding candidate;
  SmtoStatus verification = SmtoStatus::Unknown;
  /// Values of x̄ in the countermodel.
  std::vector<std::pair<std::string, Value>> counterexample;
  std::vector<OracleCallRecord> verification_calls;
  std::vector<OracleCallRecord> constraint_calls;
  std::size_t candidates_checked = 0;
  /// S and |A| after this iteration's update.
  std::vector<Term> store;
  std::size_t assumptions = 0;
  double seconds = 0;
};

struct SymoReport {
  std::vector<SymoIteration> iterations;
  std::vector<std::string> log;
};

enum class SymoStatus { Solution, NoSolution, Unknown };

std::string_view to_string(SymoStatus s);

struct SymoOutcome {
  SymoStatus status = SymoStatus::Unknown;
  std::optional<FunctionBinding> solution;
  std::string reason;
  AssumptionSet assumptions;
  SymoReport report;
};

/// (x̄, θ̄, ¬φ{f̄→f̄*}, 𝒥̄) with x̄ as 0-ary ordinary symbols.
SmtoProblem verification_problem(const SymoProblem& p, const FunctionBinding& candidate);

SmtoVerdict verify_candidate(const SymoProblem& p, const FunctionBinding& candidate, const AssumptionSet& seed,
                             SmtBackend& backend, OracleRuntime& oracles, const SmtoOptions& opts = {});

struct InferredCall {
  const OracleInterface* interface = nullptr;
  std::vector<Value> inputs;
};

/// Issued calls, keyed by interface name and printed inputs.
using CallLedger = std::set<std::pair<std::string, std::vector<std::string>>>;

std::vector<InferredCall> infer_oracle_inputs(std::span<const OracleInterface> interfaces,
                                              std::span<const SynthTarget> targets, const Term& phi_inst,
                                              const FunctionBinding& candidate, CallLedger& issued);

SymoOutcome symo_solve(const SymoProblem& p, SmtBackend& backend, OracleRuntime& oracles,
                       const SymoOptions& opts = {});

struct TemplateBinding {
  SynthTarget target;
  std::string executable;
  /// Expected arity of the target, if the caller wants it checked.
  std::optional<std::size_t> rank;
  /// φ and x̄ for the counterexample templates.
  std::optional<Term> spec;
  std::vector<SortedVar> spec_vars;
  /// Oracle symbol introduced by the correctness templates.
  std::string oracle = "theta_corr";
};

/// Names: membership, io, neg_witness, pos_witness, implication, counterexample,
/// distinguishing_input, correctness, correctness_with_cex.
OracleInterface standard_interface(std::string_view name, const TemplateBinding& b);

}  // namespace delphi
