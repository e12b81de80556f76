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

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "delphi/grammar.hpp"
#include "delphi/oracle.hpp"
#include "delphi/term.hpp"
#include "delphi/term_ops.hpp"

namespace delphi {

/// Conjunction of synthesis constraints with structural dedup; conjuncts are
/// kept in partially evaluated form and `true` is dropped.
class ConstraintStore {
 public:
  /// Returns true if the store grew.
  bool add(const Term& t);
  const std::vector<Term>& conjuncts() const { return conjuncts_; }
  std::size_t size() const { return conjuncts_.size(); }

 private:
  std::vector<Term> conjuncts_;
  std::unordered_set<Term, TermHash> seen_;
};

/// Decides a ground residual formula (oracle applications not covered by the
/// assumption set) modulo those assumptions; true when satisfiable.
using ResidualChecker = std::function<bool(const Term&)>;

bool check_candidate_against_store(const FunctionBinding& candidate, std::span<const Term> store,
                                   const AssumptionSet& assumptions, const ResidualChecker& residual = {});

/// Grammar used when a synth-fun has none: the theory signature over the
/// parameter sorts with (Constant S) leaves.
Grammar default_grammar(const SynthTarget& t);

/// Bottom-up enumeration of a grammar language by term size (node count).
class TermEnumerator {
 public:
  TermEnumerator(const SynthTarget& target, std::vector<Value> constants,
                 std::optional<std::size_t> max_depth = std::nullopt);
  ~TermEnumerator();
  TermEnumerator(TermEnumerator&&) noexcept;
  TermEnumerator& operator=(TermEnumerator&&) noexcept;

  /// Terms of the start symbol with exactly `size` nodes, in enumeration order.
  const std::vector<Term>& terms_of_size(std::size_t size);
  /// Largest term size if the language is finite.
  std::optional<std::size_t> max_size() const;
  std::size_t bank_terms() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct SynthOptions {
  /// Largest candidate size (sum over targets) explored for infinite languages.
  std::size_t max_size = 15;
  /// Cap on terms held by the enumerator.
  std::size_t max_bank_terms = 4'000'000;
  std::size_t default_max_depth = 6;
  /// SyGuS solver command; empty selects the built-in enumerator.
  std::vector<std::string> external_command;
  std::string logic;
};

class Synthesizer {
 public:
  Synthesizer(std::vector<SynthTarget> targets, SynthOptions options = {});
  ~Synthesizer();

  /// First candidate (smallest total size, then enumeration order) satisfying
  /// the store; none when a finite language is exhausted. Throws
  /// BudgetExhausted when an infinite language runs past the size bound.
  /// `constants` seeds (Constant S) leaves together with 0/1 and true/false.
  std::optional<FunctionBinding> synthesize(std::span<const Term> store, const AssumptionSet& assumptions,
                                            const ResidualChecker& residual,
                                            std::span<const Value> constants = {});

  std::size_t candidates_checked() const { return checked_; }
  const std::vector<SynthTarget>& targets() const { return targets_; }

 private:
  std::optional<FunctionBinding> builtin(std::span<const Term> store, const AssumptionSet& a,
                                         const ResidualChecker& residual, std::span<const Value> constants);
  std::optional<FunctionBinding> external(std::span<const Term> store, const AssumptionSet& a,
                                          const ResidualChecker& residual);
  void reset(std::vector<Value> pool);

  std::vector<SynthTarget> targets_;
  SynthOptions options_;
  std::vector<TermEnumerator> enums_;
  std::vector<Value> pool_;
  bool started_ = false;
  std::size_t cursor_size_ = 0;
  std::size_t cursor_index_ = 0;
  std::size_t checked_ = 0;
};

/// SyGuS-IF v2 text for the oracle-free conjuncts of `store`.
std::string sygus_benchmark(std::span<const SynthTarget> targets, std::span<const Term> store,
                            const std::string& logic);

}  // namespace delphi
