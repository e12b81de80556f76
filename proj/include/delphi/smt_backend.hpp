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

#include <atomic>
#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "delphi/term.hpp"
#include "delphi/term_ops.hpp"

namespace delphi {

struct BackendConfig {
  std::vector<std::string> command{"z3", "-in"};
  /// Empty selects ALL; UF is added when uninterpreted functions are declared.
  std::string logic;
  std::optional<std::chrono::milliseconds> timeout;
  /// When non-empty, every emitted benchmark is also written here.
  std::filesystem::path persist_dir;
};

enum class Verdict { Sat, Unsat, Unknown };

std::string_view to_string(Verdict v);

/// Interpretations of ordinary symbols; 0-ary symbols have no params and a
/// value body.
class Model {
 public:
  void set(const std::string& name, FunctionDef def) { entries_.insert_or_assign(name, std::move(def)); }
  const FunctionDef* find(const std::string& name) const;
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  const std::map<std::string, FunctionDef>& entries() const { return entries_; }
  Model restricted_to(std::span<const SortedVar> symbols) const;

 private:
  std::map<std::string, FunctionDef> entries_;
};

struct CheckResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Model> model;
  std::string benchmark;
  std::string reason;
  double seconds = 0;
};

class SmtBackend {
 public:
  explicit SmtBackend(BackendConfig cfg);

  /// One fresh solver process per call.
  CheckResult check_sat(std::span<const SortedVar> declarations, const Term& formula);

  /// The exact text sent to the solver.
  std::string benchmark(std::span<const SortedVar> declarations, const Term& formula) const;

  std::size_t queries() const { return queries_; }
  const BackendConfig& config() const { return cfg_; }

 private:
  BackendConfig cfg_;
  std::atomic<std::size_t> queries_{0};
};

/// Parses the `(define-fun ...)` entries that follow `sat`. Entries for
/// `declarations` must be well-sorted; unrelated entries are kept when they parse.
Model parse_model(std::string_view text, std::span<const SortedVar> declarations);

/// Value of sym(args) under m. A symbol missing from m evaluates to the
/// default value of its codomain and a note is appended to `log`.
Value eval_in_model(const Model& m, const std::string& sym, const Sort& sym_sort,
                    std::span<const Value> args, std::vector<std::string>* log = nullptr);

/// Ordinary-symbol binding for instantiate_functions, filling gaps with
/// defaults (noted in `log`).
FunctionBinding model_binding(const Model& m, std::span<const SortedVar> symbols,
                              std::vector<std::string>* log = nullptr);

}  // namespace delphi
