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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "delphi/term.hpp"

namespace delphi {

/// Simultaneous replacement of free variables by terms.
using Binding = std::map<std::string, Term>;

/// Definitions for ordinary function symbols, e.g. f -> f^M.
using FunctionBinding = std::map<std::string, FunctionDef>;

/// Path of child indices from the root; the root itself is `{}`.
using Position = std::vector<std::size_t>;

/// e·{x -> t}: simultaneous and capture-avoiding. Throws SortMismatch when a
/// replacement's sort differs from the variable's.
Term substitute(const Term& e, const Binding& b);

/// Replaces every application of a bound ordinary symbol by its definition
/// applied to the arguments. Fn-sorted references to the symbol itself become
/// lambda values.
Term instantiate_functions(const Term& e, const FunctionBinding& defs);

/// e↓: folds every theory application whose arguments are values, simplifies
/// the boolean connectives and ite, expands lets. Applications of oracle and
/// ordinary symbols stay in place. The result is a fixpoint.
Term partial_evaluate(const Term& e);

struct OracleApplication {
  std::string symbol;
  std::vector<Value> inputs;
  Position position;
  Sort sort;
};

/// Innermost, leftmost oracle application whose arguments are all values.
/// Quantifier bodies are not searched.
std::optional<OracleApplication> find_oracle_application(const Term& e);

/// Throws BadPosition.
const Term& subterm_at(const Term& e, const Position& pos);

/// e[v] at `pos`. Throws BadPosition or SortMismatch.
Term replace_at(const Term& e, const Position& pos, const Value& v);

/// Free variables in first-occurrence order.
std::vector<SortedVar> free_vars(const Term& e);

/// Names of applied (or referenced) symbols of the given kind, first-occurrence order.
std::vector<std::string> collect_symbols(const Term& e, SymbolKind kind);

bool contains_symbol_kind(const Term& e, SymbolKind kind);

/// Distinct literal values occurring in e, first-occurrence order.
std::vector<Value> collect_values(const Term& e);

}  // namespace delphi
