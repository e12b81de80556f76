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

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "delphi/grammar.hpp"
#include "delphi/oracle.hpp"
#include "delphi/sexpr.hpp"
#include "delphi/term.hpp"

namespace delphi {

enum class Directive { CheckSat, CheckSynth };

struct Script {
  std::string logic;
  /// Ordinary symbols from declare-fun / declare-const (Fn sort when arity > 0).
  std::vector<SortedVar> ordinary;
  /// Oracle symbols, each defined by exactly one definitional interface.
  std::vector<SortedVar> oracles;
  std::vector<OracleInterface> interfaces;
  std::vector<Term> assertions;
  std::vector<SynthTarget> targets;
  std::vector<SortedVar> variables;
  std::vector<Term> constraints;
  std::map<std::string, FunctionDef> macros;
  Directive directive = Directive::CheckSat;
  std::filesystem::path base_dir;
};

/// Names visible while parsing a term.
struct SymbolContext {
  std::map<std::string, Sort> ordinary;
  std::map<std::string, Sort> oracles;
  /// Free variables (declare-var); parsed as Var nodes.
  std::map<std::string, Sort> variables;
  /// Inlined at every use.
  std::map<std::string, FunctionDef> macros;
};

SymbolContext context_of(const Script& s);

/// `base_dir` anchors relative oracle executable paths.
Script parse_script(std::string_view text, const std::filesystem::path& base_dir = {});
Script parse_script_file(const std::filesystem::path& path);

Sort parse_sort(const SExpr& e);
Term parse_term(const SExpr& e, const SymbolContext& ctx, std::span<const SortedVar> locals = {});
Term parse_term(std::string_view text, const SymbolContext& ctx,
                std::span<const SortedVar> locals = {});
/// One ground literal of sort `expected` (e.g. `(- 5)`, `#b1010`, a lambda).
Value parse_value(std::string_view text, const Sort& expected);
Value parse_value(const SExpr& e, const Sort& expected);

struct NamedDefinition {
  std::string name;
  FunctionDef def;
  /// Declared result sort.
  Sort codomain = Sort::boolean();
};

/// `(define-fun name ((x S)*) S body)`.
NamedDefinition parse_define_fun(const SExpr& e, const SymbolContext& ctx);

std::string quote_symbol(const std::string& name);
std::string print_value(const Value& v);
std::string print_term(const Term& t);
std::string print_define_fun(const std::string& name, const FunctionDef& def);
/// 0-ary values print as `(define-fun name () S v)`.
std::string print_define_fun(const std::string& name, const Value& v);

}  // namespace delphi
