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

#include "delphi/term.hpp"

namespace delphi {

struct Production {
  enum class Kind { Term, AnyConstant, AnyVariable };

  Kind kind = Kind::Term;
  /// Nonterminal occurrences are Vars named after the nonterminal.
  Term term;
  /// Sort of an AnyConstant / AnyVariable placeholder.
  Sort sort = Sort::boolean();
};

struct NonTerminal {
  std::string name;
  Sort sort = Sort::boolean();
  std::vector<Production> productions;
};

struct Grammar {
  /// nonterminals[0] is the start symbol.
  std::vector<NonTerminal> nonterminals;

  const NonTerminal* find(const std::string& name) const;
  bool is_nonterminal(const Term& t) const;
};

struct SynthTarget {
  std::string name;
  std::vector<SortedVar> params;
  Sort codomain = Sort::boolean();
  std::optional<Grammar> grammar;

  /// Fn sort, or the codomain for 0-ary targets.
  Sort sort() const;
};

}  // namespace delphi
