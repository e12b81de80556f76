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

#include "delphi/grammar.hpp"

namespace delphi {

const NonTerminal* Grammar::find(const std::string& name) const {
  for (const auto& nt : nonterminals)
    if (nt.name == name) return &nt;
  return nullptr;
}

bool Grammar::is_nonterminal(const Term& t) const {
  if (!t.is_var()) return false;
  const NonTerminal* nt = find(t.name());
  return nt && nt->sort == t.sort();
}

Sort SynthTarget::sort() const {
  if (params.empty()) return codomain;
  std::vector<Sort> dom;
  for (const auto& p : params) dom.push_back(p.sort);
  return Sort::function(std::move(dom), codomain);
}

}  // namespace delphi
