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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "delphi/term.hpp"

namespace delphi {

namespace theory {

bool is_symbol(std::string_view op);

/// Number of `(_ op i ...)` indices the operator takes.
std::size_t index_count(std::string_view op);

/// Result sort of a theory application; throws SortError when ill-sorted.
Sort result_sort(std::string_view op, std::span<const Sort> args,
                 std::span<const std::uint32_t> indices = {});

/// Value of a theory operation on values, or nullopt when the folder leaves
/// it to the backend (Int/Real division by zero, unsupported operators).
std::optional<Value> fold(std::string_view op, std::span<const std::uint32_t> indices,
                          std::span<const Value> args);

}  // namespace theory

/// Sort-checked construction of theory applications.
Term make_theory(std::string op, std::vector<Term> args, std::vector<std::uint32_t> indices = {});

Term make_bool(bool b);
Term make_int(BigInt n);
Term make_not(Term t);
/// Conjunction; `true` when empty and the sole conjunct when singleton.
Term make_and(std::vector<Term> conjuncts);
Term make_or(std::vector<Term> disjuncts);
Term make_eq(Term a, Term b);
Term make_implies(Term a, Term b);
Term make_ite(Term c, Term a, Term b);

}  // namespace delphi
