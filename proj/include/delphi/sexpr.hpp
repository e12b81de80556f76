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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace delphi {

struct SExpr {
  enum class Kind { Symbol, Keyword, Numeral, Decimal, Binary, Hex, String, List };

  Kind kind = Kind::List;
  /// Token text. Symbols are unquoted, strings unescaped, #b/#x prefixes dropped.
  std::string text;
  std::vector<SExpr> items;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is_list() const { return kind == Kind::List; }
  bool is_symbol() const { return kind == Kind::Symbol; }
  bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
  /// A list whose head is the symbol `s`.
  bool is_call(std::string_view s) const {
    return is_list() && !items.empty() && items[0].is_symbol(s);
  }

  std::string to_string() const;
};

/// Reads every top-level s-expression in `text`; `;` starts a line comment.
std::vector<SExpr> read_sexprs(std::string_view text);

/// Reads exactly one s-expression (trailing whitespace allowed).
SExpr read_sexpr(std::string_view text);

[[noreturn]] void fail_at(const SExpr& where, const std::string& message);

}  // namespace delphi
