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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "delphi/sort.hpp"

namespace delphi {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct SortedVar {
  std::string name;
  Sort sort;

  friend bool operator==(const SortedVar&, const SortedVar&) = default;
};

enum class TermKind { Value, Var, App, Let, Quant };

/// Who owns the meaning of an applied symbol.
enum class SymbolKind { Theory, Ordinary, Oracle };

enum class Quantifier { Forall, Exists };

class Value;
struct FunctionDef;

namespace detail {
struct TermNode;
}

/// Immutable, structurally shared term. Cheap to copy.
class Term {
 public:
  /// Empty handle; only valid as an assignment target.
  Term() = default;

  static Term value(Value v);
  static Term var(std::string name, Sort sort);
  /// `sort` is the result sort of the application; callers are responsible
  /// for well-sortedness (see theory.hpp for checked theory builders).
  static Term app(std::string symbol, SymbolKind kind, std::vector<Term> args, Sort sort,
                  std::vector<std::uint32_t> indices = {});
  static Term let(std::vector<std::pair<std::string, Term>> bindings, Term body);
  static Term quant(Quantifier q, std::vector<SortedVar> vars, Term body);

  TermKind kind() const;
  bool is_value() const { return kind() == TermKind::Value; }
  bool is_var() const { return kind() == TermKind::Var; }
  bool is_app() const { return kind() == TermKind::App; }
  bool is_true() const;
  bool is_false() const;

  const Sort& sort() const;
  const Value& as_value() const;
  /// Variable name or applied symbol.
  const std::string& name() const;
  SymbolKind symbol_kind() const;
  bool is_app_of(SymbolKind kind) const { return is_app() && symbol_kind() == kind; }
  std::span<const std::uint32_t> indices() const;
  /// App arguments, or the bound values of a Let.
  std::span<const Term> args() const;
  std::span<const std::string> let_names() const;
  std::span<const SortedVar> bound_vars() const;
  const Term& body() const;
  Quantifier quantifier() const;

  /// Number of immediate children addressable by a Position.
  std::size_t child_count() const;
  const Term& child(std::size_t i) const;

  std::size_t hash() const;
  /// Node count.
  std::size_t size() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::TermNode> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// A function given by parameters and a body; also the payload of closed
/// lambda values.
struct FunctionDef {
  std::vector<SortedVar> params;
  Term body;

  Sort sort() const;
  /// body with params replaced by `args` (no evaluation).
  Term apply(std::span<const Term> args) const;

  friend bool operator==(const FunctionDef&, const FunctionDef&) = default;
};

/// A literal value. Two values are equal iff sorts and payloads are equal.
class Value {
 public:
  struct BitVector {
    std::uint32_t width;
    BigInt bits;  // 0 <= bits < 2^width
    friend bool operator==(const BitVector&, const BitVector&) = default;
  };

  static Value boolean(bool b);
  static Value integer(BigInt n);
  static Value real(Rational q);
  /// `bits` is reduced modulo 2^width.
  static Value bitvec(std::uint32_t width, BigInt bits);
  static Value string(std::string s);
  /// Throws SortMismatch if the body has free variables other than params.
  static Value function(FunctionDef def);

  /// false / 0 / 0.0 / zero vector / "" / constant-default function.
  static Value default_of(const Sort& sort);

  const Sort& sort() const { return sort_; }
  bool as_bool() const { return std::get<bool>(payload_); }
  const BigInt& as_int() const { return std::get<BigInt>(payload_); }
  const Rational& as_real() const { return std::get<Rational>(payload_); }
  const BitVector& as_bitvec() const { return std::get<BitVector>(payload_); }
  const std::string& as_string() const { return std::get<std::string>(payload_); }
  const FunctionDef& as_function() const { return *std::get<std::shared_ptr<const FunctionDef>>(payload_); }

  std::size_t hash() const;

  friend bool operator==(const Value& a, const Value& b);

 private:
  Value(Sort sort, std::variant<bool, BigInt, Rational, BitVector, std::string,
                                std::shared_ptr<const FunctionDef>> payload)
      : sort_(std::move(sort)), payload_(std::move(payload)) {}

  Sort sort_;
  std::variant<bool, BigInt, Rational, BitVector, std::string, std::shared_ptr<const FunctionDef>>
      payload_;
};

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

namespace detail {

struct TermNode {
  TermKind kind = TermKind::Value;
  Sort sort = Sort::boolean();
  std::size_t hash = 0;
  std::size_t size = 1;
  std::optional<Value> value;
  std::string name;
  SymbolKind symbol_kind = SymbolKind::Theory;
  std::vector<std::uint32_t> indices;
  std::vector<Term> args;
  std::vector<std::string> let_names;
  std::vector<SortedVar> bound;
  std::optional<Term> body;
  Quantifier quantifier = Quantifier::Forall;
};

}  // namespace detail

std::size_t hash_combine(std::size_t seed, std::size_t v);
std::size_t hash_bigint(const BigInt& n);

}  // namespace delphi
