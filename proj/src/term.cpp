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

#include "delphi/term.hpp"

#include <functional>

#include "delphi/error.hpp"
#include "delphi/term_ops.hpp"

namespace delphi {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_bigint(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return std::hash<std::int64_t>{}(static_cast<std::int64_t>(n));
  return std::hash<std::string>{}(n.str());
}

namespace {

std::size_t hash_sort(const Sort& s) {
  std::size_t h = static_cast<std::size_t>(s.kind()) * 31 + s.width();
  if (s.is_function()) {
    for (const Sort& d : s.domain()) h = hash_combine(h, hash_sort(d));
    h = hash_combine(h, hash_sort(s.codomain()));
  }
  return h;
}

const detail::TermNode& checked(const std::shared_ptr<const detail::TermNode>& n) {
  if (!n) throw Error(ErrorKind::InvalidProblem, "use of an empty term");
  return *n;
}

}  // namespace

// ---------------------------------------------------------------- Term

Term Term::value(Value v) {
  auto n = std::make_shared<detail::TermNode>();
  n->kind = TermKind::Value;
  n->sort = v.sort();
  n->hash = hash_combine(1, v.hash());
  n->value = std::move(v);
  return Term(std::move(n));
}

Term Term::var(std::string name, Sort sort) {
  auto n = std::make_shared<detail::TermNode>();
  n->kind = TermKind::Var;
  n->hash = hash_combine(hash_combine(2, std::hash<std::string>{}(name)), hash_sort(sort));
  n->sort = std::move(sort);
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::app(std::string symbol, SymbolKind kind, std::vector<Term> args, Sort sort,
               std::vector<std::uint32_t> indices) {
  auto n = std::make_shared<detail::TermNode>();
  n->kind = TermKind::App;
  std::size_t h = hash_combine(3 + static_cast<std::size_t>(kind), std::hash<std::string>{}(symbol));
  for (auto i : indices) h = hash_combine(h, i);
  for (const Term& a : args) {
    h = hash_combine(h, a.hash());
    n->size += a.size();
  }
  n->hash = hash_combine(h, hash_sort(sort));
  n->sort = std::move(sort);
  n->name = std::move(symbol);
  n->symbol_kind = kind;
  n->indices = std::move(indices);
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::let(std::vector<std::pair<std::string, Term>> bindings, Term body) {
  auto n = std::make_shared<detail::TermNode>();
  n->kind = TermKind::Let;
  std::size_t h = 7;
  for (auto& [name, t] : bindings) {
    h = hash_combine(hash_combine(h, std::hash<std::string>{}(name)), t.hash());
    n->size += t.size();
    n->let_names.push_back(std::move(name));
    n->args.push_back(std::move(t));
  }
  n->hash = hash_combine(h, body.hash());
  n->size += body.size();
  n->sort = body.sort();
  n->body = std::move(body);
  return Term(std::move(n));
}

Term Term::quant(Quantifier q, std::vector<SortedVar> vars, Term body) {
  auto n = std::make_shared<detail::TermNode>();
  n->kind = TermKind::Quant;
  std::size_t h = q == Quantifier::Forall ? 8 : 9;
  for (const auto& v : vars)
    h = hash_combine(hash_combine(h, std::hash<std::string>{}(v.name)), hash_sort(v.sort));
  n->hash = hash_combine(h, body.hash());
  n->size += body.size();
  n->sort = Sort::boolean();
  n->quantifier = q;
  n->bound = std::move(vars);
  n->body = std::move(body);
  return Term(std::move(n));
}

TermKind Term::kind() const { return checked(node_).kind; }
const Sort& Term::sort() const { return checked(node_).sort; }
const Value& Term::as_value() const { return *checked(node_).value; }
const std::string& Term::name() const { return checked(node_).name; }
SymbolKind Term::symbol_kind() const { return checked(node_).symbol_kind; }
std::span<const std::uint32_t> Term::indices() const { return checked(node_).indices; }
std::span<const Term> Term::args() const { return checked(node_).args; }
std::span<const std::string> Term::let_names() const { return checked(node_).let_names; }
std::span<const SortedVar> Term::bound_vars() const { return checked(node_).bound; }
const Term& Term::body() const { return *checked(node_).body; }
Quantifier Term::quantifier() const { return checked(node_).quantifier; }
std::size_t Term::hash() const { return checked(node_).hash; }
std::size_t Term::size() const { return checked(node_).size; }

bool Term::is_true() const {
  return is_value() && sort().is_bool() && as_value().as_bool();
}

bool Term::is_false() const {
  return is_value() && sort().is_bool() && !as_value().as_bool();
}

std::size_t Term::child_count() const {
  switch (kind()) {
    case TermKind::App: return args().size();
    case TermKind::Let: return args().size() + 1;
    case TermKind::Quant: return 1;
    default: return 0;
  }
}

const Term& Term::child(std::size_t i) const {
  if (i >= child_count()) throw Error(ErrorKind::BadPosition, "child index out of range");
  if (kind() == TermKind::Quant || (kind() == TermKind::Let && i == args().size())) return body();
  return args()[i];
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size || !(x.sort == y.sort)) return false;
  switch (x.kind) {
    case TermKind::Value: return *x.value == *y.value;
    case TermKind::Var: return x.name == y.name;
    case TermKind::App:
      return x.name == y.name && x.symbol_kind == y.symbol_kind && x.indices == y.indices &&
             x.args == y.args;
    case TermKind::Let: return x.let_names == y.let_names && x.args == y.args && *x.body == *y.body;
    case TermKind::Quant:
      return x.quantifier == y.quantifier && x.bound == y.bound && *x.body == *y.body;
  }
  return false;
}

// ---------------------------------------------------------------- FunctionDef

Sort FunctionDef::sort() const {
  if (params.empty()) return body.sort();
  std::vector<Sort> dom;
  for (const auto& p : params) dom.push_back(p.sort);
  return Sort::function(std::move(dom), body.sort());
}

Term FunctionDef::apply(std::span<const Term> args) const {
  if (args.size() != params.size())
    throw Error(ErrorKind::SortMismatch, "arity mismatch applying function definition");
  Binding b;
  for (std::size_t i = 0; i < params.size(); ++i) b.emplace(params[i].name, args[i]);
  return substitute(body, b);
}

// ---------------------------------------------------------------- Value

Value Value::boolean(bool b) { return Value(Sort::boolean(), b); }
Value Value::integer(BigInt n) { return Value(Sort::integer(), std::move(n)); }
Value Value::real(Rational q) { return Value(Sort::real(), std::move(q)); }
Value Value::string(std::string s) { return Value(Sort::string(), std::move(s)); }

Value Value::bitvec(std::uint32_t width, BigInt bits) {
  const BigInt modulus = BigInt(1) << width;
  bits %= modulus;
  if (bits < 0) bits += modulus;
  return Value(Sort::bitvec(width), BitVector{width, std::move(bits)});
}

Value Value::function(FunctionDef def) {
  if (def.params.empty())
    throw Error(ErrorKind::SortMismatch, "function values need at least one parameter");
  for (const auto& fv : free_vars(def.body)) {
    bool bound = false;
    for (const auto& p : def.params) bound = bound || (p.name == fv.name && p.sort == fv.sort);
    if (!bound) throw Error(ErrorKind::SortMismatch, "lambda value is not closed: " + fv.name);
  }
  if (contains_symbol_kind(def.body, SymbolKind::Ordinary) ||
      contains_symbol_kind(def.body, SymbolKind::Oracle))
    throw Error(ErrorKind::SortMismatch, "lambda value mentions uninterpreted symbols");
  Sort s = def.sort();
  return Value(std::move(s), std::make_shared<const FunctionDef>(std::move(def)));
}

Value Value::default_of(const Sort& sort) {
  switch (sort.kind()) {
    case Sort::Kind::Bool: return boolean(false);
    case Sort::Kind::Int: return integer(0);
    case Sort::Kind::Real: return real(0);
    case Sort::Kind::BitVec: return bitvec(sort.width(), 0);
    case Sort::Kind::String: return string("");
    case Sort::Kind::Fn: {
      FunctionDef def;
      std::size_t i = 0;
      for (const Sort& d : sort.domain()) def.params.push_back({"x" + std::to_string(i++), d});
      def.body = Term::value(default_of(sort.codomain()));
      return function(std::move(def));
    }
  }
  return boolean(false);
}

std::size_t Value::hash() const {
  std::size_t h = static_cast<std::size_t>(sort_.kind());
  return std::visit(
      [h](const auto& p) -> std::size_t {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, bool>) {
          return hash_combine(h, p ? 1 : 2);
        } else if constexpr (std::is_same_v<P, BigInt>) {
          return hash_combine(h, hash_bigint(p));
        } else if constexpr (std::is_same_v<P, Rational>) {
          return hash_combine(hash_combine(h, hash_bigint(numerator(p))), hash_bigint(denominator(p)));
        } else if constexpr (std::is_same_v<P, BitVector>) {
          return hash_combine(hash_combine(h, p.width), hash_bigint(p.bits));
        } else if constexpr (std::is_same_v<P, std::string>) {
          return hash_combine(h, std::hash<std::string>{}(p));
        } else {
          std::size_t r = hash_combine(h, p->body.hash());
          for (const auto& prm : p->params) r = hash_combine(r, std::hash<std::string>{}(prm.name));
          return r;
        }
      },
      payload_);
}

bool operator==(const Value& a, const Value& b) {
  if (!(a.sort_ == b.sort_) || a.payload_.index() != b.payload_.index()) return false;
  if (const auto* fa = std::get_if<std::shared_ptr<const FunctionDef>>(&a.payload_)) {
    const auto& fb = std::get<std::shared_ptr<const FunctionDef>>(b.payload_);
    return fa->get() == fb.get() || **fa == *fb;
  }
  return a.payload_ == b.payload_;
}

}  // namespace delphi
