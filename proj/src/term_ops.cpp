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

#include "delphi/term_ops.hpp"

#include <set>
#include <unordered_set>

#include "delphi/error.hpp"
#include "delphi/theory.hpp"

namespace delphi {

namespace {

Term rebuild_app(const Term& e, std::vector<Term> args) {
  return Term::app(e.name(), e.symbol_kind(), std::move(args), e.sort(),
                   std::vector<std::uint32_t>(e.indices().begin(), e.indices().end()));
}

void free_vars_into(const Term& e, std::set<std::string>& bound, std::vector<SortedVar>& out,
                    std::set<std::string>& seen) {
  switch (e.kind()) {
    case TermKind::Value: return;
    case TermKind::Var:
      if (!bound.count(e.name()) && seen.insert(e.name()).second) out.push_back({e.name(), e.sort()});
      return;
    case TermKind::App:
      for (const Term& a : e.args()) free_vars_into(a, bound, out, seen);
      return;
    case TermKind::Let: {
      for (const Term& a : e.args()) free_vars_into(a, bound, out, seen);
      std::set<std::string> inner = bound;
      for (const auto& n : e.let_names()) inner.insert(n);
      free_vars_into(e.body(), inner, out, seen);
      return;
    }
    case TermKind::Quant: {
      std::set<std::string> inner = bound;
      for (const auto& v : e.bound_vars()) inner.insert(v.name);
      free_vars_into(e.body(), inner, out, seen);
      return;
    }
  }
}

std::set<std::string> free_names(const Binding& b) {
  std::set<std::string> out;
  for (const auto& [_, t] : b)
    for (const auto& v : free_vars(t)) out.insert(v.name);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (std::size_t i = 0;; ++i) {
    std::string cand = base + "!" + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

// Prepares an inner binding for a binder scope: bound names shadow outer
// entries, and binders that would capture a free variable of a replacement
// are renamed.
std::vector<std::string> enter_scope(std::span<const std::string> names, const Term& body,
                                     Binding& inner) {
  for (const auto& n : names) inner.erase(n);
  std::vector<std::string> renamed(names.begin(), names.end());
  if (inner.empty()) return renamed;
  const std::set<std::string> danger = free_names(inner);
  std::set<std::string> avoid = danger;
  for (const auto& v : free_vars(body)) avoid.insert(v.name);
  for (const auto& n : names) avoid.insert(n);
  for (auto& n : renamed) {
    if (!danger.count(n)) continue;
    const std::string fresh = fresh_name(n, avoid);
    avoid.insert(fresh);
    n = fresh;
  }
  return renamed;
}

Term subst(const Term& e, const Binding& b) {
  switch (e.kind()) {
    case TermKind::Value: return e;
    case TermKind::Var: {
      auto it = b.find(e.name());
      if (it == b.end()) return e;
      if (!(it->second.sort() == e.sort()))
        throw Error(ErrorKind::SortMismatch, "substituting " + it->second.sort().to_string() +
                                                 " for '" + e.name() + "' of sort " +
                                                 e.sort().to_string());
      return it->second;
    }
    case TermKind::App: {
      std::vector<Term> args;
      args.reserve(e.args().size());
      bool changed = false;
      for (const Term& a : e.args()) {
        args.push_back(subst(a, b));
        changed = changed || !(args.back() == a);
      }
      return changed ? rebuild_app(e, std::move(args)) : e;
    }
    case TermKind::Let: {
      Binding inner = b;
      auto names = enter_scope(e.let_names(), e.body(), inner);
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] != e.let_names()[i]) inner[e.let_names()[i]] = Term::var(names[i], e.args()[i].sort());
      std::vector<std::pair<std::string, Term>> binds;
      for (std::size_t i = 0; i < names.size(); ++i) binds.emplace_back(names[i], subst(e.args()[i], b));
      return Term::let(std::move(binds), subst(e.body(), inner));
    }
    case TermKind::Quant: {
      std::vector<std::string> old;
      for (const auto& v : e.bound_vars()) old.push_back(v.name);
      Binding inner = b;
      auto names = enter_scope(old, e.body(), inner);
      std::vector<SortedVar> vars;
      for (std::size_t i = 0; i < names.size(); ++i) {
        const Sort& s = e.bound_vars()[i].sort;
        if (names[i] != old[i]) inner[old[i]] = Term::var(names[i], s);
        vars.push_back({names[i], s});
      }
      return Term::quant(e.quantifier(), std::move(vars), subst(e.body(), inner));
    }
  }
  return e;
}

Term instantiate(const Term& e, const FunctionBinding& defs) {
  switch (e.kind()) {
    case TermKind::Value:
    case TermKind::Var: return e;
    case TermKind::App: {
      std::vector<Term> args;
      args.reserve(e.args().size());
      bool changed = false;
      for (const Term& a : e.args()) {
        args.push_back(instantiate(a, defs));
        changed = changed || !(args.back() == a);
      }
      if (e.symbol_kind() == SymbolKind::Ordinary) {
        auto it = defs.find(e.name());
        if (it != defs.end()) {
          const FunctionDef& def = it->second;
          if (args.empty() && !def.params.empty()) return Term::value(Value::function(def));
          return def.apply(args);
        }
      }
      return changed ? rebuild_app(e, std::move(args)) : e;
    }
    case TermKind::Let: {
      std::vector<std::pair<std::string, Term>> binds;
      for (std::size_t i = 0; i < e.args().size(); ++i)
        binds.emplace_back(e.let_names()[i], instantiate(e.args()[i], defs));
      return Term::let(std::move(binds), instantiate(e.body(), defs));
    }
    case TermKind::Quant:
      return Term::quant(e.quantifier(),
                         std::vector<SortedVar>(e.bound_vars().begin(), e.bound_vars().end()),
                         instantiate(e.body(), defs));
  }
  return e;
}

Term eval(const Term& e);

Term eval_bool_connective(const Term& e, std::vector<Term> args) {
  const std::string& op = e.name();
  if (op == "not") {
    const Term& a = args[0];
    if (a.is_value()) return make_bool(!a.as_value().as_bool());
    if (a.is_app_of(SymbolKind::Theory) && a.name() == "not") return a.args()[0];
    return make_not(a);
  }
  if (op == "and" || op == "or") {
    const bool is_and = op == "and";
    std::vector<Term> kept;
    for (Term& a : args) {
      if (a.is_value()) {
        if (a.as_value().as_bool() != is_and) return make_bool(!is_and);
        continue;
      }
      kept.push_back(std::move(a));
    }
    return is_and ? make_and(std::move(kept)) : make_or(std::move(kept));
  }
  // (=> a1 ... an c): right associative.
  Term consequent = args.back();
  if (consequent.is_true()) return consequent;
  std::vector<Term> antecedents;
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i].is_false()) return make_bool(true);
    if (!args[i].is_true()) antecedents.push_back(args[i]);
  }
  if (antecedents.empty()) return consequent;
  if (consequent.is_false()) {
    Term conj = make_and(std::move(antecedents));
    if (conj.is_app_of(SymbolKind::Theory) && conj.name() == "not") return conj.args()[0];
    return make_not(std::move(conj));
  }
  antecedents.push_back(std::move(consequent));
  return make_theory("=>", std::move(antecedents));
}

Term eval(const Term& e) {
  switch (e.kind()) {
    case TermKind::Value:
    case TermKind::Var: return e;
    case TermKind::Let: {
      Binding b;
      for (std::size_t i = 0; i < e.args().size(); ++i) b.emplace(e.let_names()[i], eval(e.args()[i]));
      return eval(subst(e.body(), b));
    }
    case TermKind::Quant: {
      Term body = eval(e.body());
      if (body.is_value()) return body;
      if (body == e.body()) return e;
      return Term::quant(e.quantifier(),
                         std::vector<SortedVar>(e.bound_vars().begin(), e.bound_vars().end()),
                         std::move(body));
    }
    case TermKind::App: break;
  }
  const bool theory = e.symbol_kind() == SymbolKind::Theory;
  if (theory && e.name() == "ite") {
    Term c = eval(e.args()[0]);
    if (c.is_value()) return eval(e.args()[c.as_value().as_bool() ? 1 : 2]);
    Term a = eval(e.args()[1]);
    Term b = eval(e.args()[2]);
    if (a.is_value() && b.is_value() && a == b) return a;
    return rebuild_app(e, {std::move(c), std::move(a), std::move(b)});
  }
  std::vector<Term> args;
  args.reserve(e.args().size());
  bool changed = false;
  bool all_values = true;
  for (const Term& a : e.args()) {
    args.push_back(eval(a));
    changed = changed || !(args.back() == a);
    all_values = all_values && args.back().is_value();
  }
  if (theory) {
    const std::string& op = e.name();
    if (op == "not" || op == "and" || op == "or" || op == "=>")
      return eval_bool_connective(e, std::move(args));
    if (all_values) {
      std::vector<Value> vals;
      vals.reserve(args.size());
      for (const Term& a : args) vals.push_back(a.as_value());
      if (auto v = theory::fold(op, e.indices(), vals)) return Term::value(std::move(*v));
    }
  }
  return changed ? rebuild_app(e, std::move(args)) : e;
}

bool find_oracle(const Term& e, Position& pos, std::optional<OracleApplication>& out) {
  if (e.kind() == TermKind::Quant) return false;
  for (std::size_t i = 0; i < e.child_count(); ++i) {
    pos.push_back(i);
    if (find_oracle(e.child(i), pos, out)) return true;
    pos.pop_back();
  }
  if (!e.is_app_of(SymbolKind::Oracle)) return false;
  std::vector<Value> inputs;
  for (const Term& a : e.args()) {
    if (!a.is_value()) return false;
    inputs.push_back(a.as_value());
  }
  out = OracleApplication{e.name(), std::move(inputs), pos, e.sort()};
  return true;
}

Term replace_rec(const Term& e, const Position& pos, std::size_t depth, const Value& v) {
  if (depth == pos.size()) {
    if (!(e.sort() == v.sort()))
      throw Error(ErrorKind::SortMismatch, "replacing " + e.sort().to_string() + " subterm with " +
                                               v.sort().to_string() + " value");
    return Term::value(v);
  }
  const std::size_t i = pos[depth];
  if (i >= e.child_count()) throw Error(ErrorKind::BadPosition, "position does not address a subterm");
  Term child = replace_rec(e.child(i), pos, depth + 1, v);
  switch (e.kind()) {
    case TermKind::App: {
      std::vector<Term> args(e.args().begin(), e.args().end());
      args[i] = std::move(child);
      return rebuild_app(e, std::move(args));
    }
    case TermKind::Let: {
      std::vector<std::pair<std::string, Term>> binds;
      for (std::size_t k = 0; k < e.args().size(); ++k)
        binds.emplace_back(e.let_names()[k], k == i ? child : e.args()[k]);
      return Term::let(std::move(binds), i == e.args().size() ? child : e.body());
    }
    case TermKind::Quant:
      return Term::quant(e.quantifier(),
                         std::vector<SortedVar>(e.bound_vars().begin(), e.bound_vars().end()),
                         std::move(child));
    default: break;
  }
  throw Error(ErrorKind::BadPosition, "position does not address a subterm");
}

template <typename F>
void visit(const Term& e, F&& f) {
  f(e);
  for (std::size_t i = 0; i < e.child_count(); ++i) visit(e.child(i), f);
}

}  // namespace

Term substitute(const Term& e, const Binding& b) { return b.empty() ? e : subst(e, b); }

Term instantiate_functions(const Term& e, const FunctionBinding& defs) {
  return defs.empty() ? e : instantiate(e, defs);
}

Term partial_evaluate(const Term& e) { return eval(e); }

std::optional<OracleApplication> find_oracle_application(const Term& e) {
  Position pos;
  std::optional<OracleApplication> out;
  find_oracle(e, pos, out);
  return out;
}

const Term& subterm_at(const Term& e, const Position& pos) {
  const Term* cur = &e;
  for (std::size_t i : pos) {
    if (i >= cur->child_count()) throw Error(ErrorKind::BadPosition, "position does not address a subterm");
    cur = &cur->child(i);
  }
  return *cur;
}

Term replace_at(const Term& e, const Position& pos, const Value& v) { return replace_rec(e, pos, 0, v); }

std::vector<SortedVar> free_vars(const Term& e) {
  std::set<std::string> bound, seen;
  std::vector<SortedVar> out;
  free_vars_into(e, bound, out, seen);
  return out;
}

std::vector<std::string> collect_symbols(const Term& e, SymbolKind kind) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  visit(e, [&](const Term& t) {
    if (t.is_app_of(kind) && seen.insert(t.name()).second) out.push_back(t.name());
  });
  return out;
}

bool contains_symbol_kind(const Term& e, SymbolKind kind) {
  if (e.is_app_of(kind)) return true;
  for (std::size_t i = 0; i < e.child_count(); ++i)
    if (contains_symbol_kind(e.child(i), kind)) return true;
  return false;
}

std::vector<Value> collect_values(const Term& e) {
  std::vector<Value> out;
  std::unordered_set<Value, ValueHash> seen;
  visit(e, [&](const Term& t) {
    if (t.is_value() && seen.insert(t.as_value()).second) out.push_back(t.as_value());
  });
  return out;
}

}  // namespace delphi
