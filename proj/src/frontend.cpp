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

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "delphi/error.hpp"
#include "delphi/frontend.hpp"
#include "delphi/process.hpp"
#include "delphi/term_ops.hpp"
#include "delphi/theory.hpp"

namespace delphi {

namespace {

std::string where(const SExpr& e) {
  return std::to_string(e.line) + ":" + std::to_string(e.column);
}

[[noreturn]] void sort_error_at(const SExpr& e, const std::string& msg) {
  throw Error(ErrorKind::SortError, where(e) + ": " + msg);
}

[[noreturn]] void unsupported_at(const SExpr& e, const std::string& msg) {
  throw Error(ErrorKind::UnsupportedInput, where(e) + ": " + msg);
}

const std::string& expect_symbol(const SExpr& e, const char* what) {
  if (!e.is_symbol()) fail_at(e, std::string("expected ") + what);
  return e.text;
}

std::uint32_t to_index(const SExpr& e) {
  if (e.kind != SExpr::Kind::Numeral) fail_at(e, "expected a numeral index");
  try {
    const unsigned long v = std::stoul(e.text);
    if (v > 1u << 24) fail_at(e, "index too large");
    return static_cast<std::uint32_t>(v);
  } catch (const std::out_of_range&) {
    fail_at(e, "index too large");
  }
}

Rational decimal_value(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text));
  const std::string frac = text.substr(dot + 1);
  BigInt den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  return Rational(BigInt(text.substr(0, dot) + frac), den);
}

Value binary_value(const std::string& bits) {
  BigInt v = 0;
  for (char c : bits) v = (v << 1) | (c == '1' ? 1 : 0);
  return Value::bitvec(static_cast<std::uint32_t>(bits.size()), v);
}

Value hex_value(const std::string& digits) {
  BigInt v = 0;
  for (char c : digits) {
    const int d = std::isdigit(static_cast<unsigned char>(c)) ? c - '0'
                                                              : std::tolower(c) - 'a' + 10;
    v = (v << 4) | d;
  }
  return Value::bitvec(static_cast<std::uint32_t>(digits.size() * 4), v);
}

bool is_arith(std::string_view op) {
  return op == "+" || op == "-" || op == "*" || op == "/" || op == "<" || op == "<=" ||
         op == ">" || op == ">=" || op == "=" || op == "distinct" || op == "ite";
}

// Int literals are accepted where a Real is expected.
bool coerce_literal(Term& t, const Sort& want) {
  if (want.is_real() && t.is_value() && t.sort().is_int()) {
    t = Term::value(Value::real(Rational(t.as_value().as_int())));
    return true;
  }
  return false;
}

class TermParser {
 public:
  TermParser(const SymbolContext& ctx, std::span<const SortedVar> locals) : ctx_(ctx) {
    scopes_.emplace_back();
    for (const auto& v : locals) scopes_.back()[v.name] = v.sort;
  }

  Term parse(const SExpr& e) {
    switch (e.kind) {
      case SExpr::Kind::Numeral: return Term::value(Value::integer(BigInt(e.text)));
      case SExpr::Kind::Decimal: return Term::value(Value::real(decimal_value(e.text)));
      case SExpr::Kind::Binary: return Term::value(binary_value(e.text));
      case SExpr::Kind::Hex: return Term::value(hex_value(e.text));
      case SExpr::Kind::String: return Term::value(Value::string(e.text));
      case SExpr::Kind::Keyword: fail_at(e, "unexpected keyword " + e.text);
      case SExpr::Kind::Symbol: return symbol(e);
      case SExpr::Kind::List: return list(e);
    }
    fail_at(e, "unexpected expression");
  }

 private:
  const Sort* local(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return &f->second;
    }
    return nullptr;
  }

  Term symbol(const SExpr& e) {
    const std::string& n = e.text;
    if (n == "true") return make_bool(true);
    if (n == "false") return make_bool(false);
    if (const Sort* s = local(n)) return Term::var(n, *s);
    if (auto it = ctx_.variables.find(n); it != ctx_.variables.end()) return Term::var(n, it->second);
    if (auto it = ctx_.ordinary.find(n); it != ctx_.ordinary.end())
      return Term::app(n, SymbolKind::Ordinary, {}, it->second);
    if (auto it = ctx_.oracles.find(n); it != ctx_.oracles.end()) {
      if (it->second.is_function()) fail_at(e, "oracle symbol '" + n + "' used without arguments");
      return Term::app(n, SymbolKind::Oracle, {}, it->second);
    }
    if (auto it = ctx_.macros.find(n); it != ctx_.macros.end()) {
      if (!it->second.params.empty()) return Term::value(Value::function(it->second));
      return it->second.body;
    }
    fail_at(e, "unknown symbol '" + n + "'");
  }

  std::vector<SortedVar> sorted_vars(const SExpr& e) {
    if (!e.is_list()) fail_at(e, "expected a list of sorted variables");
    std::vector<SortedVar> out;
    for (const auto& item : e.items) {
      if (!item.is_list() || item.items.size() != 2) fail_at(item, "expected (name sort)");
      out.push_back({expect_symbol(item.items[0], "a variable name"), parse_sort(item.items[1])});
    }
    return out;
  }

  Term list(const SExpr& e) {
    if (e.items.empty()) fail_at(e, "empty application");
    const SExpr& head = e.items[0];
    if (head.is_symbol("_")) return indexed_constant(e);
    if (head.is_list()) {
      if (!head.is_call("_") || head.items.size() < 3) fail_at(head, "malformed indexed symbol");
      std::vector<std::uint32_t> idx;
      for (std::size_t i = 2; i < head.items.size(); ++i) idx.push_back(to_index(head.items[i]));
      return theory_app(e, expect_symbol(head.items[1], "an indexed symbol"), args_of(e), std::move(idx));
    }
    const std::string& op = expect_symbol(head, "a function symbol");
    if (op == "let") return let(e);
    if (op == "forall" || op == "exists") return quant(e, op == "forall");
    if (op == "lambda") return lambda(e);
    if (op == "!") {
      if (e.items.size() < 2) fail_at(e, "malformed annotation");
      return parse(e.items[1]);
    }
    if (op == "-" && e.items.size() == 2 && literal_number(e.items[1])) {
      Term t = parse(e.items[1]);
      const Value& v = t.as_value();
      return Term::value(v.sort().is_int() ? Value::integer(-v.as_int()) : Value::real(-v.as_real()));
    }
    if (op == "/" && e.items.size() == 3 && plain_number(e.items[1]) && plain_number(e.items[2])) {
      const Rational num = decimal_value(e.items[1].text), den = decimal_value(e.items[2].text);
      if (den != 0) return Term::value(Value::real(num / den));
    }
    std::vector<Term> args = args_of(e);
    if (const Sort* s = local(op)) {
      if (!s->is_function() || !ctx_.ordinary.count(op))
        fail_at(head, "cannot apply variable '" + op + "'");
    }
    if (auto it = ctx_.ordinary.find(op); it != ctx_.ordinary.end())
      return uninterpreted(e, op, SymbolKind::Ordinary, it->second, std::move(args));
    if (auto it = ctx_.oracles.find(op); it != ctx_.oracles.end())
      return uninterpreted(e, op, SymbolKind::Oracle, it->second, std::move(args));
    if (auto it = ctx_.macros.find(op); it != ctx_.macros.end()) {
      const FunctionDef& def = it->second;
      if (def.params.size() != args.size()) sort_error_at(e, "wrong number of arguments to '" + op + "'");
      for (std::size_t i = 0; i < args.size(); ++i) {
        coerce_literal(args[i], def.params[i].sort);
        if (!(args[i].sort() == def.params[i].sort))
          sort_error_at(e.items[i + 1], "argument sort mismatch for '" + op + "'");
      }
      return def.apply(args);
    }
    if (theory::is_symbol(op)) return theory_app(e, op, std::move(args), {});
    fail_at(head, "unknown function symbol '" + op + "'");
  }

  static bool plain_number(const SExpr& e) {
    return e.kind == SExpr::Kind::Numeral || e.kind == SExpr::Kind::Decimal;
  }

  static bool literal_number(const SExpr& e) {
    if (plain_number(e)) return true;
    return e.is_call("/") && e.items.size() == 3 && plain_number(e.items[1]) &&
           plain_number(e.items[2]) && decimal_value(e.items[2].text) != 0;
  }

  std::vector<Term> args_of(const SExpr& e) {
    std::vector<Term> args;
    for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(parse(e.items[i]));
    return args;
  }

  Term indexed_constant(const SExpr& e) {
    if (e.items.size() == 3 && e.items[1].is_symbol() && e.items[1].text.starts_with("bv") &&
        e.items[1].text.size() > 2) {
      const std::string digits = e.items[1].text.substr(2);
      if (digits.find_first_not_of("0123456789") == std::string::npos) {
        const std::uint32_t w = to_index(e.items[2]);
        if (w == 0) sort_error_at(e, "bit-vector width must be positive");
        return Term::value(Value::bitvec(w, BigInt(digits)));
      }
    }
    fail_at(e, "unsupported indexed constant");
  }

  Term theory_app(const SExpr& e, const std::string& op, std::vector<Term> args,
                  std::vector<std::uint32_t> idx) {
    if (!theory::is_symbol(op)) fail_at(e, "unknown function symbol '" + op + "'");
    if (is_arith(op)) {
      bool any_real = false;
      for (const Term& a : args) any_real = any_real || a.sort().is_real();
      if (any_real)
        for (Term& a : args) coerce_literal(a, Sort::real());
    }
    try {
      return make_theory(op, std::move(args), std::move(idx));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::SortError) throw;
      sort_error_at(e, std::string(err.what()).substr(to_string(ErrorKind::SortError).size() + 2));
    }
  }

  Term uninterpreted(const SExpr& e, const std::string& name, SymbolKind kind, const Sort& sort,
                     std::vector<Term> args) {
    if (!sort.is_function()) sort_error_at(e, "'" + name + "' is not a function");
    const auto dom = sort.domain();
    if (dom.size() != args.size()) sort_error_at(e, "wrong number of arguments to '" + name + "'");
    for (std::size_t i = 0; i < args.size(); ++i) {
      coerce_literal(args[i], dom[i]);
      if (!(args[i].sort() == dom[i]))
        sort_error_at(e.items[i + 1], "argument " + std::to_string(i + 1) + " of '" + name +
                                          "' has sort " + args[i].sort().to_string() +
                                          ", expected " + dom[i].to_string());
    }
    return Term::app(name, kind, std::move(args), sort.codomain());
  }

  Term let(const SExpr& e) {
    if (e.items.size() != 3 || !e.items[1].is_list()) fail_at(e, "malformed let");
    std::vector<std::pair<std::string, Term>> binds;
    std::map<std::string, Sort> scope;
    for (const auto& b : e.items[1].items) {
      if (!b.is_list() || b.items.size() != 2) fail_at(b, "malformed let binding");
      Term t = parse(b.items[1]);
      const std::string& n = expect_symbol(b.items[0], "a variable name");
      scope[n] = t.sort();
      binds.emplace_back(n, std::move(t));
    }
    scopes_.push_back(std::move(scope));
    Term body = parse(e.items[2]);
    scopes_.pop_back();
    return Term::let(std::move(binds), std::move(body));
  }

  Term quant(const SExpr& e, bool forall) {
    if (e.items.size() != 3) fail_at(e, "malformed quantifier");
    auto vars = sorted_vars(e.items[1]);
    if (vars.empty()) fail_at(e, "quantifier without variables");
    Term body = scoped(vars, e.items[2]);
    if (!body.sort().is_bool()) sort_error_at(e, "quantifier body must be Bool");
    return Term::quant(forall ? Quantifier::Forall : Quantifier::Exists, std::move(vars), std::move(body));
  }

  Term lambda(const SExpr& e) {
    if (e.items.size() != 3) fail_at(e, "malformed lambda");
    auto vars = sorted_vars(e.items[1]);
    if (vars.empty()) fail_at(e, "lambda without parameters");
    Term body = scoped(vars, e.items[2]);
    try {
      return Term::value(Value::function(FunctionDef{std::move(vars), std::move(body)}));
    } catch (const Error& err) {
      sort_error_at(e, err.what());
    }
  }

  Term scoped(const std::vector<SortedVar>& vars, const SExpr& body) {
    std::map<std::string, Sort> scope;
    for (const auto& v : vars) scope[v.name] = v.sort;
    scopes_.push_back(std::move(scope));
    Term t = parse(body);
    scopes_.pop_back();
    return t;
  }

  const SymbolContext& ctx_;
  std::vector<std::map<std::string, Sort>> scopes_;
};

bool known_logic(const std::string& l) {
  static const std::regex re(
      "ALL|(QF_)?(AX|A)?(UF)?(DT)?(BV)?(FP)?(S)?(IDL|RDL|LIA|LRA|NIA|NRA|LIRA|NIRA)?");
  return !l.empty() && l != "QF_" && std::regex_match(l, re);
}

class ScriptParser {
 public:
  explicit ScriptParser(std::filesystem::path base) { script_.base_dir = std::move(base); }

  Script run(std::string_view text) {
    const auto cmds = read_sexprs(text);
    for (const auto& c : cmds) command(c);
    if (!directive_) {
      if (cmds.empty()) throw ParseError("empty input: expected (check-sat) or (check-synth)", 1, 1);
      fail_at(cmds.back(), "missing (check-sat) or (check-synth)");
    }
    script_.directive = *directive_;
    validate_mode();
    return std::move(script_);
  }

 private:
  void command(const SExpr& c) {
    if (!c.is_list() || c.items.empty() || !c.items[0].is_symbol()) fail_at(c, "expected a command");
    const std::string& cmd = c.items[0].text;
    static const std::set<std::string> ignored = {"set-option", "set-info", "get-model", "exit",
                                                  "get-info", "set-feature", "get-value"};
    if (ignored.count(cmd)) return;
    if (directive_) unsupported_at(c, "command '" + cmd + "' after the final directive");
    if (cmd == "set-logic") return set_logic(c);
    if (cmd == "declare-fun") return declare_fun(c);
    if (cmd == "declare-const") return declare_const(c);
    if (cmd == "define-fun") return define_fun(c);
    if (cmd == "declare-oracle-fun") return declare_oracle_fun(c);
    if (cmd == "oracle-constraint") return oracle_interface(c, false);
    if (cmd == "oracle-assumption") return oracle_interface(c, true);
    if (cmd == "assert") return add_formula(c, script_.assertions, "assert");
    if (cmd == "constraint") return add_formula(c, script_.constraints, "constraint");
    if (cmd == "synth-fun") return synth_fun(c);
    if (cmd == "declare-var") return declare_var(c);
    if (cmd == "check-sat") {
      directive_ = Directive::CheckSat;
      directive_at_ = &c;
      return;
    }
    if (cmd == "check-synth") {
      directive_ = Directive::CheckSynth;
      directive_at_ = &c;
      return;
    }
    if (cmd == "declare-sort" || cmd == "define-sort" || cmd == "push" || cmd == "pop" ||
        cmd == "check-sat-assuming" || cmd == "synth-inv" || cmd == "inv-constraint")
      unsupported_at(c, "command '" + cmd + "' is not supported");
    fail_at(c.items[0], "unknown command '" + cmd + "'");
  }

  void set_logic(const SExpr& c) {
    if (c.items.size() != 2) fail_at(c, "malformed set-logic");
    const std::string& l = expect_symbol(c.items[1], "a logic name");
    if (!known_logic(l)) throw Error(ErrorKind::UnknownLogic, where(c.items[1]) + ": unknown logic '" + l + "'");
    script_.logic = l;
  }

  void fresh_name(const SExpr& at, const std::string& n) {
    if (n == "true" || n == "false" || theory::is_symbol(n) || ctx_.ordinary.count(n) ||
        ctx_.oracles.count(n) || ctx_.variables.count(n) || ctx_.macros.count(n))
      fail_at(at, "symbol '" + n + "' is already declared");
  }

  static Sort rank_sort(std::vector<Sort> dom, Sort cod) {
    return dom.empty() ? cod : Sort::function(std::move(dom), std::move(cod));
  }

  std::vector<Sort> sort_list(const SExpr& e) {
    if (!e.is_list()) fail_at(e, "expected a list of sorts");
    std::vector<Sort> out;
    for (const auto& s : e.items) out.push_back(parse_sort(s));
    return out;
  }

  void declare_fun(const SExpr& c) {
    if (c.items.size() != 4) fail_at(c, "malformed declare-fun");
    const std::string& n = expect_symbol(c.items[1], "a function name");
    fresh_name(c.items[1], n);
    Sort s = rank_sort(sort_list(c.items[2]), parse_sort(c.items[3]));
    ctx_.ordinary[n] = s;
    script_.ordinary.push_back({n, s});
    uses_smt_ = &c;
  }

  void declare_const(const SExpr& c) {
    if (c.items.size() != 3) fail_at(c, "malformed declare-const");
    const std::string& n = expect_symbol(c.items[1], "a constant name");
    fresh_name(c.items[1], n);
    Sort s = parse_sort(c.items[2]);
    ctx_.ordinary[n] = s;
    script_.ordinary.push_back({n, s});
    uses_smt_ = &c;
  }

  void define_fun(const SExpr& c) {
    NamedDefinition d = parse_define_fun(c, ctx_);
    fresh_name(c.items[1], d.name);
    ctx_.macros[d.name] = d.def;
    script_.macros[d.name] = std::move(d.def);
  }

  void declare_var(const SExpr& c) {
    if (c.items.size() != 3) fail_at(c, "malformed declare-var");
    const std::string& n = expect_symbol(c.items[1], "a variable name");
    fresh_name(c.items[1], n);
    Sort s = parse_sort(c.items[2]);
    ctx_.variables[n] = s;
    script_.variables.push_back({n, s});
    uses_synth_ = &c;
  }

  std::string executable_of(const SExpr& e) {
    if (e.kind != SExpr::Kind::String && !e.is_symbol()) fail_at(e, "expected an executable path");
    if (e.text.empty()) fail_at(e, "empty executable path");
    return resolve_executable(e.text, script_.base_dir);
  }

  void declare_oracle_fun(const SExpr& c) {
    if (c.items.size() != 5) fail_at(c, "malformed declare-oracle-fun: expected (declare-oracle-fun name (sorts) sort path)");
    const std::string& n = expect_symbol(c.items[1], "an oracle name");
    if (ctx_.oracles.count(n))
      throw Error(ErrorKind::DuplicateOracleDefinition,
                  where(c.items[1]) + ": oracle symbol '" + n + "' already has a defining interface");
    fresh_name(c.items[1], n);
    OracleInterface i = definitional_interface(n, sort_list(c.items[2]), parse_sort(c.items[3]),
                                               executable_of(c.items[4]));
    ctx_.oracles[n] = i.symbol_sort();
    script_.oracles.push_back({n, i.symbol_sort()});
    script_.interfaces.push_back(std::move(i));
  }

  std::vector<SortedVar> var_list(const SExpr& e) {
    if (!e.is_list()) fail_at(e, "expected a list of sorted variables");
    std::vector<SortedVar> out;
    std::set<std::string> seen;
    for (const auto& item : e.items) {
      if (!item.is_list() || item.items.size() != 2) fail_at(item, "expected (name sort)");
      const std::string& n = expect_symbol(item.items[0], "a variable name");
      if (!seen.insert(n).second) fail_at(item, "duplicate variable '" + n + "'");
      out.push_back({n, parse_sort(item.items[1])});
    }
    return out;
  }

  // (oracle-constraint path ((y S)*) ((z S)*) beta)
  // (oracle-assumption path ((y S)*) ((z S)*) alpha [beta])
  void oracle_interface(const SExpr& c, bool assumption) {
    if (c.items.size() < 5 || c.items.size() > (assumption ? 6u : 5u))
      fail_at(c, assumption ? "malformed oracle-assumption" : "malformed oracle-constraint");
    OracleInterface i;
    i.executable = executable_of(c.items[1]);
    i.query = var_list(c.items[2]);
    i.response = var_list(c.items[3]);
    if (i.response.empty()) fail_at(c.items[3], "an oracle interface needs at least one response variable");
    for (const auto& q : i.query)
      for (const auto& r : i.response)
        if (q.name == r.name) fail_at(c, "variable '" + q.name + "' is both query and response");
    std::vector<SortedVar> locals = i.query;
    locals.insert(locals.end(), i.response.begin(), i.response.end());

    if (assumption) {
      const SExpr& alpha = c.items[4];
      const std::string theta = defined_symbol(alpha, i);
      std::vector<Sort> dom;
      for (const auto& q : i.query) dom.push_back(q.sort);
      const SExpr& z = alpha.items[2];
      Sort zsort = Sort::boolean();
      for (const auto& r : i.response)
        if (r.name == z.text) zsort = r.sort;
      const Sort s = rank_sort(dom, zsort);
      ctx_.oracles[theta] = s;
      script_.oracles.push_back({theta, s});
      i.defines = theta;
      i.name = theta;
      i.assumption_gen = parse_term(alpha, ctx_, locals);
      if (c.items.size() == 6) i.constraint_gen = generator(c.items[5], locals);
      has_beta_ = has_beta_ || i.constraint_gen.has_value();
      multi_response_ = multi_response_ || i.response.size() != 1;
    } else {
      i.constraint_gen = generator(c.items[4], locals);
      i.name = std::filesystem::path(c.items[1].text).filename().string();
      has_free_ = &c;
    }
    validate_interface(i);
    script_.interfaces.push_back(std::move(i));
  }

  Term generator(const SExpr& e, const std::vector<SortedVar>& locals) {
    Term t = parse_term(e, ctx_, locals);
    if (!t.sort().is_bool()) sort_error_at(e, "generator must be Bool");
    return t;
  }

  // alpha must read (= (theta y1 .. yj) z) with theta fresh.
  std::string defined_symbol(const SExpr& alpha, const OracleInterface& i) {
    static const std::string shape =
        "only definitional oracle interfaces are supported: the assumption generator must be "
        "(= (theta y1 ... yj) z) for a fresh oracle symbol theta, the full query domain y1 ... yj "
        "and one response variable z";
    if (!alpha.is_call("=") || alpha.items.size() != 3 || !alpha.items[2].is_symbol())
      unsupported_at(alpha, shape);
    const SExpr& app = alpha.items[1];
    std::string theta;
    if (app.is_symbol()) {
      theta = app.text;
      if (!i.query.empty()) unsupported_at(alpha, shape);
    } else {
      if (!app.is_list() || app.items.empty() || !app.items[0].is_symbol()) unsupported_at(alpha, shape);
      theta = app.items[0].text;
      if (app.items.size() - 1 != i.query.size()) unsupported_at(alpha, shape);
      for (std::size_t k = 0; k < i.query.size(); ++k)
        if (!app.items[k + 1].is_symbol(i.query[k].name)) unsupported_at(alpha, shape);
    }
    bool z_ok = false;
    for (const auto& r : i.response) z_ok = z_ok || r.name == alpha.items[2].text;
    if (!z_ok) unsupported_at(alpha, shape);
    if (ctx_.oracles.count(theta))
      throw Error(ErrorKind::DuplicateOracleDefinition,
                  where(app) + ": oracle symbol '" + theta + "' already has a defining interface");
    fresh_name(app, theta);
    return theta;
  }

  void add_formula(const SExpr& c, std::vector<Term>& into, const char* what) {
    if (c.items.size() != 2) fail_at(c, std::string("malformed ") + what);
    Term t = parse_term(c.items[1], ctx_);
    if (!t.sort().is_bool()) sort_error_at(c.items[1], std::string(what) + " must be Bool");
    into.push_back(std::move(t));
    if (&into == &script_.assertions) uses_smt_ = &c;
    else uses_synth_ = &c;
  }

  void synth_fun(const SExpr& c) {
    if (c.items.size() < 4 || c.items.size() > 6) fail_at(c, "malformed synth-fun");
    SynthTarget t;
    t.name = expect_symbol(c.items[1], "a function name");
    fresh_name(c.items[1], t.name);
    t.params = var_list(c.items[2]);
    t.codomain = parse_sort(c.items[3]);
    if (c.items.size() == 5) t.grammar = grammar_v1(c.items[4], t);
    if (c.items.size() == 6) t.grammar = grammar_v2(c.items[4], c.items[5], t);
    if (t.grammar && !(t.grammar->nonterminals.front().sort == t.codomain))
      sort_error_at(c, "start symbol sort differs from the codomain of '" + t.name + "'");
    ctx_.ordinary[t.name] = t.sort();
    script_.targets.push_back(std::move(t));
    uses_synth_ = &c;
  }

  Grammar grammar_v1(const SExpr& rules, const SynthTarget& t) {
    if (!rules.is_list() || rules.items.empty()) fail_at(rules, "malformed grammar");
    std::vector<std::pair<std::string, Sort>> decls;
    for (const auto& r : rules.items) {
      if (!r.is_list() || r.items.size() != 3) fail_at(r, "expected (nonterminal sort (rules))");
      decls.emplace_back(expect_symbol(r.items[0], "a nonterminal"), parse_sort(r.items[1]));
    }
    return grammar_rules(decls, rules, t);
  }

  Grammar grammar_v2(const SExpr& decl_list, const SExpr& rules, const SynthTarget& t) {
    if (!decl_list.is_list() || decl_list.items.empty()) fail_at(decl_list, "malformed grammar");
    std::vector<std::pair<std::string, Sort>> decls;
    for (const auto& d : decl_list.items) {
      if (!d.is_list() || d.items.size() != 2) fail_at(d, "expected (nonterminal sort)");
      decls.emplace_back(expect_symbol(d.items[0], "a nonterminal"), parse_sort(d.items[1]));
    }
    if (!rules.is_list() || rules.items.size() != decls.size())
      fail_at(rules, "grammar rules do not match the nonterminal declarations");
    return grammar_rules(decls, rules, t);
  }

  Grammar grammar_rules(const std::vector<std::pair<std::string, Sort>>& decls, const SExpr& rules,
                        const SynthTarget& t) {
    Grammar g;
    std::vector<SortedVar> locals = t.params;
    for (const auto& [n, s] : decls) {
      for (const auto& p : t.params)
        if (p.name == n) fail_at(rules, "nonterminal '" + n + "' shadows a parameter");
      if (g.find(n)) fail_at(rules, "duplicate nonterminal '" + n + "'");
      g.nonterminals.push_back({n, s, {}});
      locals.push_back({n, s});
    }
    for (std::size_t k = 0; k < rules.items.size(); ++k) {
      const SExpr& r = rules.items[k];
      if (!r.is_list() || r.items.size() != 3 || !r.items[0].is_symbol(decls[k].first))
        fail_at(r, "expected rules for nonterminal '" + decls[k].first + "'");
      if (!(parse_sort(r.items[1]) == decls[k].second))
        sort_error_at(r.items[1], "nonterminal sort differs from its declaration");
      if (!r.items[2].is_list()) fail_at(r.items[2], "expected a list of productions");
      NonTerminal& nt = g.nonterminals[k];
      for (const auto& p : r.items[2].items) {
        Production prod;
        if ((p.is_call("Constant") || p.is_call("Variable")) && p.items.size() == 2) {
          prod.kind = p.is_call("Constant") ? Production::Kind::AnyConstant : Production::Kind::AnyVariable;
          prod.sort = parse_sort(p.items[1]);
        } else {
          prod.term = parse_term(p, ctx_, locals);
          prod.sort = prod.term.sort();
        }
        if (!(prod.sort == nt.sort))
          sort_error_at(p, "production sort " + prod.sort.to_string() + " differs from nonterminal sort " +
                               nt.sort.to_string());
        nt.productions.push_back(std::move(prod));
      }
    }
    return g;
  }

  void validate_mode() {
    const SExpr& d = *directive_at_;
    if (*directive_ == Directive::CheckSat) {
      if (uses_synth_) unsupported_at(*uses_synth_, "synthesis commands cannot be combined with (check-sat)");
      if (has_free_)
        unsupported_at(*has_free_,
                       "oracle-constraint interfaces make the problem general (non-definitional) SMTO, "
                       "which is not supported; only definitional interfaces may be used with (check-sat)");
      if (has_beta_ || multi_response_)
        unsupported_at(d, "with (check-sat) every oracle-assumption must have exactly one response "
                          "variable and no constraint generator (definitional fragment)");
    } else {
      if (uses_smt_) unsupported_at(*uses_smt_, "(declare-fun)/(assert) cannot be combined with (check-synth)");
      if (script_.targets.empty()) unsupported_at(d, "(check-synth) without any synth-fun");
    }
  }

  Script script_;
  SymbolContext ctx_;
  std::optional<Directive> directive_;
  const SExpr* directive_at_ = nullptr;
  const SExpr* uses_smt_ = nullptr;
  const SExpr* uses_synth_ = nullptr;
  const SExpr* has_free_ = nullptr;
  bool has_beta_ = false;
  bool multi_response_ = false;
};

}  // namespace

SymbolContext context_of(const Script& s) {
  SymbolContext ctx;
  for (const auto& v : s.ordinary) ctx.ordinary[v.name] = v.sort;
  for (const auto& t : s.targets) ctx.ordinary[t.name] = t.sort();
  for (const auto& v : s.oracles) ctx.oracles[v.name] = v.sort;
  for (const auto& v : s.variables) ctx.variables[v.name] = v.sort;
  ctx.macros = s.macros;
  return ctx;
}

Script parse_script(std::string_view text, const std::filesystem::path& base_dir) {
  return ScriptParser(base_dir).run(text);
}

Script parse_script_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_script(ss.str(), std::filesystem::absolute(path).parent_path());
}

Sort parse_sort(const SExpr& e) {
  if (e.is_symbol()) {
    if (e.text == "Bool") return Sort::boolean();
    if (e.text == "Int") return Sort::integer();
    if (e.text == "Real") return Sort::real();
    if (e.text == "String") return Sort::string();
    sort_error_at(e, "unknown sort '" + e.text + "'");
  }
  if (e.is_call("_") && e.items.size() == 3 && e.items[1].is_symbol("BitVec")) {
    const std::uint32_t w = to_index(e.items[2]);
    if (w == 0) sort_error_at(e, "bit-vector width must be positive");
    return Sort::bitvec(w);
  }
  if (e.is_call("->") && e.items.size() >= 3) {
    std::vector<Sort> dom;
    for (std::size_t i = 1; i + 1 < e.items.size(); ++i) dom.push_back(parse_sort(e.items[i]));
    return Sort::function(std::move(dom), parse_sort(e.items.back()));
  }
  sort_error_at(e, "unsupported sort " + e.to_string());
}

Term parse_term(const SExpr& e, const SymbolContext& ctx, std::span<const SortedVar> locals) {
  return TermParser(ctx, locals).parse(e);
}

Term parse_term(std::string_view text, const SymbolContext& ctx, std::span<const SortedVar> locals) {
  return parse_term(read_sexpr(text), ctx, locals);
}

Value parse_value(const SExpr& e, const Sort& expected) {
  static const SymbolContext empty;
  Term t = [&] {
    try {
      return partial_evaluate(parse_term(e, empty));
    } catch (const Error& err) {
      throw Error(ErrorKind::ValueSyntaxError, "'" + e.to_string() + "': " + err.what());
    }
  }();
  if (!t.is_value()) throw Error(ErrorKind::ValueSyntaxError, "'" + e.to_string() + "' is not a value");
  if (expected.is_real() && t.sort().is_int()) return Value::real(Rational(t.as_value().as_int()));
  if (!(t.sort() == expected))
    throw Error(ErrorKind::SortMismatch, "'" + e.to_string() + "' has sort " + t.sort().to_string() +
                                             ", expected " + expected.to_string());
  return t.as_value();
}

Value parse_value(std::string_view text, const Sort& expected) {
  SExpr e = [&] {
    try {
      return read_sexpr(text);
    } catch (const ParseError& err) {
      throw Error(ErrorKind::ValueSyntaxError, err.what());
    }
  }();
  return parse_value(e, expected);
}

NamedDefinition parse_define_fun(const SExpr& e, const SymbolContext& ctx) {
  if (!e.is_call("define-fun") || e.items.size() != 5) fail_at(e, "malformed define-fun");
  NamedDefinition d;
  d.name = expect_symbol(e.items[1], "a function name");
  if (!e.items[2].is_list()) fail_at(e.items[2], "expected a parameter list");
  for (const auto& p : e.items[2].items) {
    if (!p.is_list() || p.items.size() != 2) fail_at(p, "expected (name sort)");
    d.def.params.push_back({expect_symbol(p.items[0], "a parameter name"), parse_sort(p.items[1])});
  }
  d.codomain = parse_sort(e.items[3]);
  d.def.body = parse_term(e.items[4], ctx, d.def.params);
  if (d.codomain.is_real() && d.def.body.is_value() && d.def.body.sort().is_int())
    d.def.body = Term::value(Value::real(Rational(d.def.body.as_value().as_int())));
  if (!(d.def.body.sort() == d.codomain))
    sort_error_at(e.items[4], "body of '" + d.name + "' has sort " + d.def.body.sort().to_string() +
                                  ", expected " + d.codomain.to_string());
  return d;
}

}  // namespace delphi
