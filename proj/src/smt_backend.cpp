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

#include "delphi/smt_backend.hpp"

#include <fstream>
#include <functional>
#include <regex>
#include <set>
#include <system_error>
#include <unordered_map>

#include "delphi/error.hpp"
#include "delphi/frontend.hpp"
#include "delphi/process.hpp"
#include "delphi/theory.hpp"
#include "delphi/term_ops.hpp"

namespace delphi {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Sat: return "sat";
    case Verdict::Unsat: return "unsat";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

const FunctionDef* Model::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

Model Model::restricted_to(std::span<const SortedVar> symbols) const {
  Model m;
  for (const auto& s : symbols)
    if (const FunctionDef* d = find(s.name)) m.set(s.name, *d);
  return m;
}

namespace {

// Function-valued arguments cannot be sent to the solver; each distinct
// lambda is replaced by a fresh Int tag and Fn-sorted domains become Int.
struct Tagger {
  std::unordered_map<Value, long long, ValueHash> tags;

  Term rewrite(const Term& t) {
    if (t.is_value()) {
      if (!t.sort().is_function()) return t;
      auto [it, _] = tags.emplace(t.as_value(), static_cast<long long>(tags.size()));
      return make_int(it->second);
    }
    if (t.child_count() == 0) return t;
    if (t.kind() == TermKind::App) {
      std::vector<Term> args;
      bool changed = false;
      for (const Term& a : t.args()) {
        args.push_back(rewrite(a));
        changed = changed || !(args.back() == a);
      }
      if (!changed) return t;
      return Term::app(t.name(), t.symbol_kind(), std::move(args), t.sort(),
                       std::vector<std::uint32_t>(t.indices().begin(), t.indices().end()));
    }
    if (t.kind() == TermKind::Let) {
      std::vector<std::pair<std::string, Term>> b;
      for (std::size_t i = 0; i < t.args().size(); ++i) b.emplace_back(t.let_names()[i], rewrite(t.args()[i]));
      return Term::let(std::move(b), rewrite(t.body()));
    }
    return Term::quant(t.quantifier(), std::vector<SortedVar>(t.bound_vars().begin(), t.bound_vars().end()),
                       rewrite(t.body()));
  }
};

Sort tagged(const Sort& s) {
  if (!s.is_function()) return s;
  std::vector<Sort> dom;
  for (const Sort& d : s.domain()) dom.push_back(d.is_function() ? Sort::integer() : d);
  return Sort::function(std::move(dom), s.codomain());
}

std::string logic_for(const std::string& requested, bool has_uf, bool tagged_fns) {
  if (requested.empty() || requested == "ALL" || tagged_fns) return "ALL";
  static const std::regex re("(QF_)?(AX|A)?(UF)?(.*)");
  std::smatch m;
  if (!std::regex_match(requested, m, re)) return "ALL";
  if (!has_uf || m[3].matched) return requested;
  std::string rest = m[4].str();
  if (rest.empty()) return "ALL";
  return m[1].str() + m[2].str() + "UF" + rest;
}

}  // namespace

SmtBackend::SmtBackend(BackendConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.command.empty()) throw Error(ErrorKind::InvalidProblem, "empty SMT solver command");
}

std::string SmtBackend::benchmark(std::span<const SortedVar> declarations, const Term& formula) const {
  Tagger tagger;
  const Term body = tagger.rewrite(formula);
  bool has_uf = false;
  for (const auto& d : declarations) has_uf = has_uf || d.sort.is_function();
  std::string out = "(set-option :produce-models true)\n";
  out += "(set-logic " + logic_for(cfg_.logic, has_uf, !tagger.tags.empty()) + ")\n";
  for (const auto& d : declarations) {
    const Sort s = tagged(d.sort);
    out += "(declare-fun " + quote_symbol(d.name) + " (";
    if (s.is_function()) {
      for (std::size_t i = 0; i < s.domain().size(); ++i) {
        if (i) out += ' ';
        out += s.domain()[i].to_string();
      }
    }
    out += ") " + (s.is_function() ? s.codomain() : s).to_string() + ")\n";
  }
  out += "(assert " + print_term(body) + ")\n(check-sat)\n(get-model)\n";
  return out;
}

CheckResult SmtBackend::check_sat(std::span<const SortedVar> declarations, const Term& formula) {
  CheckResult res;
  res.benchmark = benchmark(declarations, formula);
  const std::size_t n = queries_++;
  if (!cfg_.persist_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cfg_.persist_dir, ec);
    std::ofstream(cfg_.persist_dir / ("query-" + std::to_string(n) + ".smt2")) << res.benchmark;
  }
  ProcessOptions opts;
  opts.timeout = cfg_.timeout;
  opts.stdin_text = res.benchmark;
  ProcessResult pr;
  try {
    pr = run_process(cfg_.command, opts);
  } catch (const std::system_error& e) {
    throw Error(ErrorKind::BackendCrash, std::string("cannot start SMT solver: ") + e.what());
  }
  res.seconds = pr.seconds;
  if (pr.timed_out) throw Error(ErrorKind::BackendTimeout, "SMT solver exceeded its time limit");

  // The verdict is the first token; the trailing (get-model) may legitimately
  // fail after unsat/unknown, so the exit code is only consulted if no verdict
  // can be read.
  std::size_t p = pr.out.find_first_not_of(" \t\r\n");
  std::string head;
  if (p != std::string::npos) {
    std::size_t e = pr.out.find_first_of(" \t\r\n()", p);
    head = pr.out.substr(p, e == std::string::npos ? std::string::npos : e - p);
  }
  auto crash = [&](const std::string& why) {
    std::string tail = (pr.out + pr.err).substr(0, 600);
    return Error(ErrorKind::BackendCrash, why + (tail.empty() ? "" : ": " + tail));
  };
  if (head == "unsat") {
    res.verdict = Verdict::Unsat;
  } else if (head == "unknown") {
    res.verdict = Verdict::Unknown;
    res.reason = "backend returned unknown";
  } else if (head == "sat") {
    res.verdict = Verdict::Sat;
    try {
      res.model = parse_model(std::string_view(pr.out).substr(p + 3), declarations);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ModelParseError) throw;
      throw Error(ErrorKind::ModelParseError, e.what());
    }
  } else {
    throw crash(pr.signal ? "SMT solver killed by signal " + std::to_string(*pr.signal)
                          : "SMT solver produced no verdict (exit code " + std::to_string(pr.exit_code) + ")");
  }
  return res;
}

namespace {

void symbols_in(const SExpr& e, std::set<std::string>& out) {
  if (e.is_symbol()) out.insert(e.text);
  for (const auto& c : e.items) symbols_in(c, out);
}

}  // namespace

Model parse_model(std::string_view text, std::span<const SortedVar> declarations) {
  std::vector<SExpr> top;
  try {
    top = read_sexprs(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::ModelParseError, e.what());
  }
  std::vector<const SExpr*> defs;
  std::function<void(const SExpr&)> collect = [&](const SExpr& e) {
    if (e.is_call("define-fun")) {
      defs.push_back(&e);
    } else if (e.is_list()) {
      for (const auto& c : e.items)
        if (c.is_list()) collect(c);
    }
  };
  for (const auto& e : top) {
    if (e.is_call("error")) break;
    collect(e);
  }

  std::map<std::string, const SExpr*> by_name;
  for (const SExpr* d : defs)
    if (d->items.size() == 5 && d->items[1].is_symbol()) by_name[d->items[1].text] = d;
  std::map<std::string, Sort> declared;
  for (const auto& d : declarations) declared[d.name] = d.sort;

  SymbolContext ctx;
  std::map<std::string, int> state;  // 1 = in progress, 2 = done, 3 = failed
  std::function<bool(const std::string&)> resolve = [&](const std::string& name) -> bool {
    int& st = state[name];
    if (st == 2) return true;
    if (st != 0) return false;
    st = 1;
    const SExpr& d = *by_name.at(name);
    std::set<std::string> used;
    symbols_in(d.items[4], used);
    for (const auto& u : used)
      if (u != name && by_name.count(u)) resolve(u);
    try {
      NamedDefinition nd = parse_define_fun(d, ctx);
      ctx.macros[name] = std::move(nd.def);
      state[name] = 2;
      return true;
    } catch (const Error& e) {
      state[name] = 3;
      if (declared.count(name))
        throw Error(ErrorKind::ModelParseError, "cannot read model entry '" + name + "': " + e.what());
      return false;
    }
  };

  Model m;
  for (const auto& [name, _] : by_name) {
    if (!resolve(name)) continue;
    FunctionDef def = ctx.macros.at(name);
    auto it = declared.find(name);
    if (it != declared.end()) {
      const Sort& want = it->second;
      Sort have = def.params.empty() ? def.body.sort() : def.sort();
      if (want.is_function() && !def.params.empty()) {
        // domains of tagged Fn arguments come back as Int
        have = def.sort();
        if (!(tagged(want) == have) && !(want == have))
          throw Error(ErrorKind::ModelParseError, "model entry '" + name + "' has sort " + have.to_string() +
                                                      ", declared " + want.to_string());
      } else if (!(want == have)) {
        throw Error(ErrorKind::ModelParseError, "model entry '" + name + "' has sort " + have.to_string() +
                                                    ", declared " + want.to_string());
      }
      if (def.params.empty()) {
        Term v = partial_evaluate(def.body);
        if (!v.is_value()) throw Error(ErrorKind::ModelParseError, "model entry '" + name + "' is not a value");
        def.body = v;
      }
    }
    m.set(name, std::move(def));
  }
  return m;
}

Value eval_in_model(const Model& m, const std::string& sym, const Sort& sym_sort, std::span<const Value> args,
                    std::vector<std::string>* log) {
  const FunctionDef* d = m.find(sym);
  const Sort& cod = sym_sort.is_function() ? sym_sort.codomain() : sym_sort;
  if (!d) {
    if (log) log->push_back("IncompleteModel: no interpretation for '" + sym + "', using " + print_value(Value::default_of(cod)));
    return Value::default_of(cod);
  }
  if (d->params.size() != args.size())
    throw Error(ErrorKind::SortMismatch, "arity mismatch evaluating '" + sym + "' in the model");
  std::vector<Term> targs;
  for (const auto& a : args) targs.push_back(Term::value(a));
  Term r = partial_evaluate(d->apply(targs));
  if (!r.is_value()) throw Error(ErrorKind::EvalError, "model entry for '" + sym + "' does not evaluate to a value");
  return r.as_value();
}

FunctionBinding model_binding(const Model& m, std::span<const SortedVar> symbols, std::vector<std::string>* log) {
  FunctionBinding b;
  for (const auto& s : symbols) {
    if (const FunctionDef* d = m.find(s.name)) {
      b.emplace(s.name, *d);
      continue;
    }
    FunctionDef def;
    if (s.sort.is_function()) {
      def = Value::default_of(s.sort).as_function();
    } else {
      def.body = Term::value(Value::default_of(s.sort));
    }
    if (log) log->push_back("IncompleteModel: no interpretation for '" + s.name + "', using default");
    b.emplace(s.name, std::move(def));
  }
  return b;
}

}  // namespace delphi
