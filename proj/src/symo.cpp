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


#include "delphi/symo.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "delphi/error.hpp"
#include "delphi/frontend.hpp"
#include "delphi/term_ops.hpp"
#include "delphi/theory.hpp"

namespace delphi {

std::string_view to_string(SymoStatus s) {
  switch (s) {
    case SymoStatus::Solution: return "solution";
    case SymoStatus::NoSolution: return "no-solution";
    case SymoStatus::Unknown: return "unknown";
  }
  return "unknown";
}

SymoProblem symo_problem(const Script& s) {
  SymoProblem p;
  p.targets = s.targets;
  p.oracles = s.oracles;
  p.variables = s.variables;
  p.spec = make_and(s.constraints);
  p.logic = s.logic;
  for (const auto& i : s.interfaces) (i.definitional() ? p.definitional : p.constraint_only).push_back(i);
  return p;
}

void validate(const SymoProblem& p) {
  auto bad = [](const std::string& msg) { throw Error(ErrorKind::InvalidProblem, msg); };
  if (p.targets.empty()) bad("no synthesis targets");
  if (!p.spec.sort().is_bool()) bad("constraint conjunction is not Bool");
  std::set<std::string> names;
  for (const auto& t : p.targets)
    if (!names.insert(t.name).second) bad("'" + t.name + "' declared twice");
  for (const auto& v : p.variables)
    if (!names.insert(v.name).second) bad("'" + v.name + "' declared twice");
  std::set<std::string> th;
  for (const auto& o : p.oracles)
    if (names.count(o.name) || !th.insert(o.name).second) bad("'" + o.name + "' declared twice");

  std::function<void(const Term&)> no_quant = [&](const Term& t) {
    if (t.kind() == TermKind::Quant) bad("constraints must be quantifier-free");
    for (std::size_t i = 0; i < t.child_count(); ++i) no_quant(t.child(i));
  };
  no_quant(p.spec);
  for (const auto& v : free_vars(p.spec))
    if (std::find(p.variables.begin(), p.variables.end(), v) == p.variables.end())
      bad("constraints mention undeclared variable '" + v.name + "'");
  for (const auto& n : collect_symbols(p.spec, SymbolKind::Ordinary))
    if (std::none_of(p.targets.begin(), p.targets.end(), [&](const SynthTarget& t) { return t.name == n; }))
      bad("constraints mention '" + n + "', which is not a synthesis target");
  for (const auto& n : collect_symbols(p.spec, SymbolKind::Oracle))
    if (!th.count(n)) bad("constraints mention undeclared oracle symbol '" + n + "'");

  std::map<std::string, int> defined;
  for (const auto& i : p.definitional) {
    validate_interface(i);
    if (!i.definitional()) bad("interface '" + i.name + "' does not define an oracle symbol");
    ++defined[*i.defines];
  }
  for (const auto& o : p.oracles)
    if (defined[o.name] != 1)
      bad("oracle symbol '" + o.name + "' has " + std::to_string(defined[o.name]) +
          " defining interfaces (exactly one required)");
  for (const auto& i : p.constraint_only) {
    validate_interface(i);
    if (i.assumption_gen) bad("interface '" + i.name + "' generates assumptions but defines no oracle symbol");
    if (!i.constraint_gen) bad("interface '" + i.name + "' generates nothing");
  }
}

namespace {

Term lift_variables(const Term& t, std::span<const SortedVar> xs) {
  Binding b;
  for (const auto& x : xs) b.emplace(x.name, Term::app(x.name, SymbolKind::Ordinary, {}, x.sort));
  return substitute(t, b);
}

}  // namespace

SmtoProblem verification_problem(const SymoProblem& p, const FunctionBinding& candidate) {
  SmtoProblem q;
  q.ordinary = p.variables;
  q.oracles = p.oracles;
  q.interfaces = p.definitional;
  q.logic = p.logic;
  q.formula = partial_evaluate(make_not(instantiate_functions(lift_variables(p.spec, p.variables), candidate)));
  return q;
}

SmtoVerdict verify_candidate(const SymoProblem& p, const FunctionBinding& candidate, const AssumptionSet& seed,
                             SmtBackend& backend, OracleRuntime& oracles, const SmtoOptions& opts) {
  return smto_solve(verification_problem(p, candidate), seed, backend, oracles, opts);
}

namespace {

struct Pattern {
  std::string target;
  std::vector<Term> args;
};

void collect_patterns(const Term& t, const std::set<std::string>& targets, std::vector<Pattern>& out) {
  if (t.is_app_of(SymbolKind::Ordinary) && targets.count(t.name()))
    out.push_back({t.name(), std::vector<Term>(t.args().begin(), t.args().end())});
  for (std::size_t i = 0; i < t.child_count(); ++i) collect_patterns(t.child(i), targets, out);
}

void collect_ground(const Term& t, const std::set<std::string>& targets, std::vector<Pattern>& out) {
  if (t.is_app_of(SymbolKind::Ordinary) && targets.count(t.name()) &&
      std::all_of(t.args().begin(), t.args().end(), [](const Term& a) { return a.is_value(); }))
    out.push_back({t.name(), std::vector<Term>(t.args().begin(), t.args().end())});
  for (std::size_t i = 0; i < t.child_count(); ++i) collect_ground(t.child(i), targets, out);
}

std::vector<std::string> printed(std::span<const Value> vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(print_value(v));
  return out;
}

}  // namespace

std::vector<InferredCall> infer_oracle_inputs(std::span<const OracleInterface> interfaces,
                                              std::span<const SynthTarget> targets, const Term& phi_inst,
                                              const FunctionBinding& candidate, CallLedger& issued) {
  std::set<std::string> target_names;
  for (const auto& t : targets) target_names.insert(t.name);
  std::vector<Pattern> ground;
  collect_ground(phi_inst, target_names, ground);

  std::vector<InferredCall> out;
  auto emit = [&](const OracleInterface& i, std::vector<Value> inputs) {
    if (issued.emplace(i.name, printed(inputs)).second) out.push_back({&i, std::move(inputs)});
  };

  for (const auto& i : interfaces) {
    // Query variables standing for a candidate function.
    std::map<std::string, Value> fixed;
    for (const auto& q : i.query) {
      auto t = std::find_if(targets.begin(), targets.end(), [&](const SynthTarget& s) {
        return s.name == q.name && s.sort() == q.sort && s.sort().is_function();
      });
      if (t != targets.end() && candidate.count(t->name))
        fixed.emplace(q.name, Value::function(candidate.at(t->name)));
    }
    auto assemble = [&](const std::map<std::string, Value>& b) -> std::optional<std::vector<Value>> {
      std::vector<Value> inputs;
      for (const auto& q : i.query) {
        auto it = b.find(q.name);
        if (it == b.end()) return std::nullopt;
        inputs.push_back(it->second);
      }
      return inputs;
    };
    if (auto inputs = assemble(fixed)) {
      emit(i, std::move(*inputs));
      continue;
    }
    if (!i.constraint_gen) continue;

    std::vector<Pattern> patterns;
    collect_patterns(*i.constraint_gen, target_names, patterns);
    for (const Pattern& pat : patterns) {
      const SynthTarget& tgt = *std::find_if(targets.begin(), targets.end(),
                                             [&](const SynthTarget& s) { return s.name == pat.target; });
      for (const Pattern& g : ground) {
        if (g.target != pat.target || g.args.size() != pat.args.size()) continue;
        std::map<std::string, Value> b = fixed;
        bool ok = true;
        for (std::size_t k = 0; k < pat.args.size() && ok; ++k) {
          const Term& a = pat.args[k];
          const Value& c = g.args[k].as_value();
          if (a.is_value()) {
            ok = a.as_value() == c;
          } else if (a.is_var() && std::any_of(i.query.begin(), i.query.end(),
                                               [&](const SortedVar& q) { return q.name == a.name(); })) {
            auto [it, fresh] = b.emplace(a.name(), c);
            ok = fresh || it->second == c;
          } else if (a.is_var()) {
            // response variable: unconstrained by the query
          } else {
            ok = false;
          }
        }
        if (!ok) continue;
        // A single leftover query variable of the target's codomain is the claimed output.
        std::vector<const SortedVar*> open;
        for (const auto& q : i.query)
          if (!b.count(q.name)) open.push_back(&q);
        if (open.size() == 1 && open[0]->sort == tgt.codomain && candidate.count(tgt.name)) {
          Term r = partial_evaluate(candidate.at(tgt.name).apply(g.args));
          if (!r.is_value()) continue;
          b.emplace(open[0]->name, r.as_value());
        }
        if (auto inputs = assemble(b)) emit(i, std::move(*inputs));
      }
    }
  }
  return out;
}

SymoOutcome symo_solve(const SymoProblem& p, SmtBackend& backend, OracleRuntime& oracles, const SymoOptions& opts) {
  validate(p);
  SymoOutcome out;
  AssumptionSet& a = out.assumptions;
  ConstraintStore s;
  CallLedger issued;
  SynthOptions so = opts.synth;
  if (so.logic.empty()) so.logic = p.logic;
  Synthesizer synth(p.targets, so);

  ResidualChecker residual = [&](const Term& t) {
    CheckResult r = backend.check_sat(p.oracles, make_and({t, a.conjunction()}));
    if (r.verdict == Verdict::Unknown) out.report.log.push_back("residual store check unknown: " + r.reason);
    return r.verdict != Verdict::Unsat;
  };
  const std::vector<Value> spec_constants = collect_values(p.spec);

  for (std::size_t iter = 1;; ++iter) {
    if (opts.max_iterations && iter > *opts.max_iterations) {
      out.status = SymoStatus::Unknown;
      out.reason = "iteration limit " + std::to_string(*opts.max_iterations) + " reached";
      return out;
    }
    const auto start = std::chrono::steady_clock::now();
    SymoIteration it;
    std::vector<Value> constants = spec_constants;
    for (const Term& c : s.conjuncts())
      for (const Value& v : collect_values(c)) constants.push_back(v);

    std::optional<FunctionBinding> cand;
    const std::size_t before_checked = synth.candidates_checked();
    try {
      cand = synth.synthesize(s.conjuncts(), a, residual, constants);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExhausted) throw;
      out.status = SymoStatus::Unknown;
      out.reason = e.what();
      return out;
    }
    if (!cand) {
      out.status = SymoStatus::NoSolution;
      out.reason = "candidate space exhausted";
      return out;
    }
    it.candidate = *cand;
    it.candidates_checked = synth.candidates_checked() - before_checked;

    SmtoVerdict v = verify_candidate(p, *cand, a, backend, oracles, opts.smto);
    it.verification = v.status;
    for (const auto& si : v.report.iterations)
      it.verification_calls.insert(it.verification_calls.end(), si.calls.begin(), si.calls.end());
    for (auto& l : v.report.log) out.report.log.push_back(std::move(l));

    if (v.status == SmtoStatus::Unsat) {
      a = v.assumptions;
      it.store = s.conjuncts();
      it.assumptions = a.size();
      it.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      out.report.iterations.push_back(std::move(it));
      out.status = SymoStatus::Solution;
      out.solution = *cand;
      return out;
    }
    if (v.status == SmtoStatus::Unknown) {
      out.status = SymoStatus::Unknown;
      out.reason = "verification: " + v.reason;
      out.report.iterations.push_back(std::move(it));
      return out;
    }

    const std::size_t a_before = a.size();
    const std::size_t s_before = s.size();
    a = v.assumptions;

    // Counterexample point.
    Binding point;
    const FunctionBinding mb = model_binding(*v.model, p.variables, &out.report.log);
    for (const auto& x : p.variables) {
      Term val = partial_evaluate(mb.at(x.name).body);
      point.emplace(x.name, val);
      if (val.is_value()) it.counterexample.emplace_back(x.name, val.as_value());
    }
    const Term phi_inst = partial_evaluate(substitute(p.spec, point));
    s.add(phi_inst);

    // Constraints generated during verification.
    for (const auto& call : it.verification_calls) {
      auto i = std::find_if(p.definitional.begin(), p.definitional.end(),
                            [&](const OracleInterface& d) { return d.name == call.interface; });
      if (i == p.definitional.end() || !i->constraint_gen) continue;
      GeneratedFormulas g = instantiate_generators(*i, call.inputs, call.outputs);
      if (g.constraint) s.add(*g.constraint);
    }

    // Phase II.
    for (const InferredCall& c : infer_oracle_inputs(p.constraint_only, p.targets, phi_inst, *cand, issued)) {
      it.constraint_calls.push_back(oracles.query(*c.interface, c.inputs));
      GeneratedFormulas g = instantiate_generators(*c.interface, c.inputs, it.constraint_calls.back().outputs);
      if (g.constraint) s.add(*g.constraint);
    }

    if (s.size() == s_before && a.size() == a_before)
      throw Error(ErrorKind::InternalProgressFailure,
                  "iteration " + std::to_string(iter) + " refuted a candidate without growing S or A");
    it.store = s.conjuncts();
    it.assumptions = a.size();
    it.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.report.iterations.push_back(std::move(it));
  }
}

// Interface templates

OracleInterface standard_interface(std::string_view name, const TemplateBinding& b) {
  static const std::set<std::string_view> known{"membership",   "io",
                                                "neg_witness",  "pos_witness",
                                                "implication",  "counterexample",
                                                "distinguishing_input", "correctness",
                                                "correctness_with_cex"};
  if (!known.count(name)) throw Error(ErrorKind::UnknownTemplate, "unknown interface template '" + std::string(name) + "'");
  const SynthTarget& f = b.target;
  const std::size_t n = f.params.size();
  if (b.rank && *b.rank != n)
    throw Error(ErrorKind::RankMismatch, "template '" + std::string(name) + "' bound at rank " +
                                             std::to_string(*b.rank) + " but '" + f.name + "' has rank " +
                                             std::to_string(n));

  OracleInterface i;
  i.name = std::string(name) + "_" + f.name;
  i.executable = b.executable;
  auto app_f = [&](const std::vector<Term>& args) {
    return Term::app(f.name, SymbolKind::Ordinary, args, f.codomain);
  };
  auto vars = [&](std::vector<SortedVar>& into, const std::string& prefix) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < n; ++k) {
      into.push_back({prefix + std::to_string(k + 1), f.params[k].sort});
      ts.push_back(Term::var(into.back().name, into.back().sort));
    }
    return ts;
  };
  auto candidate_query = [&] {
    if (n == 0) throw Error(ErrorKind::RankMismatch, "template '" + std::string(name) + "' needs a function of rank >= 1");
    i.query.push_back({f.name, f.sort()});
  };
  auto spec_instance = [&](std::vector<SortedVar>& into) {
    if (!b.spec) throw Error(ErrorKind::InvalidProblem, "template '" + std::string(name) + "' needs the constraint formula");
    Binding sub;
    for (std::size_t k = 0; k < b.spec_vars.size(); ++k) {
      into.push_back({"x" + std::to_string(k + 1), b.spec_vars[k].sort});
      sub.emplace(b.spec_vars[k].name, Term::var(into.back().name, into.back().sort));
    }
    for (const auto& v : free_vars(*b.spec))
      if (!sub.count(v.name))
        throw Error(ErrorKind::RankMismatch, "constraint variable '" + v.name + "' is not bound by the template");
    return substitute(*b.spec, sub);
  };
  const Term zb = Term::var("zb", Sort::boolean());
  const Term z = Term::var("z", f.codomain);

  if (name == "membership" || name == "io") {
    std::vector<Term> ys = vars(i.query, "y");
    i.query.push_back({"y", f.codomain});
    i.response.push_back({"zb", Sort::boolean()});
    Term eq = make_eq(app_f(ys), Term::var("y", f.codomain));
    i.constraint_gen = make_eq(zb, name == "membership" ? eq : make_not(eq));
  } else if (name == "neg_witness" || name == "pos_witness") {
    std::vector<Term> zs = vars(i.response, "z");
    i.response.push_back({"z", f.codomain});
    Term eq = make_eq(app_f(zs), z);
    i.constraint_gen = name == "pos_witness" ? eq : make_not(eq);
  } else if (name == "implication") {
    candidate_query();
    if (!f.codomain.is_bool())
      throw Error(ErrorKind::RankMismatch, "implication needs a Bool-valued target");
    std::vector<Term> zs = vars(i.response, "z");
    std::vector<Term> ws = vars(i.response, "w");
    i.constraint_gen = make_implies(app_f(zs), app_f(ws));
  } else if (name == "counterexample") {
    candidate_query();
    i.constraint_gen = spec_instance(i.response);
  } else if (name == "distinguishing_input") {
    candidate_query();
    std::vector<Term> zs = vars(i.response, "z");
    i.response.push_back({"z", f.codomain});
    i.constraint_gen = make_eq(app_f(zs), z);
  } else {
    candidate_query();
    i.name = b.oracle;
    i.defines = b.oracle;
    i.response.push_back({"zb", Sort::boolean()});
    i.assumption_gen = make_eq(
        Term::app(b.oracle, SymbolKind::Oracle, {Term::var(f.name, f.sort())}, Sort::boolean()), zb);
    if (name == "correctness_with_cex") i.constraint_gen = spec_instance(i.response);
  }
  validate_interface(i);
  return i;
}

}  // namespace delphi
