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

#include "delphi/smto.hpp"

#include <set>

#include "delphi/error.hpp"
#include "delphi/frontend.hpp"
#include "delphi/term_ops.hpp"
#include "delphi/theory.hpp"

namespace delphi {

std::string_view to_string(SmtoStatus s) {
  switch (s) {
    case SmtoStatus::Sat: return "sat";
    case SmtoStatus::Unsat: return "unsat";
    case SmtoStatus::Unknown: return "unknown";
  }
  return "unknown";
}

const OracleInterface& SmtoProblem::interface_for(const std::string& oracle) const {
  for (const auto& i : interfaces)
    if (i.defines && *i.defines == oracle) return i;
  throw Error(ErrorKind::InvalidProblem, "oracle symbol '" + oracle + "' has no defining interface");
}

SmtoProblem smto_problem(const Script& s) {
  SmtoProblem p;
  p.ordinary = s.ordinary;
  p.oracles = s.oracles;
  p.formula = make_and(s.assertions);
  p.interfaces = s.interfaces;
  p.logic = s.logic;
  return p;
}

void validate(const SmtoProblem& p) {
  auto bad = [](const std::string& msg) { throw Error(ErrorKind::InvalidProblem, msg); };
  if (!p.formula.sort().is_bool()) bad("formula is not Bool");
  std::set<std::string> f, th;
  for (const auto& s : p.ordinary)
    if (!f.insert(s.name).second) bad("ordinary symbol '" + s.name + "' declared twice");
  for (const auto& s : p.oracles) {
    if (f.count(s.name)) bad("'" + s.name + "' is both ordinary and oracle");
    if (!th.insert(s.name).second) bad("oracle symbol '" + s.name + "' declared twice");
  }
  for (const auto& n : collect_symbols(p.formula, SymbolKind::Ordinary))
    if (!f.count(n)) bad("formula mentions undeclared symbol '" + n + "'");
  for (const auto& n : collect_symbols(p.formula, SymbolKind::Oracle))
    if (!th.count(n)) bad("formula mentions undeclared oracle symbol '" + n + "'");
  if (!free_vars(p.formula).empty()) bad("formula has free variable '" + free_vars(p.formula)[0].name + "'");
  std::map<std::string, int> defined;
  for (const auto& i : p.interfaces) {
    if (!i.definitional())
      bad("interface '" + i.name + "' is not definitional; only the definitional fragment is supported");
    validate_interface(i);
    if (!th.count(*i.defines)) bad("interface '" + i.name + "' defines undeclared symbol '" + *i.defines + "'");
    ++defined[*i.defines];
  }
  for (const auto& s : p.oracles) {
    const int n = defined[s.name];
    if (n != 1)
      bad("oracle symbol '" + s.name + "' has " + std::to_string(n) + " defining interfaces (exactly one required)");
    if (!(p.interface_for(s.name).symbol_sort() == s.sort))
      bad("interface for '" + s.name + "' does not match its declared sort");
  }
}

ConsistencyResult consistency_check(const SmtoProblem& p, const Model& m, AssumptionSet& a,
                                    OracleRuntime& oracles, std::vector<std::string>* log) {
  ConsistencyResult r;
  Term mu = partial_evaluate(instantiate_functions(p.formula, model_binding(m, p.ordinary, log)));
  while (auto app = find_oracle_application(mu)) {
    std::optional<Value> d = a.lookup(app->symbol, app->inputs);
    if (!d) {
      const OracleInterface& i = p.interface_for(app->symbol);
      r.calls.push_back(oracles.query(i, app->inputs));
      d = r.calls.back().outputs[i.defining_output()];
      if (a.insert(app->symbol, app->inputs, *d)) ++r.added;
    }
    mu = partial_evaluate(replace_at(mu, app->position, *d));
  }
  r.ok = mu.is_true();
  r.residual = mu;
  return r;
}

SmtoVerdict smto_solve(const SmtoProblem& p, const AssumptionSet& seed, SmtBackend& backend,
                       OracleRuntime& oracles, const SmtoOptions& opts) {
  validate(p);
  SmtoVerdict v;
  v.assumptions = seed;
  std::vector<SortedVar> decls = p.ordinary;
  decls.insert(decls.end(), p.oracles.begin(), p.oracles.end());
  for (std::size_t iter = 1;; ++iter) {
    if (opts.max_iterations && iter > *opts.max_iterations)
      throw Error(ErrorKind::IterationLimit,
                  "SMTO loop stopped after " + std::to_string(*opts.max_iterations) + " iterations");
    std::vector<Term> parts{p.formula};
    for (const auto& e : v.assumptions.entries()) parts.push_back(e.as_term());
    CheckResult res = backend.check_sat(decls, make_and(std::move(parts)));
    SmtoIteration it;
    it.backend = res.verdict;
    if (res.verdict == Verdict::Unsat) {
      it.assumptions_total = v.assumptions.size();
      v.report.iterations.push_back(std::move(it));
      v.status = SmtoStatus::Unsat;
      return v;
    }
    if (res.verdict == Verdict::Unknown) {
      it.assumptions_total = v.assumptions.size();
      v.report.iterations.push_back(std::move(it));
      v.status = SmtoStatus::Unknown;
      v.reason = res.reason.empty() ? "backend returned unknown" : res.reason;
      return v;
    }
    const Model& m = *res.model;
    ConsistencyResult c = consistency_check(p, m, v.assumptions, oracles, &v.report.log);
    it.calls = std::move(c.calls);
    it.assumptions_added = c.added;
    it.assumptions_total = v.assumptions.size();
    it.consistent = c.ok;
    v.report.iterations.push_back(std::move(it));
    if (c.ok) {
      Model restricted;
      for (const auto& [name, def] : model_binding(m, p.ordinary)) restricted.set(name, def);
      v.model = std::move(restricted);
      v.status = SmtoStatus::Sat;
      return v;
    }
    if (c.added == 0)
      throw Error(ErrorKind::InternalProgressFailure,
                  "model refuted without a new oracle assumption; residual " + print_term(c.residual));
  }
}

}  // namespace delphi
