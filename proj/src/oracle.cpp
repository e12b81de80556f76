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

#include "delphi/oracle.hpp"

#include <chrono>
#include <system_error>

#include "delphi/error.hpp"
#include "delphi/frontend.hpp"
#include "delphi/process.hpp"
#include "delphi/term_ops.hpp"
#include "delphi/theory.hpp"

namespace delphi {

std::size_t OracleInterface::defining_output() const {
  if (!defines || !assumption_gen) throw Error(ErrorKind::InvalidProblem, "interface '" + name + "' is not definitional");
  const std::string& z = assumption_gen->args()[1].name();
  for (std::size_t k = 0; k < response.size(); ++k)
    if (response[k].name == z) return k;
  throw Error(ErrorKind::InvalidProblem, "interface '" + name + "' has a malformed assumption generator");
}

Sort OracleInterface::symbol_sort() const {
  const Sort& cod = response[defining_output()].sort;
  if (query.empty()) return cod;
  std::vector<Sort> dom;
  for (const auto& q : query) dom.push_back(q.sort);
  return Sort::function(std::move(dom), cod);
}

OracleInterface definitional_interface(const std::string& symbol, std::vector<Sort> domain,
                                       Sort codomain, std::string executable) {
  OracleInterface i;
  i.name = symbol;
  i.defines = symbol;
  i.executable = std::move(executable);
  std::vector<Term> ys;
  for (std::size_t k = 0; k < domain.size(); ++k) {
    i.query.push_back({"y" + std::to_string(k + 1), domain[k]});
    ys.push_back(Term::var(i.query.back().name, domain[k]));
  }
  i.response.push_back({"z", codomain});
  i.assumption_gen = make_eq(Term::app(symbol, SymbolKind::Oracle, std::move(ys), codomain),
                             Term::var("z", codomain));
  return i;
}

void validate_interface(const OracleInterface& i) {
  auto bad = [&](const std::string& msg) {
    throw Error(ErrorKind::InvalidProblem, "oracle interface '" + i.name + "': " + msg);
  };
  if (i.response.empty()) bad("no response variables");
  if (i.executable.empty() && !i.function) bad("no executable");
  auto check_vars = [&](const Term& g, const char* which) {
    if (!g.sort().is_bool()) bad(std::string(which) + " generator is not Bool");
    for (const auto& v : free_vars(g)) {
      bool ok = false;
      for (const auto& q : i.query) ok = ok || q == v;
      for (const auto& r : i.response) ok = ok || r == v;
      if (!ok) bad(std::string(which) + " generator mentions '" + v.name + "' outside the query and response variables");
    }
  };
  if (i.assumption_gen) check_vars(*i.assumption_gen, "assumption");
  if (i.constraint_gen) check_vars(*i.constraint_gen, "constraint");
  if (i.defines) {
    if (!i.assumption_gen) bad("definitional interface without an assumption generator");
    const Term& a = *i.assumption_gen;
    const bool shape = a.is_app_of(SymbolKind::Theory) && a.name() == "=" && a.args().size() == 2 &&
                       a.args()[0].is_app_of(SymbolKind::Oracle) && a.args()[0].name() == *i.defines &&
                       a.args()[1].is_var();
    if (!shape) bad("assumption generator is not of the form (= (theta y1 ... yj) z)");
    const auto ys = a.args()[0].args();
    if (ys.size() != i.query.size()) bad("defined symbol must take the full query domain");
    for (std::size_t k = 0; k < ys.size(); ++k)
      if (!ys[k].is_var() || ys[k].name() != i.query[k].name) bad("defined symbol must take y1 ... yj in order");
    i.defining_output();
  }
}

// ------------------------------------------------------------ AssumptionSet

Term AssumptionSet::Entry::as_term() const {
  std::vector<Term> args;
  for (const auto& v : inputs) args.push_back(Term::value(v));
  return make_eq(Term::app(symbol, SymbolKind::Oracle, std::move(args), output.sort()), Term::value(output));
}

std::size_t AssumptionSet::KeyHash::operator()(const Key& k) const {
  std::size_t h = std::hash<std::string>{}(k.symbol);
  for (const auto& v : k.inputs) h = hash_combine(h, v.hash());
  return h;
}

std::optional<Value> AssumptionSet::lookup(const std::string& symbol, std::span<const Value> inputs) const {
  auto it = index_.find(Key{symbol, std::vector<Value>(inputs.begin(), inputs.end())});
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second].output;
}

bool AssumptionSet::insert(const std::string& symbol, std::vector<Value> inputs, Value output) {
  Key key{symbol, inputs};
  auto it = index_.find(key);
  if (it != index_.end()) {
    if (!(entries_[it->second].output == output))
      throw Error(ErrorKind::FunctionalViolation,
                  "conflicting values " + print_value(entries_[it->second].output) + " and " +
                      print_value(output) + " for " + print_term(entries_[it->second].as_term().args()[0]));
    return false;
  }
  index_.emplace(std::move(key), entries_.size());
  entries_.push_back({symbol, std::move(inputs), std::move(output)});
  return true;
}

Term AssumptionSet::conjunction() const {
  std::vector<Term> parts;
  for (const auto& e : entries_) parts.push_back(e.as_term());
  return make_and(std::move(parts));
}

// ------------------------------------------------------------ protocol

std::vector<std::string> encode_oracle_arguments(const OracleInterface& i, std::span<const Value> inputs) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (inputs[k].sort().is_function()) out.push_back(print_define_fun(i.query[k].name, inputs[k]));
    else out.push_back(print_value(inputs[k]));
  }
  return out;
}

std::vector<Value> decode_oracle_response(const OracleInterface& i, std::string_view text) {
  auto malformed = [&](const std::string& msg) -> Error {
    return Error(ErrorKind::MalformedResponse, "oracle '" + i.name + "': " + msg);
  };
  std::vector<SExpr> items;
  try {
    items = read_sexprs(text);
  } catch (const Error& e) {
    throw malformed(e.what());
  }
  if (items.size() != i.response.size())
    throw malformed("expected " + std::to_string(i.response.size()) + " response value(s), got " +
                    std::to_string(items.size()));
  std::vector<Value> out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    try {
      out.push_back(parse_value(items[k], i.response[k].sort));
    } catch (const Error& e) {
      throw malformed("response " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  return out;
}

GeneratedFormulas instantiate_generators(const OracleInterface& i, std::span<const Value> inputs,
                                         std::span<const Value> outputs) {
  if (inputs.size() != i.query.size() || outputs.size() != i.response.size())
    throw Error(ErrorKind::SortMismatch, "generator arity mismatch for '" + i.name + "'");
  Binding b;
  for (std::size_t k = 0; k < inputs.size(); ++k) b.insert_or_assign(i.query[k].name, Term::value(inputs[k]));
  for (std::size_t k = 0; k < outputs.size(); ++k) b.insert_or_assign(i.response[k].name, Term::value(outputs[k]));
  GeneratedFormulas g;
  if (i.assumption_gen) g.assumption = partial_evaluate(substitute(*i.assumption_gen, b));
  if (i.constraint_gen) g.constraint = partial_evaluate(substitute(*i.constraint_gen, b));
  return g;
}

// ------------------------------------------------------------ runtime

OracleRuntime::OracleRuntime(OracleOptions options) : options_(options) {}

OracleCallRecord OracleRuntime::query(const OracleInterface& i, std::span<const Value> inputs) {
  if (inputs.size() != i.query.size())
    throw Error(ErrorKind::SortMismatch, "oracle '" + i.name + "' expects " + std::to_string(i.query.size()) +
                                             " input(s), got " + std::to_string(inputs.size()));
  for (std::size_t k = 0; k < inputs.size(); ++k)
    if (!(inputs[k].sort() == i.query[k].sort))
      throw Error(ErrorKind::SortMismatch, "oracle '" + i.name + "' input " + std::to_string(k + 1) +
                                               " has sort " + inputs[k].sort().to_string());
  std::vector<std::string> key_inputs;
  for (const auto& v : inputs) key_inputs.push_back(print_value(v));
  auto key = std::make_pair(i.name, std::move(key_inputs));
  if (i.definitional()) {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) {
      records_.push_back({i.name, std::vector<Value>(inputs.begin(), inputs.end()), it->second, 0, true});
      return records_.back();
    }
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<Value> out = invoke(i, inputs);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::lock_guard lock(mu_);
  ++invocations_[i.name];
  if (i.definitional()) {
    auto [it, fresh] = memo_.emplace(key, out);
    if (!fresh && !(it->second == out))
      throw Error(ErrorKind::FunctionalViolation, "oracle '" + i.name + "' gave two different answers for the same query");
  }
  records_.push_back({i.name, std::vector<Value>(inputs.begin(), inputs.end()), out, secs, false});
  return records_.back();
}

std::vector<Value> OracleRuntime::invoke(const OracleInterface& i, std::span<const Value> inputs) {
  if (i.function) {
    std::vector<Value> out = i.function(inputs);
    if (out.size() != i.response.size())
      throw Error(ErrorKind::MalformedResponse, "oracle '" + i.name + "' returned the wrong number of values");
    for (std::size_t k = 0; k < out.size(); ++k)
      if (!(out[k].sort() == i.response[k].sort))
        throw Error(ErrorKind::MalformedResponse, "oracle '" + i.name + "' returned a value of the wrong sort");
    return out;
  }
  std::vector<std::string> argv{i.executable};
  for (auto& a : encode_oracle_arguments(i, inputs)) argv.push_back(std::move(a));
  ProcessOptions opts;
  opts.timeout = options_.timeout;
  if (options_.seed) opts.env.emplace_back("DELPHI_ORACLE_SEED", std::to_string(*options_.seed));
  ProcessResult r;
  try {
    r = run_process(argv, opts);
  } catch (const std::system_error& e) {
    throw Error(ErrorKind::OracleCrash, "oracle '" + i.name + "': " + e.what());
  }
  if (r.timed_out)
    throw Error(ErrorKind::OracleTimeout, "oracle '" + i.name + "' exceeded " +
                                              std::to_string(options_.timeout.count()) + " ms");
  if (r.signal || r.exit_code != 0) {
    std::string why = r.signal ? "killed by signal " + std::to_string(*r.signal)
                               : "exit code " + std::to_string(r.exit_code);
    std::string err = r.err.size() > 400 ? r.err.substr(r.err.size() - 400) : r.err;
    throw Error(ErrorKind::OracleCrash, "oracle '" + i.name + "' failed (" + why + ")" +
                                            (err.empty() ? "" : ": " + err));
  }
  return decode_oracle_response(i, r.out);
}

std::size_t OracleRuntime::invocations() const {
  std::lock_guard lock(mu_);
  std::size_t n = 0;
  for (const auto& [_, c] : invocations_) n += c;
  return n;
}

std::size_t OracleRuntime::invocations(const std::string& interface) const {
  std::lock_guard lock(mu_);
  auto it = invocations_.find(interface);
  return it == invocations_.end() ? 0 : it->second;
}

std::vector<OracleCallRecord> OracleRuntime::records() const {
  std::lock_guard lock(mu_);
  return records_;
}

}  // namespace delphi
