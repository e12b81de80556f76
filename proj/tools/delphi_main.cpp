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


#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "delphi/error.hpp"
#include "delphi/frontend.hpp"
#include "delphi/process.hpp"
#include "delphi/smt_backend.hpp"
#include "delphi/smto.hpp"
#include "delphi/symo.hpp"

using namespace delphi;
using nlohmann::json;

namespace {

enum Exit { kSat = 0, kUnsat = 1, kUnknown = 2, kUsage = 3, kFault = 4 };

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::OracleCrash:
    case ErrorKind::OracleTimeout:
    case ErrorKind::MalformedResponse:
    case ErrorKind::FunctionalViolation:
    case ErrorKind::BackendCrash:
    case ErrorKind::BackendTimeout:
    case ErrorKind::ModelParseError:
    case ErrorKind::ExternalSolverError:
    case ErrorKind::InternalProgressFailure:
    case ErrorKind::EvalError:
      return kFault;
    case ErrorKind::IterationLimit:
    case ErrorKind::BudgetExhausted:
      return kUnknown;
    default:
      return kUsage;
  }
}

json values(std::span<const Value> vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(print_value(v));
  return a;
}

json calls(std::span<const OracleCallRecord> rs) {
  json a = json::array();
  for (const auto& r : rs)
    a.push_back({{"oracle", r.interface},
                 {"inputs", values(r.inputs)},
                 {"outputs", values(r.outputs)},
                 {"seconds", r.seconds},
                 {"cached", r.cached}});
  return a;
}

json definitions(const FunctionBinding& b) {
  json a = json::array();
  for (const auto& [name, def] : b) a.push_back(print_define_fun(name, def));
  return a;
}

class Report {
 public:
  explicit Report(const std::string& path) {
    if (!path.empty()) {
      out_.open(path);
      if (!out_) throw std::runtime_error("cannot write report to " + path);
    }
  }
  void write(const json& j) {
    if (out_.is_open()) out_ << j.dump() << '\n';
  }

 private:
  std::ofstream out_;
};

struct Run {
  std::vector<std::string> smt_solver{"z3", "-in"};
  std::vector<std::string> synth_solver;
  double oracle_timeout = 10;
  std::optional<std::size_t> max_iterations;
  std::optional<std::uint64_t> seed;
  bool verbose = false;
};

int run_smto(const Script& s, const Run& cfg, SmtBackend& backend, OracleRuntime& oracles, Report& report) {
  SmtoProblem p = smto_problem(s);
  SmtoOptions opts;
  opts.max_iterations = cfg.max_iterations;
  SmtoVerdict v = smto_solve(p, {}, backend, oracles, opts);
  std::size_t n = 0;
  for (const auto& it : v.report.iterations) {
    ++n;
    report.write({{"event", "iteration"},
                  {"iteration", n},
                  {"backend", std::string(to_string(it.backend))},
                  {"calls", calls(it.calls)},
                  {"assumptions_added", it.assumptions_added},
                  {"assumptions", it.assumptions_total},
                  {"consistent", it.consistent}});
    if (cfg.verbose)
      std::cerr << "iteration " << n << ": backend " << to_string(it.backend) << ", " << it.calls.size()
                << " oracle calls, |A| = " << it.assumptions_total << "\n";
  }
  for (const auto& l : v.report.log)
    if (cfg.verbose) std::cerr << l << "\n";
  std::cout << to_string(v.status) << "\n";
  json result{{"event", "result"}, {"status", std::string(to_string(v.status))}, {"iterations", n}};
  if (v.status == SmtoStatus::Sat) {
    FunctionBinding m = model_binding(*v.model, p.ordinary);
    for (const auto& d : p.ordinary) std::cout << print_define_fun(d.name, m.at(d.name)) << "\n";
    result["model"] = definitions(m);
    report.write(result);
    return kSat;
  }
  if (v.status == SmtoStatus::Unknown) {
    std::cerr << "unknown: " << v.reason << "\n";
    result["reason"] = v.reason;
  }
  report.write(result);
  return v.status == SmtoStatus::Unsat ? kUnsat : kUnknown;
}

int run_symo(const Script& s, const Run& cfg, SmtBackend& backend, OracleRuntime& oracles, Report& report) {
  SymoProblem p = symo_problem(s);
  SymoOptions opts;
  opts.max_iterations = cfg.max_iterations;
  opts.synth.external_command = cfg.synth_solver;
  SymoOutcome o = symo_solve(p, backend, oracles, opts);
  std::size_t n = 0;
  for (const auto& it : o.report.iterations) {
    ++n;
    json cex = json::object();
    for (const auto& [x, v] : it.counterexample) cex[x] = print_value(v);
    report.write({{"event", "iteration"},
                  {"iteration", n},
                  {"candidate", definitions(it.candidate)},
                  {"candidates_checked", it.candidates_checked},
                  {"verification", std::string(to_string(it.verification))},
                  {"counterexample", cex},
                  {"verification_calls", calls(it.verification_calls)},
                  {"constraint_calls", calls(it.constraint_calls)},
                  {"store", it.store.size()},
                  {"assumptions", it.assumptions},
                  {"seconds", it.seconds}});
    if (cfg.verbose) {
      std::cerr << "iteration " << n << ":";
      for (const auto& [name, def] : it.candidate) std::cerr << " " << print_define_fun(name, def);
      std::cerr << " -> " << to_string(it.verification) << ", |S| = " << it.store.size()
                << ", |A| = " << it.assumptions << "\n";
    }
  }
  json result{{"event", "result"}, {"status", std::string(to_string(o.status))}, {"iterations", n}};
  switch (o.status) {
    case SymoStatus::Solution:
      for (const auto& t : p.targets) std::cout << print_define_fun(t.name, o.solution->at(t.name)) << "\n";
      result["solution"] = definitions(*o.solution);
      report.write(result);
      return kSat;
    case SymoStatus::NoSolution:
      std::cout << "no-solution\n";
      report.write(result);
      return kUnsat;
    case SymoStatus::Unknown:
      break;
  }
  std::cout << "unknown\n";
  std::cerr << "unknown: " << o.reason << "\n";
  result["reason"] = o.reason;
  report.write(result);
  return kUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delphi: satisfiability and synthesis modulo oracles"};
  std::string input, smt_solver = "z3 -in", synth_solver, report_path;
  Run cfg;
  std::size_t max_iterations = 0;
  std::uint64_t seed = 0;
  app.add_option("input", input, "Problem file (.smt2 with check-sat, .sy with check-synth)")->required();
  app.add_option("--smt-solver", smt_solver, "SMT solver command reading SMT-LIB on stdin")
      ->capture_default_str();
  app.add_option("--synth-solver", synth_solver, "SyGuS-IF solver command (default: built-in enumerator)");
  app.add_option("--oracle-timeout", cfg.oracle_timeout, "Per-call oracle timeout in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* iters = app.add_option("--max-iterations", max_iterations, "Iteration cap (default: unlimited)")
                    ->check(CLI::PositiveNumber);
  app.add_option("--report", report_path, "Write a JSON-lines run report here");
  auto* seed_opt = app.add_option("--seed", seed, "Passed to oracles as DELPHI_ORACLE_SEED");
  app.add_flag("--verbose", cfg.verbose, "Per-iteration progress on stderr");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  if (*iters) cfg.max_iterations = max_iterations;
  if (*seed_opt) cfg.seed = seed;
  cfg.smt_solver = split_command(smt_solver);
  if (!synth_solver.empty()) cfg.synth_solver = split_command(synth_solver);
  if (cfg.smt_solver.empty()) {
    std::cerr << "error: empty --smt-solver\n";
    return kUsage;
  }

  Script script;
  try {
    if (!std::filesystem::is_regular_file(input)) {
      std::cerr << "error: cannot read '" << input << "'\n";
      return kUsage;
    }
    script = parse_script_file(input);
  } catch (const std::exception& e) {
    std::cerr << input << ": " << e.what() << "\n";
    return kUsage;
  }

  try {
    Report report(report_path);
    BackendConfig bc;
    bc.command = cfg.smt_solver;
    bc.logic = script.logic;
    SmtBackend backend(bc);
    OracleOptions oo;
    oo.timeout = std::chrono::milliseconds(static_cast<long long>(cfg.oracle_timeout * 1000));
    oo.seed = cfg.seed;
    OracleRuntime oracles(oo);
    if (script.directive == Directive::CheckSat) return run_smto(script, cfg, backend, oracles, report);
    return run_symo(script, cfg, backend, oracles, report);
  } catch (const Error& e) {
    const int code = exit_for(e.kind());
    if (code != kUsage) std::cout << "unknown\n";
    std::cerr << "error: " << e.what() << "\n";
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFault;
  }
}
