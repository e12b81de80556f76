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


#include <gtest/gtest.h>

#include "delphi/error.hpp"
#include "delphi/frontend.hpp"
#include "delphi/smt_backend.hpp"
#include "delphi/theory.hpp"
#include "test_support.hpp"

using namespace delphi;
namespace dt = delphi::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no delphi::Error thrown";
  return ErrorKind::EvalError;
}

const Sort kInt = Sort::integer();

Term x() { return Term::app("x", SymbolKind::Ordinary, {}, kInt); }

BackendConfig fake(const std::string& script) {
  BackendConfig c;
  c.command = {"sh", "-c", "cat >/dev/null; " + script};
  return c;
}

}  // namespace

TEST(SmtBackend, SatModelUnsat) {
  SmtBackend b(dt::z3_config());
  std::vector<SortedVar> decls{{"x", kInt}};
  CheckResult r = b.check_sat(decls, make_and({make_theory(">", {x(), make_int(3)}), make_theory("<", {x(), make_int(5)})}));
  ASSERT_EQ(r.verdict, Verdict::Sat);
  EXPECT_EQ(r.model->find("x")->body, make_int(4));
  CheckResult u = b.check_sat(decls, make_and({make_theory(">", {x(), make_int(3)}), make_theory("<", {x(), make_int(4)})}));
  EXPECT_EQ(u.verdict, Verdict::Unsat);
  EXPECT_FALSE(u.model);
  EXPECT_EQ(b.queries(), 2u);
}

TEST(SmtBackend, UninterpretedFunctionModel) {
  SmtBackend b(dt::z3_config("QF_LIA"));
  const Sort fs = Sort::function({kInt}, kInt);
  std::vector<SortedVar> decls{{"f", fs}};
  auto f = [](int k) { return Term::app("f", SymbolKind::Ordinary, {make_int(k)}, kInt); };
  CheckResult r = b.check_sat(decls, make_and({make_eq(f(1), make_int(5)), make_eq(f(2), make_int(-7))}));
  ASSERT_EQ(r.verdict, Verdict::Sat);
  EXPECT_NE(r.benchmark.find("(set-logic QF_UFLIA)"), std::string::npos);
  EXPECT_EQ(eval_in_model(*r.model, "f", fs, std::vector{Value::integer(1)}), Value::integer(5));
  EXPECT_EQ(eval_in_model(*r.model, "f", fs, std::vector{Value::integer(2)}), Value::integer(-7));
}

TEST(SmtBackend, BenchmarkText) {
  SmtBackend b(dt::z3_config("QF_LIA"));
  std::vector<SortedVar> decls{{"x", kInt}, {"p", Sort::function({kInt}, Sort::boolean())}};
  Term body = Term::app("p", SymbolKind::Oracle, {x()}, Sort::boolean());
  EXPECT_EQ(b.benchmark(decls, body),
            "(set-option :produce-models true)\n"
            "(set-logic QF_UFLIA)\n"
            "(declare-fun x () Int)\n"
            "(declare-fun p (Int) Bool)\n"
            "(assert (p x))\n"
            "(check-sat)\n"
            "(get-model)\n");
}

TEST(SmtBackend, FunctionValuedArgumentsAreTagged) {
  SmtBackend b(dt::z3_config());
  const Sort fs = Sort::function({kInt}, kInt);
  const Sort ts = Sort::function({fs}, Sort::boolean());
  FunctionDef id{{{"x", kInt}}, Term::var("x", kInt)};
  FunctionDef succ{{{"x", kInt}}, make_theory("+", {Term::var("x", kInt), make_int(1)})};
  auto corr = [&](const FunctionDef& d) {
    return Term::app("corr", SymbolKind::Oracle, {Term::value(Value::function(d))}, Sort::boolean());
  };
  std::vector<SortedVar> decls{{"corr", ts}};
  EXPECT_EQ(b.check_sat(decls, make_and({corr(id), make_not(corr(succ))})).verdict, Verdict::Sat);
  EXPECT_EQ(b.check_sat(decls, make_and({corr(id), make_not(corr(id))})).verdict, Verdict::Unsat);
}

TEST(SmtBackend, ParseModelFormats) {
  std::vector<SortedVar> decls{{"f", Sort::function({kInt}, kInt)},
                               {"v", Sort::bitvec(3)},
                               {"q", Sort::real()},
                               {"n", kInt}};
  Model m = parse_model(R"((
  (define-fun v () (_ BitVec 3) #b101)
  (define-fun q () Real (/ 1.0 3.0))
  (define-fun n () Int (- 3))
  (define-fun f ((x!0 Int)) Int (ite (= x!0 1) 5 (f!1 x!0)))
  (define-fun f!1 ((x!0 Int)) Int 7)
))",
                        decls);
  EXPECT_EQ(m.find("v")->body, Term::value(Value::bitvec(3, 5)));
  EXPECT_EQ(m.find("q")->body, Term::value(Value::real(Rational(1, 3))));
  EXPECT_EQ(m.find("n")->body, make_int(-3));
  EXPECT_EQ(eval_in_model(m, "f", decls[0].sort, std::vector{Value::integer(1)}), Value::integer(5));
  EXPECT_EQ(eval_in_model(m, "f", decls[0].sort, std::vector{Value::integer(9)}), Value::integer(7));
  EXPECT_EQ(kind_of([&] { parse_model("((define-fun n () Bool true))", decls); }), ErrorKind::ModelParseError);
}

TEST(SmtBackend, MissingModelEntryDefaults) {
  Model m;
  std::vector<std::string> log;
  EXPECT_EQ(eval_in_model(m, "n", kInt, {}, &log), Value::integer(0));
  ASSERT_EQ(log.size(), 1u);
  EXPECT_NE(log[0].find("IncompleteModel"), std::string::npos);
}

TEST(SmtBackend, Faults) {
  std::vector<SortedVar> decls{{"x", kInt}};
  const Term t = make_bool(true);
  EXPECT_EQ(kind_of([&] { SmtBackend(fake("exit 1")).check_sat(decls, t); }), ErrorKind::BackendCrash);
  EXPECT_EQ(kind_of([&] { SmtBackend(fake("echo bogus")).check_sat(decls, t); }), ErrorKind::BackendCrash);
  BackendConfig slow = fake("sleep 20");
  slow.timeout = std::chrono::milliseconds(300);
  EXPECT_EQ(kind_of([&] { SmtBackend(slow).check_sat(decls, t); }), ErrorKind::BackendTimeout);
  BackendConfig missing;
  missing.command = {"/nonexistent/solver"};
  EXPECT_EQ(kind_of([&] { SmtBackend(missing).check_sat(decls, t); }), ErrorKind::BackendCrash);
  EXPECT_EQ(SmtBackend(fake("echo unknown")).check_sat(decls, t).verdict, Verdict::Unknown);
  // unsat followed by a failing (get-model) is still a verdict
  EXPECT_EQ(SmtBackend(fake("echo unsat; echo '(error \"no model\")'; exit 1")).check_sat(decls, t).verdict,
            Verdict::Unsat);
}

TEST(SmtBackend, PersistsBenchmarks) {
  dt::TempDir d;
  BackendConfig c = dt::z3_config();
  c.persist_dir = d.path() / "q";
  SmtBackend b(c);
  b.check_sat({}, make_bool(true));
  EXPECT_TRUE(std::filesystem::exists(c.persist_dir / "query-0.smt2"));
}
