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


#include <random>

#include <gtest/gtest.h>

#include "delphi/error.hpp"
#include "delphi/frontend.hpp"
#include "delphi/oracle.hpp"
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

OracleInterface free_interface(const std::string& exe, std::vector<Sort> sorts) {
  OracleInterface i;
  i.name = "echo";
  i.executable = exe;
  for (std::size_t k = 0; k < sorts.size(); ++k) {
    i.query.push_back({"q" + std::to_string(k), sorts[k]});
    i.response.push_back({"r" + std::to_string(k), sorts[k]});
  }
  return i;
}

}  // namespace

TEST(OracleRuntime, ProcessOracleAnswersAndIsMemoized) {
  OracleInterface prime = definitional_interface("isPrime", {Sort::integer()}, Sort::boolean(), dt::oracle("isprime"));
  OracleRuntime rt;
  EXPECT_EQ(rt.call(prime, std::vector{Value::integer(7)}), std::vector{Value::boolean(true)});
  EXPECT_EQ(rt.call(prime, std::vector{Value::integer(76)}), std::vector{Value::boolean(false)});
  OracleCallRecord again = rt.query(prime, std::vector{Value::integer(7)});
  EXPECT_TRUE(again.cached);
  EXPECT_EQ(again.outputs, std::vector{Value::boolean(true)});
  EXPECT_EQ(rt.invocations("isPrime"), 2u);
  EXPECT_EQ(rt.records().size(), 3u);
}

TEST(OracleRuntime, NegativeArgumentUsesSmtLibSyntax) {
  OracleInterface prime = definitional_interface("isPrime", {Sort::integer()}, Sort::boolean(), dt::oracle("isprime"));
  EXPECT_EQ(encode_oracle_arguments(prime, std::vector{Value::integer(-7)}), std::vector<std::string>{"(- 7)"});
  OracleRuntime rt;
  EXPECT_EQ(rt.call(prime, std::vector{Value::integer(-7)}), std::vector{Value::boolean(false)});
}

TEST(OracleRuntime, InProcessMemoCountsOneInvocation) {
  int calls = 0;
  OracleInterface sq = definitional_interface("sq", {Sort::integer()}, Sort::integer(), "");
  sq.function = [&](std::span<const Value> in) {
    ++calls;
    return std::vector{Value::integer(in[0].as_int() * in[0].as_int())};
  };
  OracleRuntime rt;
  for (int k = 0; k < 5; ++k) EXPECT_EQ(rt.call(sq, std::vector{Value::integer(3)})[0], Value::integer(9));
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(rt.invocations(), 1u);
}

TEST(OracleRuntime, FreeInterfacesAreNotMemoized) {
  int calls = 0;
  OracleInterface i = free_interface("", {Sort::integer()});
  i.function = [&](std::span<const Value> in) {
    ++calls;
    return std::vector<Value>(in.begin(), in.end());
  };
  OracleRuntime rt;
  rt.call(i, std::vector{Value::integer(1)});
  rt.call(i, std::vector{Value::integer(1)});
  EXPECT_EQ(calls, 2);
}

TEST(OracleRuntime, ProtocolRoundTripProperty) {
  const std::vector<Sort> sorts{Sort::integer(), Sort::boolean(), Sort::bitvec(5), Sort::real(), Sort::string()};
  OracleInterface echo = free_interface(dt::oracle("echo_oracle"), sorts);
  OracleRuntime rt;
  std::mt19937_64 rng(20260317);
  const std::string alphabet = "ab \"\\()|;x\t";
  for (int n = 0; n < 200; ++n) {
    std::vector<Value> in;
    in.push_back(Value::integer(static_cast<long long>(rng() % 2001) - 1000));
    in.push_back(Value::boolean(rng() & 1));
    in.push_back(Value::bitvec(5, static_cast<long long>(rng() % 32)));
    in.push_back(Value::real(Rational(static_cast<long long>(rng() % 41) - 20, static_cast<long long>(rng() % 7) + 1)));
    std::string s;
    for (std::size_t k = rng() % 6; k > 0; --k) s += alphabet[rng() % alphabet.size()];
    in.push_back(Value::string(s));
    ASSERT_EQ(rt.call(echo, in), in) << "case " << n;
  }
}

TEST(OracleRuntime, FunctionArgumentIsADefineFun) {
  OracleInterface i;
  i.name = "corr";
  i.query.push_back({"f", Sort::function({Sort::integer()}, Sort::integer())});
  i.response.push_back({"b", Sort::boolean()});
  FunctionDef d{{{"x", Sort::integer()}}, make_theory("+", {Term::var("x", Sort::integer()), make_int(1)})};
  EXPECT_EQ(encode_oracle_arguments(i, std::vector{Value::function(d)}),
            std::vector<std::string>{"(define-fun f ((x Int)) Int (+ x 1))"});
}

TEST(OracleRuntime, SeedReachesTheOracle) {
  OracleInterface i = free_interface(dt::oracle("seed_oracle"), {});
  i.response.push_back({"s", Sort::integer()});
  OracleRuntime rt(OracleOptions{std::chrono::milliseconds(10000), 42});
  EXPECT_EQ(rt.call(i, {}), std::vector{Value::integer(42)});
}

TEST(OracleRuntime, Faults) {
  auto one = [](const std::string& exe) {
    return definitional_interface("t", {Sort::integer()}, Sort::integer(), dt::oracle(exe));
  };
  const std::vector<Value> in{Value::integer(1)};
  OracleRuntime fast(OracleOptions{std::chrono::milliseconds(300), {}});
  EXPECT_EQ(kind_of([&] { fast.call(one("sleep_oracle"), in); }), ErrorKind::OracleTimeout);
  OracleRuntime rt;
  EXPECT_EQ(kind_of([&] { rt.call(one("crash_oracle"), in); }), ErrorKind::OracleCrash);
  EXPECT_EQ(kind_of([&] { rt.call(one("fail_oracle"), in); }), ErrorKind::OracleCrash);
  EXPECT_EQ(kind_of([&] { rt.call(one("no_such_oracle"), in); }), ErrorKind::OracleCrash);
  EXPECT_EQ(kind_of([&] { rt.call(one("garbage_oracle"), in); }), ErrorKind::MalformedResponse);
  EXPECT_EQ(kind_of([&] { rt.call(one("silent_oracle"), in); }), ErrorKind::MalformedResponse);
  // isprime answers Bool where Int is declared
  EXPECT_EQ(kind_of([&] { rt.call(one("isprime"), in); }), ErrorKind::MalformedResponse);
  EXPECT_EQ(kind_of([&] { rt.call(one("isprime"), std::vector{Value::boolean(true)}); }), ErrorKind::SortMismatch);
}

TEST(OracleRuntime, TimeoutIsPrompt) {
  OracleRuntime fast(OracleOptions{std::chrono::milliseconds(200), {}});
  auto i = definitional_interface("t", {Sort::integer()}, Sort::integer(), dt::oracle("sleep_oracle"));
  auto t0 = std::chrono::steady_clock::now();
  EXPECT_THROW(fast.call(i, std::vector{Value::integer(1)}), Error);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 5.0);
}

TEST(AssumptionSet, InsertLookupConflict) {
  AssumptionSet a;
  EXPECT_TRUE(a.conjunction().is_true());
  EXPECT_TRUE(a.insert("p", {Value::integer(2)}, Value::boolean(true)));
  EXPECT_FALSE(a.insert("p", {Value::integer(2)}, Value::boolean(true)));
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(a.lookup("p", std::vector{Value::integer(2)}), Value::boolean(true));
  EXPECT_FALSE(a.lookup("p", std::vector{Value::integer(3)}));
  EXPECT_EQ(kind_of([&] { a.insert("p", {Value::integer(2)}, Value::boolean(false)); }),
            ErrorKind::FunctionalViolation);
  EXPECT_EQ(print_term(a.conjunction()), "(= (p 2) true)");
}

TEST(Generators, InstantiateAndValidate) {
  Script s = parse_script(R"((synth-fun f ((x Int)) Int)
                             (oracle-constraint "./io" ((x Int)) ((y Int)) (= (f x) y))
                             (check-synth))");
  const OracleInterface& io = s.interfaces.at(0);
  EXPECT_NO_THROW(validate_interface(io));
  GeneratedFormulas g = instantiate_generators(io, std::vector{Value::integer(7)}, std::vector{Value::integer(8)});
  EXPECT_FALSE(g.assumption);
  EXPECT_EQ(print_term(*g.constraint), "(= (f 7) 8)");

  OracleInterface bad = io;
  bad.constraint_gen = make_eq(Term::var("w", Sort::integer()), make_int(0));
  EXPECT_EQ(kind_of([&] { validate_interface(bad); }), ErrorKind::InvalidProblem);
}
