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

#include <random>

#include "delphi/error.hpp"
#include "delphi/frontend.hpp"
#include "delphi/term_ops.hpp"
#include "delphi/theory.hpp"

namespace delphi {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidProblem;
}

const char* kPrime76 = R"(
(set-logic QF_UFNIA)
(declare-oracle-fun isPrime (Int) Bool "./isprime")
(declare-fun f1 () Int)
(declare-fun f2 () Int)
(declare-fun f3 () Int)
(assert (and (isPrime f1) (isPrime f2) (isPrime f3)))
(assert (= (* f1 f2 f3) 76))
(check-sat)
(get-model)
)";

TEST(ParseScript, PrimeFactorFragment) {
  Script s = parse_script(kPrime76, "/work");
  EXPECT_EQ(s.directive, Directive::CheckSat);
  ASSERT_EQ(s.oracles.size(), 1u);
  EXPECT_EQ(s.oracles[0].name, "isPrime");
  EXPECT_EQ(s.oracles[0].sort, Sort::function({Sort::integer()}, Sort::boolean()));
  EXPECT_EQ(s.assertions.size(), 2u);
  EXPECT_EQ(s.ordinary.size(), 3u);
  ASSERT_EQ(s.interfaces.size(), 1u);
  const OracleInterface& i = s.interfaces[0];
  EXPECT_TRUE(i.definitional());
  EXPECT_EQ(i.executable, "/work/isprime");
  EXPECT_EQ(print_term(*i.assumption_gen), "(= (isPrime y1) z)");
  EXPECT_EQ(print_term(s.assertions[1]), "(= (* f1 f2 f3) 76)");
}

TEST(ParseScript, EmptyInputHasNoDirective) {
  EXPECT_EQ(kind_of([] { parse_script(""); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_script("(declare-const x Int)"); }), ErrorKind::ParseError);
}

TEST(ParseScript, ParseErrorsCarryLocation) {
  try {
    parse_script("(check-sat)\n  (assert (= x 1)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(ParseScript, FreeIoInterface) {
  Script s = parse_script(R"(
(set-logic LIA)
(synth-fun f ((x Int)) Int)
(declare-var x Int)
(oracle-constraint "./io" ((x Int)) ((y Int)) (= (f x) y))
(check-synth)
)");
  ASSERT_EQ(s.interfaces.size(), 1u);
  const OracleInterface& i = s.interfaces[0];
  EXPECT_FALSE(i.definitional());
  EXPECT_FALSE(i.assumption_gen);
  ASSERT_TRUE(i.constraint_gen);
  EXPECT_EQ(print_term(*i.constraint_gen), "(= (f x) y)");
  EXPECT_EQ(i.query.size(), 1u);
  EXPECT_EQ(i.response.size(), 1u);
}

TEST(ParseScript, DuplicateOracleDefinition) {
  EXPECT_EQ(kind_of([] {
              parse_script(R"((declare-oracle-fun p (Int) Bool "a")
                              (declare-oracle-fun p (Int) Bool "b") (check-sat))");
            }),
            ErrorKind::DuplicateOracleDefinition);
  EXPECT_EQ(kind_of([] {
              parse_script(R"((declare-oracle-fun p (Int) Bool "a")
                              (oracle-assumption "b" ((y Int)) ((z Bool)) (= (p y) z)) (check-sat))");
            }),
            ErrorKind::DuplicateOracleDefinition);
}

TEST(ParseScript, RejectsGeneralSmto) {
  EXPECT_EQ(kind_of([] {
              parse_script(R"((declare-fun g (Int) Int)
                              (oracle-constraint "o" ((y Int)) ((z Int)) (= (g y) z)) (check-sat))");
            }),
            ErrorKind::UnsupportedInput);
  EXPECT_EQ(kind_of([] {
              parse_script(R"((declare-fun g (Int) Int)
                              (oracle-assumption "o" ((y Int)) ((z Int)) (> (g y) z)) (check-sat))");
            }),
            ErrorKind::UnsupportedInput);
}

TEST(ParseScript, RejectsMixedDirectives) {
  EXPECT_EQ(kind_of([] { parse_script("(synth-fun f ((x Int)) Int) (check-sat)"); }),
            ErrorKind::UnsupportedInput);
  EXPECT_EQ(kind_of([] { parse_script("(declare-const c Int) (assert (= c 1)) (synth-fun f ((x Int)) Int) (check-synth)"); }),
            ErrorKind::UnsupportedInput);
}

TEST(ParseScript, UnknownLogicAndSorts) {
  EXPECT_EQ(kind_of([] { parse_script("(set-logic QF_FOO) (check-sat)"); }), ErrorKind::UnknownLogic);
  EXPECT_EQ(kind_of([] { parse_script("(declare-const c Int) (assert (and c true)) (check-sat)"); }),
            ErrorKind::SortError);
  EXPECT_EQ(kind_of([] { parse_script("(declare-const c Foo) (check-sat)"); }), ErrorKind::SortError);
}

TEST(ParseScript, GrammarsBothDialects) {
  Script v2 = parse_script(R"(
(synth-fun f ((x Int)) Int ((Start Int) (C Int))
  ((Start Int (x C (+ Start Start) (Constant Int)))
   (C Int (0 1))))
(check-synth))");
  ASSERT_TRUE(v2.targets[0].grammar);
  const Grammar& g = *v2.targets[0].grammar;
  ASSERT_EQ(g.nonterminals.size(), 2u);
  EXPECT_EQ(g.nonterminals[0].productions.size(), 4u);
  EXPECT_TRUE(g.is_nonterminal(g.nonterminals[0].productions[1].term));
  EXPECT_EQ(g.nonterminals[0].productions[3].kind, Production::Kind::AnyConstant);

  Script v1 = parse_script(R"(
(synth-fun f ((x Int)) Int ((Start Int (x 1 (+ Start Start)))))
(check-synth))");
  ASSERT_TRUE(v1.targets[0].grammar);
  EXPECT_EQ(v1.targets[0].grammar->nonterminals[0].productions.size(), 3u);

  EXPECT_EQ(kind_of([] { parse_script("(synth-fun f ((x Int)) Int ((Start Bool (true)))) (check-synth)"); }),
            ErrorKind::SortError);
}

TEST(ParseScript, DefineFunIsInlined) {
  Script s = parse_script(R"(
(define-fun sq ((a Int)) Int (* a a))
(declare-const c Int)
(assert (= (sq c) 49))
(check-sat))");
  EXPECT_EQ(print_term(s.assertions[0]), "(= (* c c) 49)");
}

TEST(ParseValue, Literals) {
  EXPECT_EQ(parse_value("true", Sort::boolean()), Value::boolean(true));
  EXPECT_EQ(parse_value("(- 5)", Sort::integer()), Value::integer(-5));
  EXPECT_EQ(parse_value("#b1010", Sort::bitvec(4)), Value::bitvec(4, 10));
  EXPECT_EQ(parse_value("#xff", Sort::bitvec(8)), Value::bitvec(8, 255));
  EXPECT_EQ(parse_value("(_ bv5 3)", Sort::bitvec(3)), Value::bitvec(3, 5));
  EXPECT_EQ(parse_value("(- (/ 1.0 3.0))", Sort::real()), Value::real(Rational(-1, 3)));
  EXPECT_EQ(parse_value("2", Sort::real()), Value::real(2));
  EXPECT_EQ(parse_value("\"a\"\"b\"", Sort::string()), Value::string("a\"b"));
  Value f = parse_value("(lambda ((x Int)) (+ x 1))", Sort::function({Sort::integer()}, Sort::integer()));
  EXPECT_EQ(print_value(f), "(lambda ((x Int)) (+ x 1))");
}

TEST(ParseValue, Errors) {
  EXPECT_EQ(kind_of([] { parse_value("#b1010", Sort::bitvec(3)); }), ErrorKind::SortMismatch);
  EXPECT_EQ(kind_of([] { parse_value("(+ 1", Sort::integer()); }), ErrorKind::ValueSyntaxError);
  EXPECT_EQ(kind_of([] { parse_value("x", Sort::integer()); }), ErrorKind::ValueSyntaxError);
  EXPECT_EQ(kind_of([] { parse_value("", Sort::integer()); }), ErrorKind::ValueSyntaxError);
}

TEST(PrintTerm, Examples) {
  EXPECT_EQ(print_value(Value::integer(76)), "76");
  EXPECT_EQ(print_value(Value::integer(-3)), "(- 3)");
  EXPECT_EQ(print_value(Value::bitvec(4, 5)), "#b0101");
  EXPECT_EQ(print_value(Value::real(Rational(5, 2))), "(/ 5.0 2.0)");
  EXPECT_EQ(print_value(Value::string("q\"")), "\"q\"\"\"");
  Term ill = Term::app("+", SymbolKind::Theory,
                       {Term::app("isPrime", SymbolKind::Oracle, {make_int(2)}, Sort::boolean()), make_int(1)},
                       Sort::integer());
  EXPECT_EQ(print_term(ill), "(+ (isPrime 2) 1)");
  FunctionDef succ{{{"x", Sort::integer()}}, make_theory("+", {Term::var("x", Sort::integer()), make_int(1)})};
  EXPECT_EQ(print_define_fun("f", succ), "(define-fun f ((x Int)) Int (+ x 1))");
}

// ---------------------------------------------------------------- round trip

class RoundTripGen {
 public:
  explicit RoundTripGen(unsigned seed) : rng_(seed) {}

  Term make(const Sort& s, int depth) {
    const int pick = roll(0, 11);
    if (depth == 0 || pick < 3) return leaf(s);
    if (pick == 3) {
      // let binding of an Int
      std::string n = "l" + std::to_string(roll(0, 2));
      Term bound = make(Sort::integer(), depth - 1);
      scope_.push_back({n, Sort::integer()});
      Term body = make(s, depth - 1);
      scope_.pop_back();
      return Term::let({{n, bound}}, body);
    }
    if (s.is_bool()) {
      if (pick == 4) {
        std::string n = "q" + std::to_string(roll(0, 2));
        scope_.push_back({n, Sort::integer()});
        Term body = make(s, depth - 1);
        scope_.pop_back();
        return Term::quant(roll(0, 1) ? Quantifier::Forall : Quantifier::Exists, {{n, Sort::integer()}}, body);
      }
      switch (pick % 5) {
        case 0: return make_theory("and", {make(s, depth - 1), make(s, depth - 1), make(s, depth - 1)});
        case 1: return make_not(make(s, depth - 1));
        case 2: return make_eq(make(Sort::string(), depth - 1), make(Sort::string(), depth - 1));
        case 3: return Term::app("ob", SymbolKind::Oracle, {make(Sort::integer(), depth - 1)}, s);
        default: return make_theory("bvule", {make(Sort::bitvec(4), depth - 1), make(Sort::bitvec(4), depth - 1)});
      }
    }
    if (s.is_int()) {
      switch (pick % 5) {
        case 0: return make_theory("+", {make(s, depth - 1), make(s, depth - 1)});
        case 1: return make_theory("div", {make(s, depth - 1), make(s, depth - 1)});
        case 2: return Term::app("g", SymbolKind::Ordinary, {make(s, depth - 1), make(Sort::boolean(), depth - 1)}, s);
        case 3: return make_theory("str.len", {make(Sort::string(), depth - 1)});
        default: return make_ite(make(Sort::boolean(), depth - 1), make(s, depth - 1), make(s, depth - 1));
      }
    }
    if (s.is_string()) return make_theory("str.++", {make(s, depth - 1), make(s, depth - 1)});
    if (s.width() == 4 && pick % 3 == 1)
      return make_theory("extract", {make(Sort::bitvec(8), depth - 1)}, {5, 2});
    if (s.width() == 4 && pick % 3 == 2)
      return make_theory("concat", {make(Sort::bitvec(2), depth - 1), make(Sort::bitvec(2), depth - 1)});
    return make_theory("bvadd", {make(s, depth - 1), make(s, depth - 1)});
  }

 private:
  int roll(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Term leaf(const Sort& s) {
    const int pick = roll(0, 4);
    if (pick == 0) {
      for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
        if (it->sort == s) return Term::var(it->name, s);
    }
    if (pick == 1) {
      if (s.is_int()) return Term::var("x", s);
      if (s.is_bool()) return Term::app("c", SymbolKind::Ordinary, {}, s);
    }
    if (s.is_bool()) return make_bool(roll(0, 1));
    if (s.is_int()) return make_int(roll(-20, 20));
    if (s.is_string()) {
      const char* pool[] = {"", "a", "q\"t", "hello world", "(;)"};
      return Term::value(Value::string(pool[roll(0, 4)]));
    }
    return Term::value(Value::bitvec(s.width(), roll(0, 255)));
  }

  std::mt19937 rng_;
  std::vector<SortedVar> scope_;
};

TEST(PrintTerm, RoundTrip) {
  SymbolContext ctx;
  ctx.variables["x"] = Sort::integer();
  ctx.ordinary["c"] = Sort::boolean();
  ctx.ordinary["g"] = Sort::function({Sort::integer(), Sort::boolean()}, Sort::integer());
  ctx.oracles["ob"] = Sort::function({Sort::integer()}, Sort::boolean());
  RoundTripGen gen(2024);
  const Sort sorts[] = {Sort::boolean(), Sort::integer(), Sort::bitvec(4), Sort::string()};
  for (int i = 0; i < 1000; ++i) {
    Term t = gen.make(sorts[i % 4], 4);
    const std::string text = print_term(t);
    Term back = parse_term(text, ctx);
    ASSERT_EQ(back, t) << text << "\n  reparsed as " << print_term(back);
  }
}

}  // namespace
}  // namespace delphi
