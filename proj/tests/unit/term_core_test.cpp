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

const Sort kInt = Sort::integer();
const Sort kBool = Sort::boolean();

Term I(long long n) { return make_int(n); }
Term X() { return Term::var("x", kInt); }
Term theta(Term a) { return Term::app("theta", SymbolKind::Oracle, {std::move(a)}, kInt); }
Term plus(Term a, Term b) { return make_theory("+", {std::move(a), std::move(b)}); }

TEST(Substitute, ReplacesVariable) {
  Term r = substitute(plus(X(), I(1)), {{"x", I(41)}});
  EXPECT_EQ(r, plus(I(41), I(1)));
}

TEST(Substitute, EmptyBindingIsIdentity) { EXPECT_EQ(substitute(X(), {}), X()); }

TEST(Substitute, AvoidsCapture) {
  const Term y = Term::var("y", kInt);
  Term body = Term::app("f", SymbolKind::Ordinary, {X(), y}, kBool);
  Term q = Term::quant(Quantifier::Forall, {{"y", kInt}}, body);
  Term r = substitute(q, {{"x", y}});
  ASSERT_EQ(r.kind(), TermKind::Quant);
  const std::string bound = r.bound_vars()[0].name;
  EXPECT_NE(bound, "y");
  EXPECT_EQ(r.body(), Term::app("f", SymbolKind::Ordinary, {y, Term::var(bound, kInt)}, kBool));
  // the original term is untouched
  EXPECT_EQ(q.bound_vars()[0].name, "y");
}

TEST(Substitute, ShadowedNamesAreNotReplaced) {
  Term q = Term::quant(Quantifier::Exists, {{"x", kInt}}, make_theory(">", {X(), I(0)}));
  EXPECT_EQ(substitute(q, {{"x", I(5)}}), q);
}

TEST(Substitute, SortMismatchIsRejected) {
  try {
    substitute(X(), {{"x", make_bool(true)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SortMismatch);
  }
}

TEST(PartialEvaluate, FoldsAroundOracleApplication) {
  Term e = plus(theta(plus(I(1), I(1))), I(1));
  EXPECT_EQ(partial_evaluate(e), plus(theta(I(2)), I(1)));
}

TEST(PartialEvaluate, BooleanIdentity) {
  Term b = Term::var("b", kBool);
  EXPECT_EQ(partial_evaluate(make_and({make_theory("<=", {I(3), I(5)}), b})), b);
}

TEST(PartialEvaluate, IteOnValueCondition) {
  Term a = Term::var("a", kInt), b = Term::var("b", kInt);
  EXPECT_EQ(partial_evaluate(make_ite(make_bool(true), a, b)), a);
  EXPECT_EQ(partial_evaluate(make_ite(make_bool(false), a, b)), b);
}

TEST(PartialEvaluate, IteEvaluatesOnlyTakenBranch) {
  // the untaken branch holds an oracle application that must disappear
  Term e = make_ite(make_theory("<", {I(1), I(2)}), I(7), theta(I(3)));
  EXPECT_EQ(partial_evaluate(e), I(7));
}

TEST(PartialEvaluate, LeavesDivisionByZeroUnfolded) {
  Term e = make_theory("div", {I(4), I(0)});
  EXPECT_EQ(partial_evaluate(e), e);
  EXPECT_EQ(partial_evaluate(make_theory("mod", {I(4), plus(I(0), I(0))})), make_theory("mod", {I(4), I(0)}));
}

TEST(PartialEvaluate, KeepsEqualityWithTrue) {
  Term app = Term::app("isPrime", SymbolKind::Oracle, {I(7)}, kBool);
  Term e = make_eq(app, make_bool(true));
  EXPECT_EQ(partial_evaluate(e), e);
}

TEST(PartialEvaluate, ImplicationRules) {
  Term p = Term::var("p", kBool), q = Term::var("q", kBool);
  EXPECT_EQ(partial_evaluate(make_implies(make_bool(true), q)), q);
  EXPECT_EQ(partial_evaluate(make_implies(make_bool(false), q)), make_bool(true));
  EXPECT_EQ(partial_evaluate(make_implies(p, make_bool(true))), make_bool(true));
  EXPECT_EQ(partial_evaluate(make_implies(p, make_bool(false))), make_not(p));
  EXPECT_EQ(partial_evaluate(make_not(make_not(p))), p);
}

TEST(PartialEvaluate, ExpandsLet) {
  Term e = Term::let({{"x", plus(I(1), I(2))}}, plus(X(), theta(X())));
  EXPECT_EQ(partial_evaluate(e), plus(I(3), theta(I(3))));
}

TEST(TheoryFold, EuclideanDivision) {
  auto fold2 = [](const char* op, long long a, long long b) {
    return partial_evaluate(make_theory(op, {I(a), I(b)})).as_value().as_int();
  };
  EXPECT_EQ(fold2("div", -7, 2), -4);
  EXPECT_EQ(fold2("mod", -7, 2), 1);
  EXPECT_EQ(fold2("div", 7, -2), -3);
  EXPECT_EQ(fold2("mod", 7, -2), 1);
  EXPECT_EQ(fold2("div", -7, -2), 4);
  EXPECT_EQ(fold2("mod", -7, -2), 1);
}

Term bv(unsigned w, unsigned v) { return Term::value(Value::bitvec(w, v)); }

unsigned bv_fold(const char* op, unsigned w, unsigned a, unsigned b) {
  return static_cast<unsigned>(
      partial_evaluate(make_theory(op, {bv(w, a), bv(w, b)})).as_value().as_bitvec().bits);
}

TEST(TheoryFold, BitVectorTotalSemantics) {
  EXPECT_EQ(bv_fold("bvudiv", 4, 9, 0), 15u);
  EXPECT_EQ(bv_fold("bvurem", 4, 9, 0), 9u);
  // -7 smod 2 = 1, 7 smod -2 = -1, -7 srem 2 = -1, -7 sdiv 2 = -3 (width 4)
  EXPECT_EQ(bv_fold("bvsmod", 4, 9, 2), 1u);
  EXPECT_EQ(bv_fold("bvsmod", 4, 7, 14), 15u);
  EXPECT_EQ(bv_fold("bvsrem", 4, 9, 2), 15u);
  EXPECT_EQ(bv_fold("bvsdiv", 4, 9, 2), 13u);
  EXPECT_EQ(bv_fold("bvashr", 4, 8, 1), 12u);
  EXPECT_EQ(bv_fold("bvlshr", 4, 8, 1), 4u);
  EXPECT_EQ(bv_fold("bvshl", 4, 9, 1), 2u);
  EXPECT_EQ(bv_fold("bvsub", 4, 1, 2), 15u);
  Term ex = partial_evaluate(make_theory("extract", {bv(8, 0b10110100)}, {5, 2}));
  EXPECT_EQ(ex.as_value(), Value::bitvec(4, 0b1101));
  Term cc = partial_evaluate(make_theory("concat", {bv(2, 0b10), bv(3, 0b011)}));
  EXPECT_EQ(cc.as_value(), Value::bitvec(5, 0b10011));
  Term se = partial_evaluate(make_theory("sign_extend", {bv(3, 0b101)}, {2}));
  EXPECT_EQ(se.as_value(), Value::bitvec(5, 0b11101));
  Term rl = partial_evaluate(make_theory("rotate_left", {bv(4, 0b1001)}, {1}));
  EXPECT_EQ(rl.as_value(), Value::bitvec(4, 0b0011));
}

TEST(TheoryFold, Strings) {
  auto s = [](const char* v) { return Term::value(Value::string(std::string(v))); };
  EXPECT_EQ(partial_evaluate(make_theory("str.++", {s("ab"), s("cd")})).as_value().as_string(), "abcd");
  EXPECT_EQ(partial_evaluate(make_theory("str.substr", {s("hello"), I(1), I(3)})).as_value().as_string(), "ell");
  EXPECT_EQ(partial_evaluate(make_theory("str.indexof", {s("hello"), s("l"), I(0)})).as_value().as_int(), 2);
  EXPECT_EQ(partial_evaluate(make_theory("str.replace", {s("aXbX"), s("X"), s("-")})).as_value().as_string(), "a-bX");
  EXPECT_EQ(partial_evaluate(make_theory("str.to_int", {s("12a")})).as_value().as_int(), -1);
}

TEST(TheoryFold, RejectsMixedArithmetic) {
  Term r = Term::value(Value::real(Rational(1, 2)));
  EXPECT_THROW(make_theory("+", {I(1), r}), Error);
}

TEST(FindOracleApplication, InnermostAndLeftmost) {
  auto found = find_oracle_application(plus(theta(I(2)), I(1)));
  ASSERT_TRUE(found);
  EXPECT_EQ(found->symbol, "theta");
  ASSERT_EQ(found->inputs.size(), 1u);
  EXPECT_EQ(found->inputs[0], Value::integer(2));
  EXPECT_EQ(found->position, (Position{0}));

  EXPECT_FALSE(find_oracle_application(I(7)));

  Term inner = Term::app("t2", SymbolKind::Oracle, {I(3)}, kInt);
  Term outer = Term::app("t1", SymbolKind::Oracle, {inner}, kInt);
  auto nested = find_oracle_application(outer);
  ASSERT_TRUE(nested);
  EXPECT_EQ(nested->symbol, "t2");
  EXPECT_EQ(nested->position, (Position{0}));

  auto left = find_oracle_application(plus(theta(I(4)), theta(I(5))));
  ASSERT_TRUE(left);
  EXPECT_EQ(left->inputs[0], Value::integer(4));
}

TEST(FindOracleApplication, SkipsApplicationsOnNonValues) {
  EXPECT_FALSE(find_oracle_application(theta(X())));
}

TEST(ReplaceAt, Examples) {
  Term e = plus(theta(I(2)), I(1));
  EXPECT_EQ(replace_at(e, {0}, Value::integer(0)), plus(I(0), I(1)));
  Term neg = make_not(Term::app("theta", SymbolKind::Oracle, {I(7)}, kBool));
  EXPECT_EQ(partial_evaluate(replace_at(neg, {0}, Value::boolean(true))), make_bool(false));
  EXPECT_EQ(replace_at(X(), {}, Value::integer(5)), I(5));
}

TEST(ReplaceAt, Errors) {
  Term e = plus(theta(I(2)), I(1));
  try {
    replace_at(e, {3}, Value::integer(0));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::BadPosition);
  }
  try {
    replace_at(e, {0}, Value::boolean(true));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::SortMismatch);
  }
}

TEST(InstantiateFunctions, BindsApplicationsAndReferences) {
  FunctionDef succ{{{"a", kInt}}, plus(Term::var("a", kInt), I(1))};
  const Sort fs = Sort::function({kInt}, kInt);
  Term app = Term::app("f", SymbolKind::Ordinary, {I(4)}, kInt);
  EXPECT_EQ(partial_evaluate(instantiate_functions(app, {{"f", succ}})), I(5));
  Term ref = Term::app("corr", SymbolKind::Oracle, {Term::app("f", SymbolKind::Ordinary, {}, fs)}, kBool);
  Term inst = instantiate_functions(ref, {{"f", succ}});
  ASSERT_TRUE(inst.args()[0].is_value());
  EXPECT_EQ(inst.args()[0].as_value().as_function(), succ);
}

// ---------------------------------------------------------------- properties

// Independent reference evaluator for the generated fragment.
struct RefValue {
  bool is_bool;
  long long n;
};

RefValue ref_eval(const Term& t) {
  if (t.is_value()) {
    const Value& v = t.as_value();
    if (v.sort().is_bool()) return {true, v.as_bool() ? 1 : 0};
    if (v.sort().is_int()) return {false, static_cast<long long>(v.as_int())};
    return {false, static_cast<long long>(v.as_bitvec().bits)};
  }
  const std::string& op = t.name();
  std::vector<RefValue> a;
  for (const Term& c : t.args()) a.push_back(ref_eval(c));
  auto B = [](bool b) { return RefValue{true, b ? 1 : 0}; };
  auto N = [](long long n) { return RefValue{false, n}; };
  const bool bvop = t.sort().is_bitvec();
  const long long mask = bvop ? (1LL << t.sort().width()) - 1 : 0;
  if (op == "not") return B(!a[0].n);
  if (op == "and") return B(a[0].n && a[1].n);
  if (op == "or") return B(a[0].n || a[1].n);
  if (op == "=>") return B(!a[0].n || a[1].n);
  if (op == "=") return B(a[0].n == a[1].n);
  if (op == "ite") return a[0].n ? a[1] : a[2];
  if (op == "+") return N(a[0].n + a[1].n);
  if (op == "-") return N(a[0].n - a[1].n);
  if (op == "*") return N(a[0].n * a[1].n);
  if (op == "<=") return B(a[0].n <= a[1].n);
  if (op == "<") return B(a[0].n < a[1].n);
  if (op == "abs") return N(a[0].n < 0 ? -a[0].n : a[0].n);
  if (op == "bvadd") return N((a[0].n + a[1].n) & mask);
  if (op == "bvmul") return N((a[0].n * a[1].n) & mask);
  if (op == "bvand") return N(a[0].n & a[1].n);
  if (op == "bvxor") return N(a[0].n ^ a[1].n);
  if (op == "bvult") return B(a[0].n < a[1].n);
  ADD_FAILURE() << "unexpected op " << op;
  return N(0);
}

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  // with_leaves: allow free variables and oracle applications
  Term make(const Sort& s, int depth, bool open) {
    std::uniform_int_distribution<int> d(0, 9);
    const int pick = d(rng_);
    if (depth == 0 || pick < 2) return leaf(s, open);
    if (s.is_bool()) {
      switch (pick % 6) {
        case 0: return make_not(make(s, depth - 1, open));
        case 1: return make_theory("and", {make(s, depth - 1, open), make(s, depth - 1, open)});
        case 2: return make_theory("or", {make(s, depth - 1, open), make(s, depth - 1, open)});
        case 3: return make_theory("<=", {make(kInt, depth - 1, open), make(kInt, depth - 1, open)});
        case 4: return make_theory("bvult", {make(Sort::bitvec(3), depth - 1, open), make(Sort::bitvec(3), depth - 1, open)});
        default: return make_theory("=>", {make(s, depth - 1, open), make(s, depth - 1, open)});
      }
    }
    if (s.is_int()) {
      switch (pick % 5) {
        case 0: return make_theory("+", {make(s, depth - 1, open), make(s, depth - 1, open)});
        case 1: return make_theory("-", {make(s, depth - 1, open), make(s, depth - 1, open)});
        case 2: return make_theory("*", {make(s, depth - 1, open), make(s, depth - 1, open)});
        case 3: return make_theory("abs", {make(s, depth - 1, open)});
        default: return make_ite(make(kBool, depth - 1, open), make(s, depth - 1, open), make(s, depth - 1, open));
      }
    }
    switch (pick % 4) {
      case 0: return make_theory("bvadd", {make(s, depth - 1, open), make(s, depth - 1, open)});
      case 1: return make_theory("bvmul", {make(s, depth - 1, open), make(s, depth - 1, open)});
      case 2: return make_theory("bvand", {make(s, depth - 1, open), make(s, depth - 1, open)});
      default: return make_theory("bvxor", {make(s, depth - 1, open), make(s, depth - 1, open)});
    }
  }

 private:
  Term leaf(const Sort& s, bool open) {
    std::uniform_int_distribution<int> d(0, 5);
    const int pick = d(rng_);
    if (open && pick == 0) return Term::var(s.is_bool() ? "p" : s.is_int() ? "x" : "v", s);
    if (open && pick == 1) return Term::app("o", SymbolKind::Oracle, {leaf(kInt, false)}, s);
    std::uniform_int_distribution<int> n(-5, 5);
    if (s.is_bool()) return make_bool(n(rng_) > 0);
    if (s.is_int()) return make_int(n(rng_));
    return Term::value(Value::bitvec(s.width(), n(rng_) & 7));
  }

  std::mt19937 rng_;
};

TEST(TermProperties, GroundTotalityAgainstReferenceEvaluator) {
  Gen g(1234);
  const Sort sorts[] = {kInt, kBool, Sort::bitvec(3)};
  for (int i = 0; i < 1000; ++i) {
    const Sort& s = sorts[i % 3];
    Term t = g.make(s, 4, false);
    Term r = partial_evaluate(t);
    ASSERT_TRUE(r.is_value()) << print_term(t);
    const RefValue want = ref_eval(t);
    const RefValue got = ref_eval(r);
    EXPECT_EQ(want.n, got.n) << print_term(t);
  }
}

TEST(TermProperties, IdempotenceAndSortPreservation) {
  Gen g(99);
  const Sort sorts[] = {kInt, kBool, Sort::bitvec(3)};
  for (int i = 0; i < 1000; ++i) {
    const Sort& s = sorts[i % 3];
    Term t = g.make(s, 5, true);
    Term once = partial_evaluate(t);
    EXPECT_EQ(once.sort(), t.sort());
    EXPECT_EQ(partial_evaluate(once), once) << print_term(t);
  }
}

TEST(TermProperties, SubstitutionComposition) {
  Gen g(7);
  for (int i = 0; i < 500; ++i) {
    Term e = g.make(kBool, 4, true);
    Term a = g.make(kInt, 2, false);
    Term b = g.make(kBool, 2, false);
    Term seq = substitute(substitute(e, {{"x", a}}), {{"p", b}});
    Term par = substitute(e, {{"x", a}, {"p", b}});
    EXPECT_EQ(seq, par);
  }
}

}  // namespace
}  // namespace delphi
