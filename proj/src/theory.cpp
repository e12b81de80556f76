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

#include "delphi/theory.hpp"

#include <algorithm>
#include <unordered_map>

#include "delphi/error.hpp"

namespace delphi {

namespace theory {

namespace {

enum class Family {
  Not, AndOr, Implies, Xor, Eq, Distinct, Ite,
  ArithNary, Minus, IntBinary, Abs, RealDiv, ArithCompare, ToReal, ToInt, IsInt,
  BvUnary, BvNary, BvBinary, BvCompare, Concat, Extract, Extend, Repeat, Rotate, BvComp, Bv2Nat, Int2Bv,
  StrConcat, StrLen, StrAt, StrSubstr, StrPred, StrIndexOf, StrReplace, StrToInt, StrFromInt, StrCompare,
};

const std::unordered_map<std::string_view, Family>& table() {
  static const std::unordered_map<std::string_view, Family> t = {
      {"not", Family::Not},
      {"and", Family::AndOr},
      {"or", Family::AndOr},
      {"=>", Family::Implies},
      {"xor", Family::Xor},
      {"=", Family::Eq},
      {"distinct", Family::Distinct},
      {"ite", Family::Ite},
      {"+", Family::ArithNary},
      {"*", Family::ArithNary},
      {"-", Family::Minus},
      {"div", Family::IntBinary},
      {"mod", Family::IntBinary},
      {"abs", Family::Abs},
      {"/", Family::RealDiv},
      {"<=", Family::ArithCompare},
      {"<", Family::ArithCompare},
      {">=", Family::ArithCompare},
      {">", Family::ArithCompare},
      {"to_real", Family::ToReal},
      {"to_int", Family::ToInt},
      {"is_int", Family::IsInt},
      {"bvnot", Family::BvUnary},
      {"bvneg", Family::BvUnary},
      {"bvand", Family::BvNary},
      {"bvor", Family::BvNary},
      {"bvxor", Family::BvNary},
      {"bvadd", Family::BvNary},
      {"bvmul", Family::BvNary},
      {"bvsub", Family::BvBinary},
      {"bvnand", Family::BvBinary},
      {"bvnor", Family::BvBinary},
      {"bvxnor", Family::BvBinary},
      {"bvudiv", Family::BvBinary},
      {"bvurem", Family::BvBinary},
      {"bvsdiv", Family::BvBinary},
      {"bvsrem", Family::BvBinary},
      {"bvsmod", Family::BvBinary},
      {"bvshl", Family::BvBinary},
      {"bvlshr", Family::BvBinary},
      {"bvashr", Family::BvBinary},
      {"bvult", Family::BvCompare},
      {"bvule", Family::BvCompare},
      {"bvugt", Family::BvCompare},
      {"bvuge", Family::BvCompare},
      {"bvslt", Family::BvCompare},
      {"bvsle", Family::BvCompare},
      {"bvsgt", Family::BvCompare},
      {"bvsge", Family::BvCompare},
      {"concat", Family::Concat},
      {"extract", Family::Extract},
      {"zero_extend", Family::Extend},
      {"sign_extend", Family::Extend},
      {"repeat", Family::Repeat},
      {"rotate_left", Family::Rotate},
      {"rotate_right", Family::Rotate},
      {"bvcomp", Family::BvComp},
      {"bv2nat", Family::Bv2Nat},
      {"int2bv", Family::Int2Bv},
      {"str.++", Family::StrConcat},
      {"str.len", Family::StrLen},
      {"str.at", Family::StrAt},
      {"str.substr", Family::StrSubstr},
      {"str.prefixof", Family::StrPred},
      {"str.suffixof", Family::StrPred},
      {"str.contains", Family::StrPred},
      {"str.indexof", Family::StrIndexOf},
      {"str.replace", Family::StrReplace},
      {"str.to_int", Family::StrToInt},
      {"str.to.int", Family::StrToInt},
      {"str.from_int", Family::StrFromInt},
      {"int.to.str", Family::StrFromInt},
      {"str.<", Family::StrCompare},
      {"str.<=", Family::StrCompare},
  };
  return t;
}

[[noreturn]] void sort_error(std::string_view op, const std::string& why) {
  throw Error(ErrorKind::SortError, "'" + std::string(op) + "': " + why);
}

void need_arity(std::string_view op, std::span<const Sort> args, std::size_t lo, std::size_t hi) {
  if (args.size() < lo || args.size() > hi)
    sort_error(op, "wrong number of arguments (" + std::to_string(args.size()) + ")");
}

void need_all(std::string_view op, std::span<const Sort> args, const Sort& s) {
  for (const Sort& a : args)
    if (!(a == s)) sort_error(op, "expected " + s.to_string() + ", got " + a.to_string());
}

void need_same(std::string_view op, std::span<const Sort> args) {
  for (const Sort& a : args)
    if (!(a == args[0])) sort_error(op, "arguments must share one sort");
}

const Sort& need_numeric(std::string_view op, std::span<const Sort> args) {
  need_same(op, args);
  if (!args[0].is_int() && !args[0].is_real()) sort_error(op, "expected Int or Real arguments");
  return args[0];
}

std::uint32_t need_bv(std::string_view op, std::span<const Sort> args) {
  need_same(op, args);
  if (!args[0].is_bitvec()) sort_error(op, "expected bit-vector arguments");
  return args[0].width();
}

constexpr std::size_t kMany = static_cast<std::size_t>(-1);

}  // namespace

bool is_symbol(std::string_view op) { return table().count(op) != 0; }

std::size_t index_count(std::string_view op) {
  if (op == "extract") return 2;
  if (op == "zero_extend" || op == "sign_extend" || op == "repeat" || op == "rotate_left" ||
      op == "rotate_right" || op == "int2bv")
    return 1;
  return 0;
}

Sort result_sort(std::string_view op, std::span<const Sort> args,
                 std::span<const std::uint32_t> indices) {
  auto it = table().find(op);
  if (it == table().end()) sort_error(op, "unknown theory symbol");
  if (indices.size() != index_count(op)) sort_error(op, "wrong number of indices");
  const Sort b = Sort::boolean();
  switch (it->second) {
    case Family::Not:
      need_arity(op, args, 1, 1);
      need_all(op, args, b);
      return b;
    case Family::AndOr:
      need_arity(op, args, 1, kMany);
      need_all(op, args, b);
      return b;
    case Family::Implies:
    case Family::Xor:
      need_arity(op, args, 2, kMany);
      need_all(op, args, b);
      return b;
    case Family::Eq:
    case Family::Distinct:
      need_arity(op, args, 2, kMany);
      need_same(op, args);
      return b;
    case Family::Ite:
      need_arity(op, args, 3, 3);
      if (!args[0].is_bool()) sort_error(op, "condition must be Bool");
      if (!(args[1] == args[2])) sort_error(op, "branches must share one sort");
      return args[1];
    case Family::ArithNary:
      need_arity(op, args, 2, kMany);
      return need_numeric(op, args);
    case Family::Minus:
      need_arity(op, args, 1, kMany);
      return need_numeric(op, args);
    case Family::IntBinary:
      need_arity(op, args, 2, 2);
      need_all(op, args, Sort::integer());
      return Sort::integer();
    case Family::Abs:
      need_arity(op, args, 1, 1);
      need_all(op, args, Sort::integer());
      return Sort::integer();
    case Family::RealDiv:
      need_arity(op, args, 2, kMany);
      need_all(op, args, Sort::real());
      return Sort::real();
    case Family::ArithCompare:
      need_arity(op, args, 2, kMany);
      need_numeric(op, args);
      return b;
    case Family::ToReal:
      need_arity(op, args, 1, 1);
      need_all(op, args, Sort::integer());
      return Sort::real();
    case Family::ToInt:
      need_arity(op, args, 1, 1);
      need_all(op, args, Sort::real());
      return Sort::integer();
    case Family::IsInt:
      need_arity(op, args, 1, 1);
      need_all(op, args, Sort::real());
      return b;
    case Family::BvUnary:
      need_arity(op, args, 1, 1);
      return Sort::bitvec(need_bv(op, args));
    case Family::BvNary:
      need_arity(op, args, 2, kMany);
      return Sort::bitvec(need_bv(op, args));
    case Family::BvBinary:
      need_arity(op, args, 2, 2);
      return Sort::bitvec(need_bv(op, args));
    case Family::BvCompare:
      need_arity(op, args, 2, 2);
      need_bv(op, args);
      return b;
    case Family::Concat:
      need_arity(op, args, 2, 2);
      if (!args[0].is_bitvec() || !args[1].is_bitvec()) sort_error(op, "expected bit-vectors");
      return Sort::bitvec(args[0].width() + args[1].width());
    case Family::Extract: {
      need_arity(op, args, 1, 1);
      const std::uint32_t w = need_bv(op, args);
      if (indices[0] >= w || indices[1] > indices[0]) sort_error(op, "bad extract indices");
      return Sort::bitvec(indices[0] - indices[1] + 1);
    }
    case Family::Extend:
      need_arity(op, args, 1, 1);
      return Sort::bitvec(need_bv(op, args) + indices[0]);
    case Family::Repeat:
      need_arity(op, args, 1, 1);
      if (indices[0] == 0) sort_error(op, "repeat count must be positive");
      return Sort::bitvec(need_bv(op, args) * indices[0]);
    case Family::Rotate:
      need_arity(op, args, 1, 1);
      return Sort::bitvec(need_bv(op, args));
    case Family::BvComp:
      need_arity(op, args, 2, 2);
      need_bv(op, args);
      return Sort::bitvec(1);
    case Family::Bv2Nat:
      need_arity(op, args, 1, 1);
      need_bv(op, args);
      return Sort::integer();
    case Family::Int2Bv:
      need_arity(op, args, 1, 1);
      need_all(op, args, Sort::integer());
      if (indices[0] == 0) sort_error(op, "width must be positive");
      return Sort::bitvec(indices[0]);
    case Family::StrConcat:
      need_arity(op, args, 2, kMany);
      need_all(op, args, Sort::string());
      return Sort::string();
    case Family::StrLen:
      need_arity(op, args, 1, 1);
      need_all(op, args, Sort::string());
      return Sort::integer();
    case Family::StrAt:
      need_arity(op, args, 2, 2);
      if (!args[0].is_string() || !args[1].is_int()) sort_error(op, "expected (String Int)");
      return Sort::string();
    case Family::StrSubstr:
      need_arity(op, args, 3, 3);
      if (!args[0].is_string() || !args[1].is_int() || !args[2].is_int())
        sort_error(op, "expected (String Int Int)");
      return Sort::string();
    case Family::StrPred:
    case Family::StrCompare:
      need_arity(op, args, 2, 2);
      need_all(op, args, Sort::string());
      return b;
    case Family::StrIndexOf:
      need_arity(op, args, 3, 3);
      if (!args[0].is_string() || !args[1].is_string() || !args[2].is_int())
        sort_error(op, "expected (String String Int)");
      return Sort::integer();
    case Family::StrReplace:
      need_arity(op, args, 3, 3);
      need_all(op, args, Sort::string());
      return Sort::string();
    case Family::StrToInt:
      need_arity(op, args, 1, 1);
      need_all(op, args, Sort::string());
      return Sort::integer();
    case Family::StrFromInt:
      need_arity(op, args, 1, 1);
      need_all(op, args, Sort::integer());
      return Sort::string();
  }
  sort_error(op, "unhandled");
}

// ------------------------------------------------------------------ folding

namespace {

BigInt pow2(std::uint32_t w) { return BigInt(1) << w; }

BigInt to_signed(const Value::BitVector& bv) {
  if (bv.width > 0 && bit_test(bv.bits, bv.width - 1)) return bv.bits - pow2(bv.width);
  return bv.bits;
}

Value bv(std::uint32_t w, BigInt bits) { return Value::bitvec(w, std::move(bits)); }

// SMT-LIB Euclidean division: x = y*q + r with 0 <= r < |y|.
std::pair<BigInt, BigInt> euclid(const BigInt& x, const BigInt& y) {
  BigInt ay = abs(y);
  BigInt r = x % ay;
  if (r < 0) r += ay;
  BigInt q = (x - r) / y;
  return {q, r};
}

BigInt floor_rational(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

template <typename Cmp>
bool chain(std::span<const Value> args, Cmp cmp) {
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (!cmp(args[i], args[i + 1])) return false;
  return true;
}

bool num_less(const Value& a, const Value& b) {
  return a.sort().is_int() ? a.as_int() < b.as_int() : a.as_real() < b.as_real();
}

BigInt bvudiv(const BigInt& s, const BigInt& t, std::uint32_t w) {
  return t == 0 ? pow2(w) - 1 : s / t;
}
BigInt bvurem(const BigInt& s, const BigInt& t) { return t == 0 ? s : s % t; }

std::optional<Value> fold_bv_binary(std::string_view op, const Value::BitVector& s,
                                    const Value::BitVector& t) {
  const std::uint32_t w = s.width;
  const BigInt mask = pow2(w) - 1;
  const bool s_neg = bit_test(s.bits, w - 1), t_neg = bit_test(t.bits, w - 1);
  const BigInt s_abs = s_neg ? (pow2(w) - s.bits) % pow2(w) : s.bits;
  const BigInt t_abs = t_neg ? (pow2(w) - t.bits) % pow2(w) : t.bits;
  auto neg = [&](const BigInt& x) { return (pow2(w) - x) % pow2(w); };
  if (op == "bvsub") return bv(w, s.bits - t.bits);
  if (op == "bvnand") return bv(w, mask ^ (s.bits & t.bits));
  if (op == "bvnor") return bv(w, mask ^ (s.bits | t.bits));
  if (op == "bvxnor") return bv(w, mask ^ (s.bits ^ t.bits));
  if (op == "bvudiv") return bv(w, bvudiv(s.bits, t.bits, w));
  if (op == "bvurem") return bv(w, bvurem(s.bits, t.bits));
  if (op == "bvsdiv") {
    BigInt q = bvudiv(s_abs, t_abs, w);
    return bv(w, s_neg != t_neg ? neg(q) : q);
  }
  if (op == "bvsrem") {
    BigInt r = bvurem(s_abs, t_abs);
    return bv(w, s_neg ? neg(r) : r);
  }
  if (op == "bvsmod") {
    BigInt u = bvurem(s_abs, t_abs);
    if (u == 0 || (!s_neg && !t_neg)) return bv(w, u);
    if (s_neg && !t_neg) return bv(w, neg(u) + t.bits);
    if (!s_neg && t_neg) return bv(w, u + t.bits);
    return bv(w, neg(u));
  }
  if (op == "bvshl") return bv(w, t.bits >= w ? BigInt(0) : (s.bits << static_cast<unsigned>(t.bits)));
  if (op == "bvlshr") return bv(w, t.bits >= w ? BigInt(0) : (s.bits >> static_cast<unsigned>(t.bits)));
  if (op == "bvashr") {
    if (t.bits >= w) return bv(w, s_neg ? mask : BigInt(0));
    const unsigned k = static_cast<unsigned>(t.bits);
    BigInt r = s.bits >> k;
    if (s_neg) r |= mask ^ (mask >> k);
    return bv(w, r);
  }
  return std::nullopt;
}

std::optional<Value> fold_bv_compare(std::string_view op, const Value::BitVector& s,
                                     const Value::BitVector& t) {
  if (op == "bvult") return Value::boolean(s.bits < t.bits);
  if (op == "bvule") return Value::boolean(s.bits <= t.bits);
  if (op == "bvugt") return Value::boolean(s.bits > t.bits);
  if (op == "bvuge") return Value::boolean(s.bits >= t.bits);
  const BigInt a = to_signed(s), b = to_signed(t);
  if (op == "bvslt") return Value::boolean(a < b);
  if (op == "bvsle") return Value::boolean(a <= b);
  if (op == "bvsgt") return Value::boolean(a > b);
  if (op == "bvsge") return Value::boolean(a >= b);
  return std::nullopt;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::optional<Value> fold_string(std::string_view op, std::span<const Value> args) {
  if (op == "str.++") {
    std::string out;
    for (const auto& a : args) out += a.as_string();
    return Value::string(std::move(out));
  }
  const std::string& s = args[0].as_string();
  const BigInt len = static_cast<long long>(s.size());
  if (op == "str.len") return Value::integer(len);
  if (op == "str.at") {
    const BigInt& i = args[1].as_int();
    if (i < 0 || i >= len) return Value::string("");
    return Value::string(s.substr(static_cast<std::size_t>(i), 1));
  }
  if (op == "str.substr") {
    const BigInt& i = args[1].as_int();
    const BigInt& n = args[2].as_int();
    if (i < 0 || i >= len || n <= 0) return Value::string("");
    const BigInt take = n < len - i ? n : len - i;
    return Value::string(s.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(take)));
  }
  if (op == "str.prefixof") return Value::boolean(args[1].as_string().starts_with(s));
  if (op == "str.suffixof") return Value::boolean(args[1].as_string().ends_with(s));
  if (op == "str.contains") return Value::boolean(s.find(args[1].as_string()) != std::string::npos);
  if (op == "str.indexof") {
    const BigInt& i = args[2].as_int();
    if (i < 0 || i > len) return Value::integer(-1);
    const auto pos = s.find(args[1].as_string(), static_cast<std::size_t>(i));
    return Value::integer(pos == std::string::npos ? BigInt(-1) : BigInt(static_cast<long long>(pos)));
  }
  if (op == "str.replace") {
    const std::string& t = args[1].as_string();
    const std::string& u = args[2].as_string();
    if (t.empty()) return Value::string(u + s);
    const auto pos = s.find(t);
    if (pos == std::string::npos) return args[0];
    return Value::string(s.substr(0, pos) + u + s.substr(pos + t.size()));
  }
  if (op == "str.to_int" || op == "str.to.int")
    return Value::integer(all_digits(s) ? BigInt(s) : BigInt(-1));
  if (op == "str.<") return Value::boolean(s < args[1].as_string());
  if (op == "str.<=") return Value::boolean(s <= args[1].as_string());
  return std::nullopt;
}

}  // namespace

std::optional<Value> fold(std::string_view op, std::span<const std::uint32_t> indices,
                          std::span<const Value> args) {
  auto it = table().find(op);
  if (it == table().end() || args.empty()) return std::nullopt;
  switch (it->second) {
    case Family::Not: return Value::boolean(!args[0].as_bool());
    case Family::AndOr: {
      const bool is_and = op == "and";
      for (const auto& a : args)
        if (a.as_bool() != is_and) return Value::boolean(!is_and);
      return Value::boolean(is_and);
    }
    case Family::Implies: {
      bool r = args.back().as_bool();
      for (std::size_t i = args.size() - 1; i-- > 0;) r = !args[i].as_bool() || r;
      return Value::boolean(r);
    }
    case Family::Xor: {
      bool r = false;
      for (const auto& a : args) r = r != a.as_bool();
      return Value::boolean(r);
    }
    case Family::Eq: return Value::boolean(chain(args, [](const Value& a, const Value& b) { return a == b; }));
    case Family::Distinct:
      for (std::size_t i = 0; i < args.size(); ++i)
        for (std::size_t j = i + 1; j < args.size(); ++j)
          if (args[i] == args[j]) return Value::boolean(false);
      return Value::boolean(true);
    case Family::Ite: return args[0].as_bool() ? args[1] : args[2];
    case Family::ArithNary:
    case Family::Minus: {
      if (args[0].sort().is_int()) {
        BigInt r = args[0].as_int();
        if (op == "-" && args.size() == 1) return Value::integer(-r);
        for (std::size_t i = 1; i < args.size(); ++i) {
          if (op == "+") r += args[i].as_int();
          else if (op == "-") r -= args[i].as_int();
          else r *= args[i].as_int();
        }
        return Value::integer(std::move(r));
      }
      Rational r = args[0].as_real();
      if (op == "-" && args.size() == 1) return Value::real(-r);
      for (std::size_t i = 1; i < args.size(); ++i) {
        if (op == "+") r += args[i].as_real();
        else if (op == "-") r -= args[i].as_real();
        else r *= args[i].as_real();
      }
      return Value::real(std::move(r));
    }
    case Family::IntBinary: {
      if (args[1].as_int() == 0) return std::nullopt;
      auto [q, r] = euclid(args[0].as_int(), args[1].as_int());
      return Value::integer(op == "div" ? q : r);
    }
    case Family::Abs: return Value::integer(abs(args[0].as_int()));
    case Family::RealDiv: {
      Rational r = args[0].as_real();
      for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i].as_real() == 0) return std::nullopt;
        r /= args[i].as_real();
      }
      return Value::real(std::move(r));
    }
    case Family::ArithCompare: {
      if (op == "<") return Value::boolean(chain(args, num_less));
      if (op == ">") return Value::boolean(chain(args, [](const Value& a, const Value& b) { return num_less(b, a); }));
      if (op == "<=") return Value::boolean(chain(args, [](const Value& a, const Value& b) { return !num_less(b, a); }));
      return Value::boolean(chain(args, [](const Value& a, const Value& b) { return !num_less(a, b); }));
    }
    case Family::ToReal: return Value::real(Rational(args[0].as_int()));
    case Family::ToInt: return Value::integer(floor_rational(args[0].as_real()));
    case Family::IsInt: return Value::boolean(denominator(args[0].as_real()) == 1);
    case Family::BvUnary: {
      const auto& x = args[0].as_bitvec();
      if (op == "bvnot") return bv(x.width, (pow2(x.width) - 1) ^ x.bits);
      return bv(x.width, -x.bits);
    }
    case Family::BvNary: {
      const std::uint32_t w = args[0].as_bitvec().width;
      BigInt r = args[0].as_bitvec().bits;
      for (std::size_t i = 1; i < args.size(); ++i) {
        const BigInt& y = args[i].as_bitvec().bits;
        if (op == "bvand") r &= y;
        else if (op == "bvor") r |= y;
        else if (op == "bvxor") r ^= y;
        else if (op == "bvadd") r = (r + y) % pow2(w);
        else r = (r * y) % pow2(w);
      }
      return bv(w, std::move(r));
    }
    case Family::BvBinary: return fold_bv_binary(op, args[0].as_bitvec(), args[1].as_bitvec());
    case Family::BvCompare: return fold_bv_compare(op, args[0].as_bitvec(), args[1].as_bitvec());
    case Family::Concat: {
      const auto& a = args[0].as_bitvec();
      const auto& b = args[1].as_bitvec();
      return bv(a.width + b.width, (a.bits << b.width) | b.bits);
    }
    case Family::Extract: {
      const auto& a = args[0].as_bitvec();
      const std::uint32_t w = indices[0] - indices[1] + 1;
      return bv(w, (a.bits >> indices[1]) & (pow2(w) - 1));
    }
    case Family::Extend: {
      const auto& a = args[0].as_bitvec();
      const std::uint32_t w = a.width + indices[0];
      return bv(w, op == "zero_extend" ? a.bits : to_signed(a));
    }
    case Family::Repeat: {
      const auto& a = args[0].as_bitvec();
      BigInt r = 0;
      for (std::uint32_t i = 0; i < indices[0]; ++i) r = (r << a.width) | a.bits;
      return bv(a.width * indices[0], r);
    }
    case Family::Rotate: {
      const auto& a = args[0].as_bitvec();
      const std::uint32_t w = a.width;
      std::uint32_t k = indices[0] % w;
      if (op == "rotate_right") k = (w - k) % w;
      return bv(w, ((a.bits << k) | (a.bits >> (w - k))) & (pow2(w) - 1));
    }
    case Family::BvComp: return bv(1, args[0] == args[1] ? 1 : 0);
    case Family::Bv2Nat: return Value::integer(args[0].as_bitvec().bits);
    case Family::Int2Bv: return bv(indices[0], args[0].as_int());
    case Family::StrFromInt: {
      const BigInt& n = args[0].as_int();
      return Value::string(n < 0 ? std::string() : n.str());
    }
    default: return fold_string(op, args);
  }
}

}  // namespace theory

// ------------------------------------------------------------------ builders

Term make_theory(std::string op, std::vector<Term> args, std::vector<std::uint32_t> indices) {
  std::vector<Sort> sorts;
  sorts.reserve(args.size());
  for (const Term& a : args) sorts.push_back(a.sort());
  Sort result = theory::result_sort(op, sorts, indices);
  return Term::app(std::move(op), SymbolKind::Theory, std::move(args), std::move(result),
                   std::move(indices));
}

Term make_bool(bool b) { return Term::value(Value::boolean(b)); }
Term make_int(BigInt n) { return Term::value(Value::integer(std::move(n))); }
Term make_not(Term t) { return make_theory("not", {std::move(t)}); }

Term make_and(std::vector<Term> conjuncts) {
  if (conjuncts.empty()) return make_bool(true);
  if (conjuncts.size() == 1) return std::move(conjuncts.front());
  return make_theory("and", std::move(conjuncts));
}

Term make_or(std::vector<Term> disjuncts) {
  if (disjuncts.empty()) return make_bool(false);
  if (disjuncts.size() == 1) return std::move(disjuncts.front());
  return make_theory("or", std::move(disjuncts));
}

Term make_eq(Term a, Term b) { return make_theory("=", {std::move(a), std::move(b)}); }
Term make_implies(Term a, Term b) { return make_theory("=>", {std::move(a), std::move(b)}); }
Term make_ite(Term c, Term a, Term b) {
  return make_theory("ite", {std::move(c), std::move(a), std::move(b)});
}

}  // namespace delphi
