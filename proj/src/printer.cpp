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

#include <cctype>

#include "delphi/frontend.hpp"

namespace delphi {

namespace {

bool plain_symbol_char(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  return std::string_view("~!@$%^&*_-+=<>.?/").find(c) != std::string_view::npos;
}

std::string print_rational(const Rational& q) {
  const BigInt n = abs(numerator(q));
  const BigInt d = denominator(q);
  std::string s = d == 1 ? n.str() + ".0" : "(/ " + n.str() + ".0 " + d.str() + ".0)";
  return q < 0 ? "(- " + s + ")" : s;
}

std::string print_sorted(std::span<const SortedVar> vars) {
  std::string out = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ' ';
    out += "(" + quote_symbol(vars[i].name) + " " + vars[i].sort.to_string() + ")";
  }
  return out + ")";
}

void print_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Value: out += print_value(t.as_value()); return;
    case TermKind::Var: out += quote_symbol(t.name()); return;
    case TermKind::App: {
      if (t.args().empty() && t.indices().empty()) {
        out += quote_symbol(t.name());
        return;
      }
      out += '(';
      if (!t.indices().empty()) {
        out += "(_ " + quote_symbol(t.name());
        for (auto i : t.indices()) out += " " + std::to_string(i);
        out += ')';
      } else {
        out += quote_symbol(t.name());
      }
      for (const Term& a : t.args()) {
        out += ' ';
        print_into(a, out);
      }
      out += ')';
      return;
    }
    case TermKind::Let: {
      out += "(let (";
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ' ';
        out += "(" + quote_symbol(t.let_names()[i]) + " ";
        print_into(t.args()[i], out);
        out += ')';
      }
      out += ") ";
      print_into(t.body(), out);
      out += ')';
      return;
    }
    case TermKind::Quant:
      out += t.quantifier() == Quantifier::Forall ? "(forall " : "(exists ";
      out += print_sorted(t.bound_vars()) + " ";
      print_into(t.body(), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string quote_symbol(const std::string& name) {
  bool plain = !name.empty() && !std::isdigit(static_cast<unsigned char>(name[0]));
  for (char c : name) plain = plain && plain_symbol_char(c);
  return plain ? name : "|" + name + "|";
}

std::string print_value(const Value& v) {
  switch (v.sort().kind()) {
    case Sort::Kind::Bool: return v.as_bool() ? "true" : "false";
    case Sort::Kind::Int: {
      const BigInt& n = v.as_int();
      return n < 0 ? "(- " + BigInt(-n).str() + ")" : n.str();
    }
    case Sort::Kind::Real: return print_rational(v.as_real());
    case Sort::Kind::BitVec: {
      const auto& bv = v.as_bitvec();
      std::string bits(bv.width, '0');
      for (std::uint32_t i = 0; i < bv.width; ++i)
        if (bit_test(bv.bits, i)) bits[bv.width - 1 - i] = '1';
      return "#b" + bits;
    }
    case Sort::Kind::String: {
      std::string out = "\"";
      for (char c : v.as_string()) {
        if (c == '"') out += '"';
        out += c;
      }
      return out + "\"";
    }
    case Sort::Kind::Fn: {
      const FunctionDef& f = v.as_function();
      return "(lambda " + print_sorted(f.params) + " " + print_term(f.body) + ")";
    }
  }
  return "?";
}

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

std::string print_define_fun(const std::string& name, const FunctionDef& def) {
  return "(define-fun " + quote_symbol(name) + " " + print_sorted(def.params) + " " +
         def.body.sort().to_string() + " " + print_term(def.body) + ")";
}

std::string print_define_fun(const std::string& name, const Value& v) {
  if (v.sort().is_function()) return print_define_fun(name, v.as_function());
  return "(define-fun " + quote_symbol(name) + " () " + v.sort().to_string() + " " + print_value(v) + ")";
}

}  // namespace delphi
