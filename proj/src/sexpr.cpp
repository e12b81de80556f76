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

#include "delphi/sexpr.hpp"

#include <cctype>

#include "delphi/error.hpp"

namespace delphi {

namespace {

bool symbol_char(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  switch (c) {
    case '~': case '!': case '@': case '$': case '%': case '^': case '&': case '*':
    case '_': case '-': case '+': case '=': case '<': case '>': case '.': case '?':
    case '/':
      return true;
    default:
      return false;
  }
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  SExpr read() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    SExpr e;
    e.line = line_;
    e.column = col_;
    const char c = text_[pos_];
    if (c == '(') {
      advance();
      e.kind = SExpr::Kind::List;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unbalanced '('", e.line, e.column);
        if (text_[pos_] == ')') {
          advance();
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (c == ')') error("unexpected ')'");
    if (c == '"') {
      advance();
      e.kind = SExpr::Kind::String;
      for (;;) {
        if (pos_ >= text_.size()) throw ParseError("unterminated string literal", e.line, e.column);
        const char d = text_[pos_];
        advance();
        if (d == '"') {
          if (pos_ < text_.size() && text_[pos_] == '"') {
            e.text += '"';
            advance();
            continue;
          }
          return e;
        }
        e.text += d;
      }
    }
    if (c == '|') {
      advance();
      e.kind = SExpr::Kind::Symbol;
      while (pos_ < text_.size() && text_[pos_] != '|') {
        e.text += text_[pos_];
        advance();
      }
      if (pos_ >= text_.size()) throw ParseError("unterminated quoted symbol", e.line, e.column);
      advance();
      return e;
    }
    if (c == '#') {
      advance();
      if (pos_ >= text_.size()) error("dangling '#'");
      const char base = text_[pos_];
      advance();
      if (base == 'b') {
        e.kind = SExpr::Kind::Binary;
        while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1')) take(e);
      } else if (base == 'x') {
        e.kind = SExpr::Kind::Hex;
        while (pos_ < text_.size() && std::isxdigit(static_cast<unsigned char>(text_[pos_]))) take(e);
      } else {
        throw ParseError("unknown literal prefix '#" + std::string(1, base) + "'", e.line, e.column);
      }
      if (e.text.empty()) throw ParseError("empty bit-vector literal", e.line, e.column);
      check_delimited(e);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      e.kind = SExpr::Kind::Numeral;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) take(e);
      if (pos_ < text_.size() && text_[pos_] == '.') {
        e.kind = SExpr::Kind::Decimal;
        take(e);
        std::size_t digits = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          take(e);
          ++digits;
        }
        if (digits == 0) throw ParseError("malformed decimal", e.line, e.column);
      }
      check_delimited(e);
      return e;
    }
    if (c == ':') {
      e.kind = SExpr::Kind::Keyword;
      take(e);
      while (pos_ < text_.size() && symbol_char(text_[pos_])) take(e);
      return e;
    }
    if (!symbol_char(c)) error(std::string("unexpected character '") + c + "'");
    e.kind = SExpr::Kind::Symbol;
    while (pos_ < text_.size() && symbol_char(text_[pos_])) take(e);
    return e;
  }

  [[noreturn]] void error(const std::string& msg) { throw ParseError(msg, line_, col_); }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void take(SExpr& e) {
    e.text += text_[pos_];
    advance();
  }

  void check_delimited(const SExpr& e) {
    if (pos_ < text_.size() && symbol_char(text_[pos_]))
      throw ParseError("malformed literal '" + e.text + text_[pos_] + "...'", e.line, e.column);
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

bool plain_symbol(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!symbol_char(c)) return false;
  return true;
}

}  // namespace

std::string SExpr::to_string() const {
  switch (kind) {
    case Kind::Symbol: return plain_symbol(text) ? text : "|" + text + "|";
    case Kind::Keyword:
    case Kind::Numeral:
    case Kind::Decimal: return text;
    case Kind::Binary: return "#b" + text;
    case Kind::Hex: return "#x" + text;
    case Kind::String: {
      std::string out = "\"";
      for (char c : text) {
        if (c == '"') out += '"';
        out += c;
      }
      return out + "\"";
    }
    case Kind::List: {
      std::string out = "(";
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ' ';
        out += items[i].to_string();
      }
      return out + ")";
    }
  }
  return text;
}

std::vector<SExpr> read_sexprs(std::string_view text) {
  Reader r(text);
  std::vector<SExpr> out;
  while (!r.at_end()) out.push_back(r.read());
  return out;
}

SExpr read_sexpr(std::string_view text) {
  Reader r(text);
  if (r.at_end()) r.error("expected an s-expression");
  SExpr e = r.read();
  if (!r.at_end()) r.error("trailing input after s-expression");
  return e;
}

void fail_at(const SExpr& where, const std::string& message) {
  throw ParseError(message, where.line, where.column);
}

}  // namespace delphi
