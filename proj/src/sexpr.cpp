// Copyright 2026 The hechler Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hechler/sexpr.hpp"

#include <cctype>
#include <limits>

namespace hechler {

std::string_view SExpr::head() const {
  if (!isList() || items.empty() || !items[0].isSymbol()) return {};
  return items[0].text;
}

void SExpr::fail(const std::string& message) const {
  throw ParseError(message, line, column);
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    skipSpace();
    while (pos_ < text_.size()) {
      out.push_back(expr());
      skipSpace();
    }
    return out;
  }

 private:
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skipSpace() {
    while (pos_ < text_.size()) {
      const char c = peek();
      if (c == ';') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  static bool delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' ||
           c == ')' || c == '"' || c == ';';
  }

  SExpr expr() {
    SExpr e;
    e.line = line_;
    e.column = column_;
    const char c = peek();
    if (c == ')') throw ParseError("unexpected ')'", line_, column_);
    if (c == '(') {
      advance();
      e.kind = SExpr::Kind::list;
      for (;;) {
        skipSpace();
        if (pos_ >= text_.size()) {
          throw ParseError("unbalanced '(': missing ')'", e.line, e.column);
        }
        if (peek() == ')') {
          advance();
          return e;
        }
        e.items.push_back(expr());
      }
    }
    if (c == '"') {
      advance();
      e.kind = SExpr::Kind::string;
      while (pos_ < text_.size() && peek() != '"') {
        if (peek() == '\n') break;
        e.text += peek();
        advance();
      }
      if (pos_ >= text_.size() || peek() != '"') {
        throw ParseError("unterminated string", e.line, e.column);
      }
      advance();
      return e;
    }
    std::string token;
    while (pos_ < text_.size() && !delimiter(peek())) {
      token += peek();
      advance();
    }
    if (std::isdigit(static_cast<unsigned char>(token[0]))) {
      e.kind = SExpr::Kind::number;
      Natural value = 0;
      for (char d : token) {
        if (!std::isdigit(static_cast<unsigned char>(d))) {
          throw ParseError("malformed number '" + token + "'", e.line, e.column);
        }
        const Natural digit = static_cast<Natural>(d - '0');
        if (value > (std::numeric_limits<Natural>::max() - digit) / 10) {
          throw ParseError("number out of range", e.line, e.column);
        }
        value = value * 10 + digit;
      }
      e.number = value;
      e.text = token;
      return e;
    }
    e.kind = SExpr::Kind::symbol;
    e.text = token;
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::vector<SExpr> readSExprs(std::string_view text) {
  return Reader(text).all();
}

SExpr readSExpr(std::string_view text) {
  std::vector<SExpr> all = readSExprs(text);
  if (all.size() != 1) {
    if (all.empty()) throw ParseError("expected an expression", 1, 1);
    all[1].fail("expected a single expression");
  }
  return std::move(all[0]);
}

}  // namespace hechler
