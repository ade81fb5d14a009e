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

#ifndef HECHLER_SEXPR_HPP_
#define HECHLER_SEXPR_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "hechler/common.hpp"

namespace hechler {

// A node of the s-expression reader. Atoms are naturals, quoted strings and
// bare symbols; `;` starts a comment running to the end of the line.
struct SExpr {
  enum class Kind { list, symbol, number, string };

  Kind kind = Kind::list;
  std::string text;  // symbol name or string contents
  Natural number = 0;
  std::vector<SExpr> items;
  int line = 1;
  int column = 1;

  bool isList() const { return kind == Kind::list; }
  bool isNumber() const { return kind == Kind::number; }
  bool isString() const { return kind == Kind::string; }
  bool isSymbol() const { return kind == Kind::symbol; }
  bool isSymbol(std::string_view name) const {
    return kind == Kind::symbol && text == name;
  }
  // The leading symbol of a list, or "" when there is none.
  std::string_view head() const;

  [[noreturn]] void fail(const std::string& message) const;
};

std::vector<SExpr> readSExprs(std::string_view text);
// Exactly one expression; anything else is a parse error.
SExpr readSExpr(std::string_view text);

}  // namespace hechler

#endif  // HECHLER_SEXPR_HPP_
