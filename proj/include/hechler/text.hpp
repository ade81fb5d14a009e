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

#ifndef HECHLER_TEXT_HPP_
#define HECHLER_TEXT_HPP_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hechler/dichotomy.hpp"
#include "hechler/proofkit.hpp"
#include "hechler/sexpr.hpp"

namespace hechler {

// Readers for the textual forms. Every reader reports malformed input as a
// ParseError located at the offending expression; structural errors raised by
// the constructed objects are relocated to the enclosing form.
//
//   set        none | all | (fin n...) | (cofin n...) | (per "bits" "bits")
//   tree       (tree (root n...) (state NAME (rule SET NAME)...)...)
//   automaton  (aut (state NAME (rule (x SET) (y SET) NAME)...)...)
//   lasso      (lasso (n...) (n...))
//   family     (family (root n...) (excluded SET) (member SET TREE)...)
//   levels     (levels TREE...)
//   certificate, see to_string(const DichotomyCertificate&)
//
// The first state of a tree or automaton is its initial state; (root) may be
// omitted from a tree.
PeriodicSet parseSet(const SExpr& e);
RegularTree parseTree(const SExpr& e);
PairAutomaton parseAutomaton(const SExpr& e);
Lasso parseLasso(const SExpr& e);
RootedFamily parseFamily(const SExpr& e);
LevelFamily parseLevels(const SExpr& e);
DichotomyCertificate parseCertificate(const SExpr& e);

PeriodicSet parseSetLiteral(std::string_view text);

std::string to_string(const Lasso& l);
std::string to_string(const RootedFamily& family);
std::string to_string(const LevelFamily& family);
std::string to_string(const DichotomyCertificate& cert);
// frechet, density, or (ultra SEED (decide SET yes|no)...) with one decision
// per line, indented by `indent` + 2 spaces.
std::string to_string(const FilterRecord& record, std::size_t indent = 0);

// frechet | density | ultra | ultra:SET (the seed of the lazy ultrafilter).
Filter parseFilterSpec(std::string_view spec);

using Form = std::variant<PeriodicSet, RegularTree, PairAutomaton, Lasso,
                          RootedFamily, LevelFamily, DichotomyCertificate>;

struct LocatedForm {
  Form form;
  int line = 1;
  int column = 1;
};

struct InstanceDocument {
  std::vector<LocatedForm> forms;
};

InstanceDocument parseDocument(std::string_view text);
// One form per line group, each followed by a newline.
std::string printDocument(const InstanceDocument& doc);

// The only form of a document, which must have type T.
template <class T>
const T& soleForm(const InstanceDocument& doc, std::string_view what) {
  if (doc.forms.size() != 1) {
    const int line = doc.forms.size() > 1 ? doc.forms[1].line : 1;
    const int column = doc.forms.size() > 1 ? doc.forms[1].column : 1;
    throw ParseError("expected exactly one " + std::string(what), line, column);
  }
  const T* value = std::get_if<T>(&doc.forms[0].form);
  if (!value) {
    throw ParseError("expected " + std::string(what), doc.forms[0].line,
                     doc.forms[0].column);
  }
  return *value;
}

std::string readFile(const std::string& path);

}  // namespace hechler

#endif  // HECHLER_TEXT_HPP_
