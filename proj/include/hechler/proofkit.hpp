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

#ifndef HECHLER_PROOFKIT_HPP_
#define HECHLER_PROOFKIT_HPP_

#include <span>
#include <vector>

#include "hechler/filters.hpp"
#include "hechler/trees.hpp"

namespace hechler {

struct FamilyMember {
  PeriodicSet indices;
  RegularTree tree;  // unrooted template, placed below root⌢n for n in indices
};

// Trees H_n rooted at root⌢n, grouped by template, with a finite set of
// indices that receive no tree.
struct RootedFamily {
  Sequence root;
  std::vector<FamilyMember> members;
  PeriodicSet excluded;
};

// The union of the family: a tree with the given root whose first-level
// successor set is the union of the index sets and whose subtree at root⌢n is
// the template assigned to n. Requires every template to be Hechler mod f,
// index sets pairwise disjoint and disjoint from the (finite) excluded set,
// and the union of the index sets to be in f; the result is then Hechler mod
// f.
RegularTree lemma1Union(const RootedFamily& family, Filter& f);

// K_0, ..., K_B, with K_n = K_B for n > B.
struct LevelFamily {
  std::vector<RegularTree> levels;
};

// Successor sets of a and b coincide at every node whose depth below the
// (common) root is less than `levels`. Throws if the roots differ.
bool agreeBelow(const RegularTree& a, const RegularTree& b, std::size_t levels);

// Product tree: u is a node iff it is a node of every input. All inputs must
// share one root.
RegularTree intersectTrees(std::span<const RegularTree> trees);

// The intersection of h with every K_n, where each K_n is Hechler mod f, has
// h's root, and agrees with h on the first n levels below the root. Every
// level of the result is cut by finitely many guards, so it stays Hechler
// mod f. Throws naming the first level-agreement violation.
RegularTree syncIntersection(const RegularTree& h, const LevelFamily& family,
                             Filter& f);

}  // namespace hechler

#endif  // HECHLER_PROOFKIT_HPP_
