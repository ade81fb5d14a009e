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

#include "hechler/proofkit.hpp"

#include <deque>
#include <map>
#include <set>
#include <utility>

namespace hechler {

RegularTree lemma1Union(const RootedFamily& family, Filter& f) {
  if (family.excluded.infinite()) {
    throw Error("lemma1Union: excluded index set must be finite");
  }
  PeriodicSet covered;
  for (const auto& m : family.members) {
    if (!m.tree.root().empty()) {
      throw Error("lemma1Union: templates must be unrooted");
    }
    if (!intersect(covered, m.indices).empty()) {
      throw Error("lemma1Union: index sets overlap");
    }
    if (!intersect(family.excluded, m.indices).empty()) {
      throw Error("lemma1Union: index set meets the excluded set");
    }
    covered = unite(covered, m.indices);
  }
  if (!f.inFilter(covered)) {
    throw Error("lemma1Union: union of index sets " + to_string(covered) +
                " is not in the filter");
  }
  for (const auto& m : family.members) {
    if (!isHechlerModF(m.tree, f)) {
      throw Error("lemma1Union: a template is not Hechler mod the filter");
    }
  }

  std::vector<TreeState> states{TreeState{"root", {}}};
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const RegularTree& t = family.members[i].tree;
    const std::size_t offset = states.size();
    states[0].rules.push_back({family.members[i].indices, offset});
    const std::string prefix = "m" + std::to_string(i) + ".";
    for (const auto& s : t.states()) {
      TreeState copy{prefix + s.name, {}};
      for (const auto& r : s.rules) copy.rules.push_back({r.guard, r.next + offset});
      states.push_back(std::move(copy));
    }
  }
  return RegularTree::pruned(std::move(states), family.root);
}

bool agreeBelow(const RegularTree& a, const RegularTree& b, std::size_t levels) {
  if (a.root() != b.root()) throw Error("agreeBelow: roots differ");
  std::set<std::pair<std::size_t, std::size_t>> frontier{{0, 0}};
  for (std::size_t depth = 0; depth < levels && !frontier.empty(); ++depth) {
    std::set<std::pair<std::size_t, std::size_t>> next;
    for (auto [qa, qb] : frontier) {
      if (a.successors(qa) != b.successors(qb)) return false;
      for (const auto& ra : a.state(qa).rules) {
        for (const auto& rb : b.state(qb).rules) {
          if (!intersect(ra.guard, rb.guard).empty()) {
            next.emplace(ra.next, rb.next);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return true;
}

RegularTree intersectTrees(std::span<const RegularTree> trees) {
  if (trees.empty()) throw Error("intersectTrees: no trees");
  for (const auto& t : trees) {
    if (t.root() != trees[0].root()) throw Error("intersectTrees: roots differ");
  }

  using Tuple = std::vector<std::size_t>;
  std::map<Tuple, std::size_t> index;
  std::vector<Tuple> tuples;
  std::vector<TreeState> states;
  auto intern = [&](const Tuple& t) {
    auto [it, fresh] = index.emplace(t, tuples.size());
    if (fresh) {
      tuples.push_back(t);
      states.push_back(TreeState{"p" + std::to_string(it->second), {}});
    }
    return it->second;
  };
  intern(Tuple(trees.size(), 0));

  for (std::size_t i = 0; i < tuples.size(); ++i) {
    // Refine component guards into pieces with a constant successor tuple.
    std::vector<std::pair<PeriodicSet, Tuple>> pieces{{PeriodicSet::all(), {}}};
    for (std::size_t j = 0; j < trees.size(); ++j) {
      std::vector<std::pair<PeriodicSet, Tuple>> refined;
      for (const auto& [set, partial] : pieces) {
        for (const auto& r : trees[j].state(tuples[i][j]).rules) {
          PeriodicSet meet = intersect(set, r.guard);
          if (meet.empty()) continue;
          Tuple extended = partial;
          extended.push_back(r.next);
          refined.emplace_back(std::move(meet), std::move(extended));
        }
      }
      pieces = std::move(refined);
    }
    for (auto& [set, tuple] : pieces) {
      const std::size_t target = intern(tuple);
      states[i].rules.push_back({std::move(set), target});
    }
  }
  return RegularTree(std::move(states), trees[0].root());
}

RegularTree syncIntersection(const RegularTree& h, const LevelFamily& family,
                             Filter& f) {
  if (family.levels.empty()) throw Error("syncIntersection: empty family");
  if (!isHechlerModF(h, f)) {
    throw Error("syncIntersection: base tree is not Hechler mod the filter");
  }
  std::vector<RegularTree> all{h};
  for (std::size_t n = 0; n < family.levels.size(); ++n) {
    const RegularTree& k = family.levels[n];
    if (k.root() != h.root()) {
      throw Error("syncIntersection: K_" + std::to_string(n) +
                  " has a different root");
    }
    if (!isHechlerModF(k, f)) {
      throw Error("syncIntersection: K_" + std::to_string(n) +
                  " is not Hechler mod the filter");
    }
    if (!agreeBelow(h, k, n)) {
      throw Error("syncIntersection: K_" + std::to_string(n) +
                  " disagrees with the base tree below level " +
                  std::to_string(n));
    }
    all.push_back(k);
  }
  RegularTree out = intersectTrees(all);
  if (!isHechlerModF(out, f)) {
    throw Error("syncIntersection: intersection is not Hechler mod the filter");
  }
  return out;
}

}  // namespace hechler
