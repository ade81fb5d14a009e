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

#include "hechler/trees.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "hechler/rng.hpp"

namespace hechler {
namespace {

void dropEmptyGuards(std::vector<TreeState>& states) {
  for (auto& s : states) {
    std::erase_if(s.rules, [](const TreeRule& r) { return r.guard.empty(); });
  }
}

std::vector<bool> reachable(const std::vector<TreeState>& states) {
  std::vector<bool> seen(states.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t q = queue.front();
    queue.pop_front();
    for (const auto& r : states[q].rules) {
      if (r.next < states.size() && !seen[r.next]) {
        seen[r.next] = true;
        queue.push_back(r.next);
      }
    }
  }
  return seen;
}

}  // namespace

RegularTree::RegularTree(std::vector<TreeState> states, Sequence root)
    : states_(std::move(states)), root_(std::move(root)) {
  if (states_.empty()) throw Error("tree: no states");
  dropEmptyGuards(states_);

  std::set<std::string> names;
  for (const auto& s : states_) {
    if (s.name.empty()) throw Error("tree: empty state name");
    if (!names.insert(s.name).second) {
      throw Error("tree: duplicate state name '" + s.name + "'");
    }
    for (const auto& r : s.rules) {
      if (r.next >= states_.size()) {
        throw Error("tree: state '" + s.name + "' has a rule to a missing state");
      }
    }
  }

  unions_.reserve(states_.size());
  for (const auto& s : states_) {
    PeriodicSet acc;
    for (const auto& r : s.rules) {
      if (!intersect(acc, r.guard).empty()) {
        throw Error("tree: overlapping guards in state '" + s.name + "'");
      }
      acc = unite(acc, r.guard);
    }
    unions_.push_back(std::move(acc));
  }

  const auto seen = reachable(states_);
  for (std::size_t q = 0; q < states_.size(); ++q) {
    if (!seen[q]) {
      throw Error("tree: state '" + states_[q].name + "' is unreachable");
    }
  }
}

RegularTree RegularTree::pruned(std::vector<TreeState> states, Sequence root) {
  if (states.empty()) throw Error("tree: no states");
  dropEmptyGuards(states);
  const auto seen = reachable(states);
  std::vector<std::size_t> remap(states.size(), 0);
  std::vector<TreeState> kept;
  for (std::size_t q = 0; q < states.size(); ++q) {
    if (seen[q]) {
      remap[q] = kept.size();
      kept.push_back(std::move(states[q]));
    }
  }
  for (auto& s : kept) {
    for (auto& r : s.rules) r.next = remap[r.next];
  }
  return RegularTree(std::move(kept), std::move(root));
}

RegularTree RegularTree::full() {
  return RegularTree({TreeState{"q0", {TreeRule{PeriodicSet::all(), 0}}}});
}

std::optional<std::size_t> RegularTree::findState(std::string_view name) const {
  for (std::size_t q = 0; q < states_.size(); ++q) {
    if (states_[q].name == name) return q;
  }
  return std::nullopt;
}

std::optional<std::size_t> RegularTree::next(std::size_t q, Natural a) const {
  for (const auto& r : states_.at(q).rules) {
    if (r.guard.contains(a)) return r.next;
  }
  return std::nullopt;
}

std::optional<std::size_t> RegularTree::stateAt(std::span<const Natural> u) const {
  if (u.size() < root_.size()) return std::nullopt;
  if (!std::equal(root_.begin(), root_.end(), u.begin())) return std::nullopt;
  std::size_t q = 0;
  for (std::size_t i = root_.size(); i < u.size(); ++i) {
    auto nq = next(q, u[i]);
    if (!nq) return std::nullopt;
    q = *nq;
  }
  return q;
}

bool RegularTree::contains(std::span<const Natural> u) const {
  if (u.size() <= root_.size()) {
    return std::equal(u.begin(), u.end(), root_.begin());
  }
  return stateAt(u).has_value();
}

PeriodicSet RegularTree::successorSet(std::span<const Natural> u) const {
  if (u.size() < root_.size()) {
    if (!std::equal(u.begin(), u.end(), root_.begin())) {
      throw Error("successorSet: " + to_string(u) + " is not a node");
    }
    return PeriodicSet::finite({root_[u.size()]});
  }
  auto q = stateAt(u);
  if (!q) throw Error("successorSet: " + to_string(u) + " is not a node");
  return unions_[*q];
}

RegularTree RegularTree::withRoot(Sequence s) const {
  RegularTree out = *this;
  out.root_ = std::move(s);
  return out;
}

const char* to_string(TreeClass c) {
  switch (c) {
    case TreeClass::hechler: return "hechler";
    case TreeClass::laver: return "laver";
    case TreeClass::neither: return "neither";
  }
  return "?";
}

bool isHechlerModF(const RegularTree& t, Filter& f) {
  for (std::size_t q = 0; q < t.size(); ++q) {
    if (!f.inFilter(t.successors(q))) return false;
  }
  return true;
}

bool isLaverModF(const RegularTree& t, Filter& f) {
  for (std::size_t q = 0; q < t.size(); ++q) {
    if (!f.isPositive(t.successors(q))) return false;
  }
  return true;
}

TreeClass classifyModF(const RegularTree& t, Filter& f) {
  if (isHechlerModF(t, f)) return TreeClass::hechler;
  if (isLaverModF(t, f)) return TreeClass::laver;
  return TreeClass::neither;
}

ThresholdFunction::ThresholdFunction(std::vector<Natural> defaults,
                                     std::vector<std::size_t> transition,
                                     std::map<Sequence, Natural> exceptions)
    : defaults_(std::move(defaults)),
      transition_(std::move(transition)),
      exceptions_(std::move(exceptions)) {
  if (defaults_.empty() || defaults_.size() != transition_.size()) {
    throw Error("threshold: defaults and transition must be nonempty and "
                "of equal length");
  }
  for (std::size_t next : transition_) {
    if (next >= defaults_.size()) throw Error("threshold: transition out of range");
  }
}

ThresholdFunction ThresholdFunction::constant(Natural bound) {
  return ThresholdFunction({bound}, {0});
}

std::size_t ThresholdFunction::stateAtDepth(std::size_t depth) const {
  std::size_t q = 0;
  for (std::size_t i = 0; i < depth; ++i) q = transition_[q];
  return q;
}

Natural ThresholdFunction::operator()(std::span<const Natural> u) const {
  if (auto it = exceptions_.find(Sequence(u.begin(), u.end()));
      it != exceptions_.end()) {
    return it->second;
  }
  return defaults_[stateAtDepth(u.size())];
}

RegularTree fromThreshold(const ThresholdFunction& sigma) {
  const std::size_t baseCount = sigma.defaults().size();

  // Trie of the prefixes of exception nodes; each trie node becomes its own
  // state so that its bound can differ from the default.
  std::map<Sequence, std::size_t> trie;
  std::vector<Sequence> trieNodes;
  for (const auto& [node, bound] : sigma.exceptions()) {
    for (std::size_t len = 0; len <= node.size(); ++len) {
      Sequence prefix(node.begin(), node.begin() + len);
      if (trie.emplace(prefix, trieNodes.size()).second) {
        trieNodes.push_back(std::move(prefix));
      }
    }
  }

  // Layout: trie states first (the empty node, if present, is trie index 0
  // because it is the first prefix inserted), then base states.
  std::vector<TreeState> states;
  auto baseIndex = [&](std::size_t q) { return trieNodes.size() + q; };
  for (std::size_t i = 0; i < trieNodes.size(); ++i) {
    const Sequence& u = trieNodes[i];
    const Natural bound = sigma(u);
    const std::size_t q = sigma.stateAtDepth(u.size());
    TreeState s{"x" + std::to_string(i), {}};
    PeriodicSet rest = PeriodicSet::above(bound);
    for (const auto& [other, idx] : trie) {
      if (other.size() == u.size() + 1 &&
          std::equal(u.begin(), u.end(), other.begin()) &&
          other.back() > bound) {
        PeriodicSet single = PeriodicSet::finite({other.back()});
        s.rules.push_back({single, idx});
        rest = difference(rest, single);
      }
    }
    s.rules.push_back({rest, baseIndex(sigma.transition()[q])});
    states.push_back(std::move(s));
  }
  for (std::size_t q = 0; q < baseCount; ++q) {
    states.push_back(TreeState{
        "b" + std::to_string(q),
        {TreeRule{PeriodicSet::above(sigma.defaults()[q]),
                  baseIndex(sigma.transition()[q])}}});
  }
  return RegularTree::pruned(std::move(states));
}

BranchSample sampleBranch(const RegularTree& t, SampleScheme scheme,
                          std::size_t length, std::uint64_t seed) {
  Rng rng(seed);
  auto choose = [&](std::size_t q) -> Natural {
    const PeriodicSet& s = t.successors(q);
    if (s.empty()) {
      throw Error("sampleBranch: state '" + t.state(q).name +
                  "' has no successors");
    }
    if (scheme == SampleScheme::minimal) return *minElement(s);
    Natural k = rng.geometric();
    if (auto n = count(s)) k %= *n;
    return enumerate(s, k);
  };

  BranchSample out;
  const Sequence& root = t.root();
  if (scheme != SampleScheme::lasso) {
    std::size_t q = 0;
    for (std::size_t i = 0; i < length; ++i) {
      if (i < root.size()) {
        out.nodes.push_back(root[i]);
        continue;
      }
      const Natural a = choose(q);
      out.nodes.push_back(a);
      q = *t.next(q, a);
    }
    return out;
  }

  std::unordered_map<std::size_t, std::size_t> firstSeen;
  Sequence moves;
  std::size_t q = 0;
  while (!firstSeen.contains(q)) {
    firstSeen.emplace(q, moves.size());
    const Natural a = choose(q);
    moves.push_back(a);
    q = *t.next(q, a);
  }
  const std::size_t j = firstSeen.at(q);
  Sequence stem = root;
  stem.insert(stem.end(), moves.begin(), moves.begin() + j);
  Lasso lasso(std::move(stem), Sequence(moves.begin() + j, moves.end()));
  out.nodes = lasso.unroll(length);
  out.lasso = std::move(lasso);
  return out;
}

Sequence commonBranch(const RegularTree& a, const RegularTree& b,
                      std::size_t depth) {
  Sequence u;
  for (std::size_t i = 0; i < depth; ++i) {
    const PeriodicSet meet = intersect(a.successorSet(u), b.successorSet(u));
    auto m = minElement(meet);
    if (!m) {
      throw Error("commonBranch: successor sets are disjoint at " + to_string(u));
    }
    u.push_back(*m);
  }
  return u;
}

std::string to_string(const RegularTree& t, std::size_t indent) {
  std::string out = "(tree (root";
  for (Natural n : t.root()) out += " " + std::to_string(n);
  out += ")";
  const std::string pad(indent + 2, ' ');
  for (const auto& s : t.states()) {
    out += "\n" + pad + "(state " + s.name;
    for (const auto& r : s.rules) {
      out += " (rule " + to_string(r.guard) + " " + t.state(r.next).name + ")";
    }
    out += ")";
  }
  return out + ")";
}

}  // namespace hechler
