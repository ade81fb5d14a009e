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

#ifndef HECHLER_TREES_HPP_
#define HECHLER_TREES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hechler/common.hpp"
#include "hechler/filters.hpp"
#include "hechler/setalg.hpp"

namespace hechler {

struct TreeRule {
  PeriodicSet guard;
  std::size_t next = 0;
  bool operator==(const TreeRule&) const = default;
};

struct TreeState {
  std::string name;
  std::vector<TreeRule> rules;
  bool operator==(const TreeState&) const = default;
};

// A finitely presented subtree of the finite sequences of naturals.
//
// Nodes are the prefixes of root together with root⌢v for every v on which
// the deterministic guard machine, started in state 0, has a run. All nodes
// in one state share one successor set (the union of that state's guards),
// which is what makes per-state classification exact.
class RegularTree {
 public:
  // Validates: state 0 exists, next indices in range, guards of one state
  // pairwise disjoint, every state reachable. Rules with empty guards are
  // dropped before the reachability check.
  explicit RegularTree(std::vector<TreeState> states, Sequence root = {});

  // Like the constructor, but removes unreachable states instead of
  // rejecting them.
  static RegularTree pruned(std::vector<TreeState> states, Sequence root = {});

  // Every finite sequence.
  static RegularTree full();

  const Sequence& root() const { return root_; }
  const std::vector<TreeState>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  const TreeState& state(std::size_t q) const { return states_.at(q); }
  std::optional<std::size_t> findState(std::string_view name) const;

  // Union of the guards of q.
  const PeriodicSet& successors(std::size_t q) const { return unions_.at(q); }
  std::optional<std::size_t> next(std::size_t q, Natural a) const;

  // State of node u, for u extending the root. nullopt when u is not a node
  // or is a proper prefix of the root.
  std::optional<std::size_t> stateAt(std::span<const Natural> u) const;

  bool contains(std::span<const Natural> u) const;

  // {n : u⌢n is a node}. Throws if u is not a node.
  PeriodicSet successorSet(std::span<const Natural> u) const;

  // Same state machine placed below s.
  RegularTree withRoot(Sequence s) const;

  bool operator==(const RegularTree& other) const {
    return root_ == other.root_ && states_ == other.states_;
  }

 private:
  std::vector<TreeState> states_;
  Sequence root_;
  std::vector<PeriodicSet> unions_;
};

enum class TreeClass { hechler, laver, neither };
const char* to_string(TreeClass c);

// hechler iff every state's successor set is in F; otherwise laver iff every
// state's successor set is in F^+. Only nodes at or below the root count.
TreeClass classifyModF(const RegularTree& t, Filter& f);
bool isHechlerModF(const RegularTree& t, Filter& f);
bool isLaverModF(const RegularTree& t, Filter& f);

// sigma(u) for the threshold tree {f : f(n) > sigma(f|n) for all n}.
//
// The bound at u is exceptions[u] when present, otherwise defaults[q] where q
// is the state reached after |u| steps of the move-independent transition
// map starting at state 0.
class ThresholdFunction {
 public:
  ThresholdFunction(std::vector<Natural> defaults,
                    std::vector<std::size_t> transition,
                    std::map<Sequence, Natural> exceptions = {});

  static ThresholdFunction constant(Natural bound);

  Natural operator()(std::span<const Natural> u) const;

  const std::vector<Natural>& defaults() const { return defaults_; }
  const std::vector<std::size_t>& transition() const { return transition_; }
  const std::map<Sequence, Natural>& exceptions() const { return exceptions_; }

  std::size_t stateAtDepth(std::size_t depth) const;

 private:
  std::vector<Natural> defaults_;
  std::vector<std::size_t> transition_;
  std::map<Sequence, Natural> exceptions_;
};

// The tree with successor set (sigma(u), infinity) at every node u.
RegularTree fromThreshold(const ThresholdFunction& sigma);

enum class SampleScheme { minimal, seededRandom, lasso };

struct BranchSample {
  Sequence nodes;               // a node chain of the requested length
  std::optional<Lasso> lasso;   // set for SampleScheme::lasso
};

// minimal takes the least successor; seededRandom takes the k-th successor
// with k geometric(1/2); lasso walks like seededRandom until a state repeats
// and returns the resulting eventually periodic branch. Throws on a node
// with no successors.
BranchSample sampleBranch(const RegularTree& t, SampleScheme scheme,
                          std::size_t length, std::uint64_t seed = 0);

// A node of depth `depth` lying in both trees, built by taking the least
// element of the intersection of the successor sets at every step. Throws
// when some intersection is empty.
Sequence commonBranch(const RegularTree& a, const RegularTree& b,
                      std::size_t depth);

// (tree (root ...) (state NAME (rule SET NAME)...)...), one state per line,
// continuation lines indented by `indent` + 2 spaces.
std::string to_string(const RegularTree& t, std::size_t indent = 0);

}  // namespace hechler

#endif  // HECHLER_TREES_HPP_
