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

#ifndef HECHLER_PRESENTATIONS_HPP_
#define HECHLER_PRESENTATIONS_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hechler/common.hpp"
#include "hechler/setalg.hpp"

namespace hechler {

struct AutRule {
  PeriodicSet x;
  PeriodicSet y;
  std::size_t next = 0;
  bool operator==(const AutRule&) const = default;
};

struct AutState {
  std::string name;
  std::vector<AutRule> rules;
  bool operator==(const AutState&) const = default;
};

// A set of automaton states reached along an x-prefix, with the y
// coordinate projected away. The empty set is the absorbing dead
// configuration.
class WitnessConfig {
 public:
  static constexpr std::size_t kMaxStates = 64;

  constexpr WitnessConfig() = default;
  static constexpr WitnessConfig fromBits(std::uint64_t bits) {
    WitnessConfig c;
    c.bits_ = bits;
    return c;
  }
  static constexpr WitnessConfig single(std::size_t q) {
    return fromBits(std::uint64_t{1} << q);
  }

  constexpr bool dead() const { return bits_ == 0; }
  constexpr bool contains(std::size_t q) const { return (bits_ >> q) & 1u; }
  constexpr std::size_t size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subsetOf(WitnessConfig o) const {
    return (bits_ & ~o.bits_) == 0;
  }

  constexpr WitnessConfig& operator|=(WitnessConfig o) {
    bits_ |= o.bits_;
    return *this;
  }

  auto operator<=>(const WitnessConfig&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// A finitely presented tree on pairs: (x, y) is a branch iff some infinite
// run reads x(n) in an xGuard and y(n) in the yGuard of the same rule at
// every step. The presented set is the projection onto x.
//
// Guards are refined once, at construction, into cells: disjoint periodic
// sets covering the naturals on which every xGuard is constant. Witness
// steps are tabulated per (state, cell).
class PairAutomaton {
 public:
  // State 0 is initial. Rules with empty x or y guards are dropped; throws on
  // dangling next indices, duplicate names, unreachable states, or more than
  // 64 states.
  explicit PairAutomaton(std::vector<AutState> states);

  // Removes unreachable states instead of rejecting them.
  static PairAutomaton pruned(std::vector<AutState> states);

  const std::vector<AutState>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }

  const std::vector<PeriodicSet>& cells() const { return cells_; }
  std::size_t cellOf(Natural a) const;
  // Least element of the cell.
  Natural representative(std::size_t cell) const { return reps_.at(cell); }

  WitnessConfig initialConfig() const { return WitnessConfig::single(0); }

  WitnessConfig step(WitnessConfig c, Natural a) const {
    return stepByCell(c, cellOf(a));
  }
  WitnessConfig stepByCell(WitnessConfig c, std::size_t cell) const;
  // One step with the y symbol committed.
  WitnessConfig stepCommitted(WitnessConfig c, Natural a, Natural b) const;

  std::string describe(WitnessConfig c) const;

  bool operator==(const PairAutomaton& o) const { return states_ == o.states_; }

 private:
  std::vector<AutState> states_;
  std::vector<PeriodicSet> cells_;
  std::vector<Natural> reps_;
  // table_[q * cells + k]: configuration reached from {q} on cell k.
  std::vector<WitnessConfig> table_;
};

WitnessConfig stepWitness(const PairAutomaton& p, WitnessConfig c, Natural a);

// Configuration after reading (s(i), t(i)) committed for i < |t| and s(i)
// with the y symbol existential for |t| <= i < |s|. Throws if |t| > |s|.
WitnessConfig residual(const PairAutomaton& p, std::span<const Natural> s,
                       std::span<const Natural> t);

// Whether the eventually periodic x lies in the presented set.
//
// The presented set is closed: configurations along x form an eventually
// periodic sequence, and if none is dead then the state-level runs form an
// infinite finitely branching tree, which has an infinite path (Konig); the
// nonempty y guards along it give a witness y.
bool memberLasso(const PairAutomaton& p, const Lasso& x);

// A y prefix with (x(i), y(i)) accepted along a run, chosen backwards from the
// least surviving state with least y symbols. Throws if x dies.
Sequence witnessForBranch(const PairAutomaton& p, std::span<const Natural> x);

// (aut (state NAME (rule (x SET) (y SET) NAME)...)...), one state per line.
std::string to_string(const PairAutomaton& p, std::size_t indent = 0);

}  // namespace hechler

#endif  // HECHLER_PRESENTATIONS_HPP_
