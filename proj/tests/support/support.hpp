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

#ifndef HECHLER_TESTS_SUPPORT_HPP_
#define HECHLER_TESTS_SUPPORT_HPP_

// Random generators and brute-force oracles shared by the unit and
// acceptance tests. The oracles re-derive results from the raw rules and
// bit words without going through the library's cell tables, witness steps
// or fixpoint code.

#include <functional>
#include <set>
#include <vector>

#include "hechler/presentations.hpp"
#include "hechler/rng.hpp"
#include "hechler/setalg.hpp"
#include "hechler/trees.hpp"

namespace hechler::testing {

std::vector<bool> bitmap(const PeriodicSet& s, std::size_t length);

PeriodicSet randomSet(Rng& rng, std::size_t maxPrefix = 4,
                      std::size_t maxPeriod = 4);
PeriodicSet randomInfiniteSet(Rng& rng, std::size_t maxPrefix = 4,
                              std::size_t maxPeriod = 4);
// Cofinite, missing a random subset of 0..maxMissing.
PeriodicSet randomCofinite(Rng& rng, std::size_t maxMissing = 6);

// Up to maxStates states, 0-2 rules each plus chaining rules, x guards with periods <=
// maxPeriod, nonempty y guards. Unreachable states are pruned.
PairAutomaton randomAutomaton(Rng& rng, std::size_t maxStates,
                              std::size_t maxPeriod);

// Deterministic trees whose every successor set is cofinite (Hechler for
// every filter extending the cofinite filter) or merely infinite.
RegularTree randomHechlerTree(Rng& rng, std::size_t maxStates);
RegularTree randomLaverTree(Rng& rng, std::size_t maxStates);

// The full tree for the first n levels, then g (unrooted).
RegularTree delayed(const RegularTree& g, std::size_t n);

// Acceptance of a finite sequence by a tree, by walking the rules directly.
bool oracleContains(const RegularTree& t, const Sequence& u);

// The automaton states reachable after reading x with y existential,
// computed by explicit search over runs.
std::set<std::size_t> oracleStates(const PairAutomaton& p, const Sequence& x);

// Membership of an eventually periodic x: some run survives long enough
// for the state sets along x to have repeated.
bool oracleMember(const PairAutomaton& p, const Lasso& x);

// Truncated backward induction for "II can keep the play alive forever"
// with move sets judged by `positive` on sets of cell indices. `cells` must
// partition the naturals and refine every x guard. The depth is the number
// of reachable state sets, after which the value is stable.
bool oracleLaverInside(
    const PairAutomaton& p, const std::vector<PeriodicSet>& cells,
    const std::function<bool(const std::vector<std::size_t>&)>& positive);

}  // namespace hechler::testing

#endif  // HECHLER_TESTS_SUPPORT_HPP_
