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

#ifndef HECHLER_RAMSEY_HPP_
#define HECHLER_RAMSEY_HPP_

#include <cstddef>
#include <set>
#include <span>

#include "hechler/dichotomy.hpp"

namespace hechler {

// Increment coding: x(0) = f(0), x(k+1) = x(k) + 1 + f(k+1). A bijection
// between strictly increasing sequences x and arbitrary sequences f.
Sequence encodeIncrements(std::span<const Natural> increasing);
Sequence decodeIncrements(std::span<const Natural> increments);

// The underlying set of a strictly increasing sequence.
std::set<Natural> rangeOfBranch(std::span<const Natural> increasing);

// Greedy x_0 < ... < x_{n-1} such that every subsequence of x, in increment
// coding, is a node of h. Step n intersects the successor sets demanded by
// all 2^n subsequences ending before x_n, shifted to absolute values; each is
// in f, so the intersection is in f and x_n is its least element above
// x_{n-1} (within the kernel for a lazy ultrafilter). h must be Hechler mod
// f and have an empty root.
//
// For n <= kExhaustiveLimit every subsequence is re-checked at the end.
constexpr std::size_t kExhaustiveLimit = 14;
Sequence extractHomogeneousPrefix(const RegularTree& h, Filter& f,
                                  std::size_t n);

// Number of nonempty subsequences of x checked, all nodes of h; throws
// naming the first that is not.
std::size_t verifySubsequences(const RegularTree& h, std::span<const Natural> x);

enum class Side { inA, outA };
const char* to_string(Side s);

struct HomogeneousReport {
  Sequence x;
  Side side = Side::inA;
  std::size_t subsetsChecked = 0;
  Verdict verdict = Verdict::laverInside;
  FilterRecord filter;
};

// Colorings are pair automata over increment-coded increasing sequences that
// settle by depth d: every configuration reachable in exactly d steps is a
// sink (the dead configuration, or one that every move maps to itself).
void requireClopen(const PairAutomaton& coloring, std::size_t d);

// Whether the increasing sequence `subset` (length d) has the accepted colour.
bool colorOf(const PairAutomaton& coloring, std::span<const Natural> subset);

// {a : a = L - 1 mod L} with L the least common multiple of the cell periods.
// On this class absolute and increment successor sets agree up to finitely
// many points, which is what lets the ultrafilter's answers about increment
// sets transfer to the shifted sets queried during extraction.
PeriodicSet silverSeed(const PairAutomaton& coloring);

// Solves the dichotomy for the coloring mod a lazy ultrafilter seeded with
// silverSeed, extracts a homogeneous prefix of length n from the certificate
// tree and checks every d-subset of it. Throws if a check fails.
HomogeneousReport silverExtract(const PairAutomaton& coloring, std::size_t d,
                                std::size_t n);
// The same with a caller-supplied lazy ultrafilter, e.g. one rebuilt by
// Filter::replay from an earlier report.
HomogeneousReport silverExtract(const PairAutomaton& coloring, std::size_t d,
                                std::size_t n, Filter& f);

}  // namespace hechler

#endif  // HECHLER_RAMSEY_HPP_
