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

#include "hechler/ramsey.hpp"

#include <bit>
#include <numeric>
#include <set>

namespace hechler {

namespace {

void requireIncreasing(std::span<const Natural> x, const char* what) {
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] <= x[i - 1]) {
      throw Error(std::string(what) + ": sequence is not strictly increasing");
    }
  }
}

}  // namespace

Sequence encodeIncrements(std::span<const Natural> increasing) {
  requireIncreasing(increasing, "encodeIncrements");
  Sequence f;
  f.reserve(increasing.size());
  for (std::size_t i = 0; i < increasing.size(); ++i) {
    f.push_back(i == 0 ? increasing[0] : increasing[i] - increasing[i - 1] - 1);
  }
  return f;
}

Sequence decodeIncrements(std::span<const Natural> increments) {
  Sequence x;
  x.reserve(increments.size());
  for (std::size_t i = 0; i < increments.size(); ++i) {
    x.push_back(i == 0 ? increments[0] : x.back() + 1 + increments[i]);
  }
  return x;
}

std::set<Natural> rangeOfBranch(std::span<const Natural> increasing) {
  requireIncreasing(increasing, "rangeOfBranch");
  return std::set<Natural>(increasing.begin(), increasing.end());
}

Sequence extractHomogeneousPrefix(const RegularTree& h, Filter& f,
                                  std::size_t n) {
  if (!h.root().empty()) throw Error("extractHomogeneousPrefix: tree has a root");
  if (n > 24) throw Error("extractHomogeneousPrefix: length limited to 24");
  if (!isHechlerModF(h, f)) {
    throw Error("extractHomogeneousPrefix: tree is not hechler mod " + f.describe());
  }
  const bool ultra = f.kind() == FilterKind::lazyUltra;

  // Subsequences of x are indexed by bitmasks over positions; state[J] is the
  // tree state at the increment coding of x restricted to J.
  Sequence x;
  std::vector<std::size_t> state{0};
  for (std::size_t k = 0; k < n; ++k) {
    PeriodicSet candidates = h.successors(state[0]);
    for (std::size_t mask = 1; mask < state.size(); ++mask) {
      const Natural last = x[std::bit_width(mask) - 1];
      const PeriodicSet shifted = shift(h.successors(state[mask]), last + 1);
      if (!f.inFilter(shifted)) {
        throw Error("extractHomogeneousPrefix: shifted successor set " +
                    to_string(shifted) + " is not in the filter");
      }
      candidates = intersect(candidates, shifted);
    }
    if (ultra) candidates = intersect(candidates, f.kernel());
    const auto next = x.empty() ? minElement(candidates)
                                : minAbove(candidates, x.back());
    if (!next) throw Error("extractHomogeneousPrefix: no admissible next element");
    x.push_back(*next);

    std::vector<std::size_t> grown(state.size() * 2);
    for (std::size_t mask = 0; mask < state.size(); ++mask) {
      grown[mask] = state[mask];
      const Natural inc =
          mask == 0 ? *next : *next - x[std::bit_width(mask) - 1] - 1;
      grown[mask | state.size()] = *h.next(state[mask], inc);
    }
    state = std::move(grown);
  }
  if (n <= kExhaustiveLimit) verifySubsequences(h, x);
  return x;
}

std::size_t verifySubsequences(const RegularTree& h, std::span<const Natural> x) {
  if (x.size() > 30) throw Error("verifySubsequences: sequence too long");
  std::size_t checked = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << x.size()); ++mask) {
    Sequence sub;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if ((mask >> i) & 1u) sub.push_back(x[i]);
    }
    if (!h.contains(encodeIncrements(sub))) {
      throw Error("subsequence " + to_string(sub) + " is not a node");
    }
    ++checked;
  }
  return checked;
}

const char* to_string(Side s) { return s == Side::inA ? "inA" : "outA"; }

void requireClopen(const PairAutomaton& coloring, std::size_t d) {
  std::set<WitnessConfig> level{coloring.initialConfig()};
  for (std::size_t k = 0; k < d; ++k) {
    std::set<WitnessConfig> next;
    for (WitnessConfig c : level) {
      for (std::size_t cell = 0; cell < coloring.cells().size(); ++cell) {
        next.insert(coloring.stepByCell(c, cell));
      }
    }
    level = std::move(next);
  }
  for (WitnessConfig c : level) {
    for (std::size_t cell = 0; cell < coloring.cells().size(); ++cell) {
      if (coloring.stepByCell(c, cell) != c) {
        throw Error("coloring is not decided after " + std::to_string(d) +
                    " increments: configuration " + coloring.describe(c) +
                    " still moves");
      }
    }
  }
}

bool colorOf(const PairAutomaton& coloring, std::span<const Natural> subset) {
  WitnessConfig c = coloring.initialConfig();
  for (Natural inc : encodeIncrements(subset)) c = coloring.step(c, inc);
  return !c.dead();
}

PeriodicSet silverSeed(const PairAutomaton& coloring) {
  std::size_t l = 1;
  for (const auto& cell : coloring.cells()) l = std::lcm(l, cell.periodLength());
  return PeriodicSet::residue(l, l - 1);
}

HomogeneousReport silverExtract(const PairAutomaton& coloring, std::size_t d,
                                std::size_t n) {
  Filter f = Filter::lazyUltra(silverSeed(coloring));
  return silverExtract(coloring, d, n, f);
}

HomogeneousReport silverExtract(const PairAutomaton& coloring, std::size_t d,
                                std::size_t n, Filter& f) {
  if (f.kind() != FilterKind::lazyUltra) {
    throw Error("silverExtract: needs a lazy ultrafilter");
  }
  if (d == 0 || d > n) throw Error("silverExtract: need 0 < d <= N");
  requireClopen(coloring, d);
  const DichotomyCertificate cert = solveDichotomy(coloring, f);

  HomogeneousReport report;
  report.verdict = cert.verdict;
  report.side = cert.verdict == Verdict::laverInside ? Side::inA : Side::outA;
  report.x = extractHomogeneousPrefix(cert.tree, f, n);

  const bool expected = report.side == Side::inA;
  std::vector<std::size_t> pick(d);
  std::iota(pick.begin(), pick.end(), 0);
  Sequence subset(d);
  for (;;) {
    for (std::size_t i = 0; i < d; ++i) subset[i] = report.x[pick[i]];
    if (colorOf(coloring, subset) != expected) {
      throw Error("silverExtract: subset " + to_string(subset) +
                  " has the other colour");
    }
    ++report.subsetsChecked;
    // Next d-combination of 0..n-1 in lexicographic order.
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  report.filter = recordOf(f);
  return report;
}

}  // namespace hechler
