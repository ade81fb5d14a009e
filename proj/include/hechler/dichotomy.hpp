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

#ifndef HECHLER_DICHOTOMY_HPP_
#define HECHLER_DICHOTOMY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hechler/filters.hpp"
#include "hechler/presentations.hpp"
#include "hechler/trees.hpp"

namespace hechler {

enum class Verdict { hechlerMiss, laverInside };
const char* to_string(Verdict v);

struct ConfigEntry {
  WitnessConfig config;
  bool inGfp = false;
  std::size_t corank = 0;  // meaningful when !inGfp
  bool operator==(const ConfigEntry&) const = default;
};

// Stratification of the reachable witness configurations.
//
// W (inGfp) is the greatest fixpoint of
//   Phi(X) = {c live : {a : step(c, a) in X} in F^+}
// and a configuration outside W has corank k when it leaves Phi^k(Top) (Top
// being all live configurations), so dead has corank 0 and
//   corank(c) = k + 1  iff  {a : corank(step(c, a)) <= k} in F
// with k minimal. The ordinal-indexed derivative over infinitely many nodes
// collapses here to these finitely many levels, because all nodes sharing a
// configuration share their fate.
struct CorankMap {
  std::vector<ConfigEntry> entries;  // entries[0] is the initial configuration
  std::size_t iterations = 0;        // applications of Phi until stable

  std::optional<std::size_t> find(WitnessConfig c) const;
  const ConfigEntry& at(WitnessConfig c) const;
  bool operator==(const CorankMap&) const = default;
};

CorankMap computeGfp(const PairAutomaton& p, Filter& f);

// Tree over configurations outside W: at corank k + 1 the successor set is
// the maximal {a : corank(step(c, a)) <= k}, and the dead configuration keeps
// every move. Every branch reaches dead within corank(initial) steps, so no
// branch lies in the presented set. Throws if the initial configuration is
// in W.
RegularTree extractHechler(const PairAutomaton& p, Filter& f,
                           const CorankMap& coranks);

// Tree over W with the maximal successor sets {a : step(c, a) in W}. Every
// configuration along every branch is live, so every branch lies in the
// presented set. Throws if the initial configuration is not in W.
RegularTree extractLaver(const PairAutomaton& p, Filter& f,
                         const CorankMap& coranks);

// Serializable description of the filter a certificate was produced under.
struct FilterRecord {
  FilterKind kind = FilterKind::frechet;
  PeriodicSet seed = PeriodicSet::all();
  std::vector<Decision> decisions;
  bool operator==(const FilterRecord&) const = default;
};

FilterRecord recordOf(const Filter& f);
// A fresh filter of the recorded kind, with the decision log replayed.
Filter replayFilter(const FilterRecord& record);

struct DichotomyCertificate {
  Verdict verdict = Verdict::hechlerMiss;
  PairAutomaton instance;
  std::uint64_t instanceHash = 0;
  FilterRecord filter;
  CorankMap coranks;
  // States are named c<i>, where i indexes coranks.entries.
  RegularTree tree;
};

// 64-bit FNV-1a of the canonical printed automaton.
std::uint64_t instanceHash(const PairAutomaton& p);

// Exactly one verdict: laverInside iff the initial configuration is in W.
// The returned tree's classification queries are logged in the filter, so
// the certificate replays under a frozen filter.
DichotomyCertificate solveDichotomy(const PairAutomaton& p, Filter& f);

// Name of the tree state for entry i.
std::string configName(std::size_t i);
// Index of the entry behind a tree state of a certificate tree.
std::size_t configIndex(const DichotomyCertificate& cert, std::size_t state);

struct CheckReport {
  std::vector<std::string> violations;
  std::size_t samplesChecked = 0;
  bool ok() const { return violations.empty(); }
};

// Independent verification of a certificate: replays the filter log (frozen),
// checks every tree transition against the automaton's witness steps, the
// tree classification, corank descent (hechlerMiss) or W-closure
// (laverInside), and lasso membership on `samples` sampled branches. Throws
// if `expected` is given and its hash differs from the certificate's.
CheckReport checkCertificate(const DichotomyCertificate& cert,
                             std::size_t samples, std::uint64_t seed = 0,
                             const PairAutomaton* expected = nullptr);

}  // namespace hechler

#endif  // HECHLER_DICHOTOMY_HPP_
