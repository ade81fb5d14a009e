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

// Acceptance run: one [PASS] or [FAIL] line per criterion, nonzero exit if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hechler/dichotomy.hpp"
#include "hechler/games.hpp"
#include "hechler/proofkit.hpp"
#include "hechler/ramsey.hpp"
#include "support/support.hpp"

using namespace hechler;
using namespace hechler::testing;

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Result {
  bool pass = false;
  std::string detail;
};

Result pass(std::string detail) { return {true, std::move(detail)}; }
Result fail(std::string detail) { return {false, std::move(detail)}; }

std::string fixed(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", x);
  return buffer;
}

// --- shared helpers --------------------------------------------------------

PeriodicSet fin(std::initializer_list<Natural> xs) { return PeriodicSet::finite(xs); }
PeriodicSet cofin(std::initializer_list<Natural> xs) { return PeriodicSet::cofinite(xs); }

// Automaton whose rule from q to q' has x guard guards[q * n + q'] and y all.
std::optional<PairAutomaton> fromGuards(std::size_t n,
                                        const std::vector<PeriodicSet>& guards) {
  std::vector<AutState> states(n);
  for (std::size_t q = 0; q < n; ++q) {
    states[q].name = "q" + std::to_string(q);
    for (std::size_t r = 0; r < n; ++r) {
      const PeriodicSet& g = guards[q * n + r];
      if (!g.empty()) states[q].rules.push_back(AutRule{g, PeriodicSet::all(), r});
    }
  }
  PairAutomaton p = PairAutomaton::pruned(std::move(states));
  if (p.size() != n) return std::nullopt;  // counted in a smaller family
  return p;
}

DichotomyCertificate solve(const PairAutomaton& p, Filter f) {
  return solveDichotomy(p, f);
}

std::vector<Sequence> nodesToDepth(const RegularTree& t, std::size_t depth) {
  std::vector<Sequence> out{t.root()};
  std::vector<Sequence> frontier{t.root()};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Sequence> next;
    for (const Sequence& u : frontier) {
      for (const auto& r : t.state(*t.stateAt(u)).rules) {
        for (Natural i : {0, 2}) {
          if (count(r.guard) && i >= *count(r.guard)) continue;
          Sequence v = u;
          v.push_back(enumerate(r.guard, i));
          next.push_back(std::move(v));
        }
      }
    }
    if (next.size() > 300) next.resize(300);
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::vector<DichotomyCertificate> randomCertificates(Rng& rng, std::size_t count,
                                                     bool density) {
  std::vector<DichotomyCertificate> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(solve(randomAutomaton(rng, 6, 4),
                        density ? Filter::density() : Filter::frechet()));
  }
  return out;
}

// --- criteria --------------------------------------------------------------

Result dichotomyOracle() {
  const auto start = Clock::now();
  std::vector<PeriodicSet> cells;
  for (Natural n = 0; n <= 6; ++n) cells.push_back(fin({n}));
  cells.push_back(PeriodicSet::above(6));
  auto frechetPositive = [](const std::vector<std::size_t>& good) {
    return !good.empty() && good.back() == 7;
  };

  const std::vector<PeriodicSet> wide{PeriodicSet::none(), fin({0, 2, 4, 6}), fin({1, 3, 5}),
                                      PeriodicSet::above(6), cofin({0, 1})};
  const std::vector<PeriodicSet> narrow{PeriodicSet::none(), fin({1, 3, 5}), cofin({0, 1})};

  std::size_t instances = 0, agree = 0, inside = 0;
  std::string firstMismatch;
  auto enumerate = [&](std::size_t n, const std::vector<PeriodicSet>& palette) {
    const std::size_t slots = n * n;
    std::vector<std::size_t> digit(slots, 0);
    for (;;) {
      std::vector<PeriodicSet> guards;
      for (std::size_t d : digit) guards.push_back(palette[d]);
      if (auto p = fromGuards(n, guards)) {
        ++instances;
        const bool expected = oracleLaverInside(*p, cells, frechetPositive);
        const auto a = solve(*p, Filter::frechet());
        const auto b = solve(*p, Filter::density());
        const bool got = a.verdict == Verdict::laverInside;
        if (got == expected && b.verdict == a.verdict) {
          ++agree;
        } else if (firstMismatch.empty()) {
          firstMismatch = to_string(*p);
        }
        inside += expected;
      }
      std::size_t i = 0;
      while (i < slots && ++digit[i] == palette.size()) digit[i++] = 0;
      if (i == slots) break;
    }
  };
  enumerate(1, wide);
  enumerate(2, wide);
  enumerate(3, narrow);
  const double secs = secondsSince(start);
  const std::string detail = std::to_string(agree) + "/" + std::to_string(instances) +
                             " verdicts agree (" + std::to_string(inside) +
                             " laverInside), " + fixed(secs) + " s";
  if (instances < 500 || agree != instances || secs >= 60) {
    return fail(detail + (firstMismatch.empty() ? "" : "; first mismatch " + firstMismatch));
  }
  return pass(detail);
}

struct CertificateCorpus {
  std::vector<DichotomyCertificate> frechet, density;
};

const CertificateCorpus& certificateCorpus() {
  static const CertificateCorpus corpus = [] {
    Rng rng(1001);
    CertificateCorpus c;
    c.frechet = randomCertificates(rng, 200, false);
    c.density = randomCertificates(rng, 200, true);
    return c;
  }();
  return corpus;
}

Result certificateSoundness() {
  const auto& corpus = certificateCorpus();
  std::size_t ok = 0, total = 0;
  std::string firstViolation;
  for (const auto* set : {&corpus.frechet, &corpus.density}) {
    for (std::size_t i = 0; i < set->size(); ++i) {
      const auto& cert = (*set)[i];
      const auto report = checkCertificate(cert, 100, i, &cert.instance);
      ++total;
      if (report.ok() && report.samplesChecked == 100) {
        ++ok;
      } else if (firstViolation.empty() && !report.violations.empty()) {
        firstViolation = report.violations.front();
      }
    }
  }

  // Corrupted fixtures: each must be rejected.
  std::vector<std::pair<std::string, std::function<bool()>>> fixtures;
  const PairAutomaton odd({
      AutState{"q0", {AutRule{fin({1, 3, 5}), PeriodicSet::all(), 1}}},
      AutState{"q1", {AutRule{PeriodicSet::all(), PeriodicSet::all(), 1}}},
  });
  const PairAutomaton even({
      AutState{"q0", {AutRule{PeriodicSet::residue(2, 0), PeriodicSet::all(), 1}}},
      AutState{"q1", {AutRule{PeriodicSet::all(), PeriodicSet::all(), 1}}},
  });
  const auto good = solve(odd, Filter::frechet());
  auto rejected = [](const DichotomyCertificate& c) { return !checkCertificate(c, 20).ok(); };
  fixtures.emplace_back("finite successor set", [&] {
    auto states = good.tree.states();
    states[0].rules[0].guard = fin({0, 2});
    auto bad = good;
    bad.tree = RegularTree(states);
    return rejected(bad);
  });
  fixtures.emplace_back("successors into the set", [&] {
    auto states = good.tree.states();
    states[0].rules[0].guard = PeriodicSet::all();
    auto bad = good;
    bad.tree = RegularTree(states);
    return rejected(bad);
  });
  fixtures.emplace_back("flipped hechlerMiss verdict", [&] {
    auto bad = good;
    bad.verdict = Verdict::laverInside;
    return rejected(bad);
  });
  fixtures.emplace_back("flipped laverInside verdict", [&] {
    auto bad = solve(even, Filter::frechet());
    bad.verdict = Verdict::hechlerMiss;
    return rejected(bad);
  });
  fixtures.emplace_back("raised corank", [&] {
    auto bad = good;
    bad.coranks.entries[1].corank = 5;
    return rejected(bad);
  });
  fixtures.emplace_back("stored hash", [&] {
    auto bad = good;
    bad.instanceHash += 1;
    return rejected(bad);
  });
  fixtures.emplace_back("other instance", [&] {
    try {
      checkCertificate(good, 20, 0, &even);
    } catch (const Error&) {
      return true;
    }
    return false;
  });
  fixtures.emplace_back("forged ultrafilter log", [&] {
    Filter u = Filter::lazyUltra();
    auto bad = solveDichotomy(even, u);
    bad.filter.decisions.front().verdict = !bad.filter.decisions.front().verdict;
    return rejected(bad);
  });
  fixtures.emplace_back("truncated ultrafilter log", [&] {
    Filter u = Filter::lazyUltra();
    auto bad = solveDichotomy(even, u);
    bad.filter.decisions.pop_back();
    return rejected(bad);
  });
  std::size_t caught = 0;
  std::string missed;
  for (auto& [name, run] : fixtures) {
    if (run()) {
      ++caught;
    } else {
      missed += " " + name;
    }
  }
  const std::string detail = std::to_string(ok) + "/" + std::to_string(total) +
                             " certificates clean with 100 samples, " +
                             std::to_string(caught) + "/" +
                             std::to_string(fixtures.size()) + " corruptions rejected";
  if (ok != total || caught != fixtures.size()) {
    return fail(detail + (firstViolation.empty() ? "" : "; " + firstViolation) +
                (missed.empty() ? "" : "; missed:" + missed));
  }
  return pass(detail);
}

Result corankDescent() {
  const auto& corpus = certificateCorpus();
  std::size_t certs = 0, branches = 0, exceptions = 0;
  for (const auto* set : {&corpus.frechet, &corpus.density}) {
    for (std::size_t i = 0; i < set->size(); ++i) {
      const auto& cert = (*set)[i];
      if (cert.verdict != Verdict::hechlerMiss) continue;
      ++certs;
      const PairAutomaton& p = cert.instance;
      const std::size_t bound = cert.coranks.entries[0].corank;
      for (std::size_t s = 0; s < 100; ++s) {
        const auto b = sampleBranch(cert.tree, SampleScheme::lasso, 0, i * 1000 + s);
        const Sequence x = b.lasso->unroll(bound + 1);
        WitnessConfig c = p.initialConfig();
        std::size_t steps = 0;
        bool good = true;
        while (!c.dead() && steps <= bound) {
          const WitnessConfig d = p.step(c, x[steps]);
          if (cert.coranks.at(d).corank >= cert.coranks.at(c).corank) good = false;
          c = d;
          ++steps;
        }
        ++branches;
        if (!good || !c.dead() || steps > bound) ++exceptions;
      }
    }
  }
  const std::string detail = std::to_string(branches) + " branches of " +
                             std::to_string(certs) + " hechlerMiss certificates, " +
                             std::to_string(exceptions) + " exceptions";
  return exceptions == 0 && certs > 0 ? pass(detail) : fail(detail);
}

// A deterministic automaton deciding membership after `depth` entries; its
// complement swaps the accepting and rejecting sinks.
std::pair<PairAutomaton, PairAutomaton> clopenPair(Rng& rng, std::size_t depth) {
  auto partition = [&]() {
    std::vector<PeriodicSet> parts;
    const std::size_t m = 1 + rng.below(3);
    for (std::size_t r = 0; r < m; ++r) parts.push_back(PeriodicSet::residue(m, r));
    const PeriodicSet special = fin({rng.below(4)});
    for (auto& part : parts) part = difference(part, special);
    parts.push_back(special);
    return parts;
  };
  // State layout: level states, then acc (self loop), then rej (no rules).
  struct Edge {
    PeriodicSet guard;
    int target;  // >= 0 level state, -1 accept, -2 reject
  };
  std::vector<std::vector<Edge>> edges;
  std::vector<std::size_t> levelStart{0};
  std::size_t width = 1;
  for (std::size_t level = 0; level < depth; ++level) {
    const std::size_t nextWidth = level + 1 < depth ? 1 + rng.below(2) : 0;
    const std::size_t nextStart = levelStart.back() + width;
    for (std::size_t s = 0; s < width; ++s) {
      std::vector<Edge> out;
      for (auto& part : partition()) {
        int target;
        if (nextWidth == 0 || rng.below(4) == 0) {
          target = rng.coin() ? -1 : -2;
        } else {
          target = static_cast<int>(nextStart + rng.below(nextWidth));
        }
        out.push_back(Edge{part, target});
      }
      edges.push_back(std::move(out));
    }
    levelStart.push_back(nextStart);
    width = nextWidth;
  }
  auto build = [&](bool swap) {
    const std::size_t acc = edges.size(), rej = edges.size() + 1;
    std::vector<AutState> states;
    for (std::size_t s = 0; s < edges.size(); ++s) {
      AutState st{"s" + std::to_string(s), {}};
      for (const Edge& e : edges[s]) {
        std::size_t t = e.target >= 0 ? static_cast<std::size_t>(e.target)
                        : (e.target == -1) != swap ? acc
                                                   : rej;
        if (t == rej) continue;
        st.rules.push_back(AutRule{e.guard, PeriodicSet::all(), t});
      }
      states.push_back(std::move(st));
    }
    states.push_back(AutState{"acc", {AutRule{PeriodicSet::all(), PeriodicSet::all(), acc}}});
    states.push_back(AutState{"rej", {}});
    return PairAutomaton::pruned(std::move(states));
  };
  return {build(false), build(true)};
}

Result exclusivity() {
  Rng rng(1004);
  std::size_t instances = 0, bothInsideUltra = 0, oneInsideUltra = 0;
  std::size_t bothMissFrechet = 0, bothInsideFrechet = 0, prefixes = 0, prefixFailures = 0;
  while (instances < 50) {
    const auto [a, b] = clopenPair(rng, 1 + rng.below(3));
    ++instances;
    // Spot-check the complement on lassos.
    for (int k = 0; k < 20; ++k) {
      Sequence cycle(1 + rng.below(3));
      for (auto& v : cycle) v = rng.below(7);
      Sequence stem(rng.below(3));
      for (auto& v : stem) v = rng.below(7);
      const Lasso l(stem, cycle);
      if (memberLasso(a, l) == memberLasso(b, l)) return fail("complement construction broken");
    }
    Filter u = Filter::lazyUltra(randomInfiniteSet(rng));
    const auto ua = solveDichotomy(a, u);
    const auto ub = solveDichotomy(b, u);
    const bool ia = ua.verdict == Verdict::laverInside;
    const bool ib = ub.verdict == Verdict::laverInside;
    bothInsideUltra += ia && ib;
    oneInsideUltra += ia != ib;

    const auto fa = solve(a, Filter::frechet());
    const auto fb = solve(b, Filter::frechet());
    bothMissFrechet +=
        fa.verdict == Verdict::hechlerMiss && fb.verdict == Verdict::hechlerMiss;
    bothInsideFrechet +=
        fa.verdict == Verdict::laverInside && fb.verdict == Verdict::laverInside;

    // Every Hechler tree meets every Laver tree: build the shared prefix.
    Filter fr = Filter::frechet();
    for (const auto* h : {&fa.tree, &fb.tree}) {
      for (const auto* l : {&fa.tree, &fb.tree}) {
        if (!isHechlerModF(*h, fr) || !isLaverModF(*l, fr)) continue;
        ++prefixes;
        try {
          const Sequence u = commonBranch(*h, *l, 8);
          if (u.size() != 8 || !h->contains(u) || !l->contains(u)) ++prefixFailures;
        } catch (const Error&) {
          ++prefixFailures;
        }
      }
    }
  }
  const std::string detail =
      std::to_string(instances) + " clopen pairs; ultrafilter: " +
      std::to_string(bothInsideUltra) + " with both laverInside, " +
      std::to_string(oneInsideUltra) + " with exactly one; Frechet: " +
      std::to_string(bothMissFrechet) + " with both hechlerMiss (" +
      std::to_string(bothInsideFrechet) + " with both laverInside, allowed since " +
      "Frechet^+ is not Frechet); " + std::to_string(prefixes - prefixFailures) + "/" +
      std::to_string(prefixes) + " common prefixes of depth 8";
  const bool ok = bothInsideUltra == 0 && oneInsideUltra == instances &&
                  bothMissFrechet == 0 && prefixFailures == 0 && prefixes > 0;
  return ok ? pass(detail) : fail(detail);
}

Result lemmaCombinators() {
  Rng rng(1005);
  std::size_t unionOk = 0, intersectOk = 0, nodes = 0;
  std::string problem;
  for (int trial = 0; trial < 100; ++trial) {
    Filter f = trial % 2 ? Filter::frechet() : Filter::density();
    const PeriodicSet excluded = fin({rng.below(5), rng.below(5)});
    const std::size_t m = 1 + rng.below(3);
    RootedFamily family;
    family.root = Sequence(rng.below(3));
    for (auto& v : family.root) v = rng.below(5);
    family.excluded = excluded;
    for (std::size_t r = 0; r < m; ++r) {
      family.members.push_back(
          FamilyMember{difference(PeriodicSet::residue(m, r), excluded), randomHechlerTree(rng, 3)});
    }
    const RegularTree u = lemma1Union(family, f);
    bool good = isHechlerModF(u, f);
    good = good && u.successorSet(family.root) == complement(excluded);
    for (Natural n = 0; n < 10 && good; ++n) {
      if (excluded.contains(n)) continue;
      const RegularTree& t = family.members[n % m].tree;
      for (const Sequence& v : nodesToDepth(t, 4)) {
        Sequence w = family.root;
        w.push_back(n);
        w.insert(w.end(), v.begin(), v.end());
        ++nodes;
        if (!u.contains(w) || u.successorSet(w) != t.successorSet(v)) {
          good = false;
          break;
        }
      }
    }
    unionOk += good;
    if (!good && problem.empty()) problem = "union trial " + std::to_string(trial);
  }
  for (int trial = 0; trial < 100; ++trial) {
    Filter f = trial % 2 ? Filter::frechet() : Filter::density();
    const RegularTree h = randomHechlerTree(rng, 3);
    LevelFamily levels;
    const std::size_t bound = 1 + rng.below(5);
    for (std::size_t n = 0; n <= bound; ++n) {
      const RegularTree parts[] = {h, delayed(randomHechlerTree(rng, 2), n)};
      levels.levels.push_back(intersectTrees(parts));
    }
    const RegularTree k = syncIntersection(h, levels, f);
    bool good = isHechlerModF(k, f);
    for (const Sequence& v : nodesToDepth(k, 5)) {
      ++nodes;
      const PeriodicSet s = k.successorSet(v);
      if (!h.contains(v) || !isSubset(s, h.successorSet(v))) good = false;
      for (const RegularTree& t : levels.levels) {
        if (!t.contains(v) || !isSubset(s, t.successorSet(v))) good = false;
      }
      if (!good) break;
    }
    intersectOk += good;
    if (!good && problem.empty()) problem = "intersection trial " + std::to_string(trial);
  }
  const std::string detail = "union " + std::to_string(unionOk) + "/100, intersection " +
                             std::to_string(intersectOk) + "/100 hechler with containment (" +
                             std::to_string(nodes) + " nodes to depth 5)";
  return unionOk == 100 && intersectOk == 100 ? pass(detail) : fail(detail + "; " + problem);
}

bool subsequencesInside(const RegularTree& t, const Sequence& x, std::size_t& checked) {
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << x.size()); ++mask) {
    Sequence code;
    std::optional<Natural> prev;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!((mask >> i) & 1u)) continue;
      code.push_back(prev ? x[i] - *prev - 1 : x[i]);
      prev = x[i];
    }
    ++checked;
    if (!oracleContains(t, code)) return false;
  }
  return true;
}

Result rangeProposition() {
  Rng rng(1006);
  std::vector<RegularTree> trees{fromThreshold(ThresholdFunction::constant(2))};
  for (int i = 0; i < 4; ++i) trees.push_back(randomHechlerTree(rng, 4));
  std::size_t good = 0;
  double worst = 0;
  std::size_t checked = 0;
  for (const RegularTree& t : trees) {
    Filter f = Filter::frechet();
    const auto start = Clock::now();
    const Sequence x = extractHomogeneousPrefix(t, f, 12);
    std::size_t count = 0;
    const bool inside = subsequencesInside(t, x, count);
    worst = std::max(worst, secondsSince(start));
    checked += count;
    good += inside && count == 4095 && x.size() == 12;
  }
  const std::string detail = std::to_string(good) + "/" + std::to_string(trees.size()) +
                             " trees with all 4095 subsequences inside (" +
                             std::to_string(checked) + " checked), slowest " +
                             fixed(worst) + " s";
  return good == trees.size() && worst < 5 ? pass(detail) : fail(detail);
}

Result silverDeskScale() {
  const PairAutomaton parity({
      AutState{"s0", {AutRule{PeriodicSet::all(), PeriodicSet::all(), 1}}},
      AutState{"s1", {AutRule{PeriodicSet::residue(2, 1), PeriodicSet::all(), 2}}},
      AutState{"acc", {AutRule{PeriodicSet::all(), PeriodicSet::all(), 2}}},
  });
  const PairAutomaton mod3({
      AutState{"s0", {AutRule{PeriodicSet::all(), PeriodicSet::all(), 1}}},
      AutState{"s1", {AutRule{PeriodicSet::all(), PeriodicSet::all(), 2}}},
      AutState{"s2", {AutRule{PeriodicSet::residue(3, 2), PeriodicSet::all(), 3}}},
      AutState{"acc", {AutRule{PeriodicSet::all(), PeriodicSet::all(), 3}}},
  });
  std::string detail;
  bool ok = true;
  // Colour by direct arithmetic on the last gap.
  auto check = [&](const PairAutomaton& c, std::size_t d, Natural modulus, Natural residue,
                   std::size_t expectedSubsets, const char* name) {
    const HomogeneousReport r = silverExtract(c, d, 10);
    std::size_t mono = 0, subsets = 0;
    const bool want = r.side == Side::inA;
    std::vector<std::size_t> pick(d);
    for (std::size_t i = 0; i < d; ++i) pick[i] = i;
    for (;;) {
      const Natural gap = r.x[pick[d - 1]] - r.x[pick[d - 2]] - 1;
      ++subsets;
      mono += ((gap % modulus == residue) == want);
      std::size_t i = d;
      while (i > 0 && pick[i - 1] == 10 - d + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    Filter again = Filter::replay(r.filter.seed, r.filter.decisions);
    const bool replay = silverExtract(c, d, 10, again).x == r.x;
    ok = ok && r.x.size() == 10 && subsets == expectedSubsets && mono == subsets && replay &&
         r.subsetsChecked == expectedSubsets;
    if (!detail.empty()) detail += "; ";
    detail += std::string(name) + " X=" + to_string(r.x) + " " + to_string(r.side) + ", " +
              std::to_string(mono) + "/" + std::to_string(subsets) + " monochromatic, replay " +
              (replay ? "identical" : "DIFFERENT");
  };
  check(parity, 2, 2, 1, 45, "gap parity");
  check(mod3, 3, 3, 2, 120, "gap mod 3");
  return ok ? pass(detail) : fail(detail);
}

Sequence randomWord(Rng& rng, std::size_t minLength, Natural bound) {
  Sequence w(minLength + rng.below(3));
  for (auto& a : w) a = rng.below(bound);
  return w;
}

template <class Play>
bool movesAgree(Rng& rng, Play play) {
  for (int i = 0; i < 20; ++i) {
    if (!play(rng)) return false;
  }
  return true;
}

Result gameEngine() {
  Rng rng(1008);
  std::size_t iMatches = 0, iWins = 0, iiMatches = 0, iiWins = 0, alive = 0;
  std::size_t candidates = 0;
  while (iMatches < 500 || iiMatches < 100) {
    if (++candidates > 100000) break;
    const PairAutomaton p = randomAutomaton(rng, 5, 4);
    const auto cert = solve(p, Filter::frechet());
    if (cert.verdict == Verdict::hechlerMiss && iMatches < 500) {
      auto I = g1StrategyFromHechler(cert.tree);
      for (int k = 0; k < 10 && iMatches < 500; ++k) {
        LassoStrategy II(GameKind::game1, Lasso(randomWord(rng, 0, 6), randomWord(rng, 1, 6)));
        const auto t = playMatch(GameKind::game1, *I, II, p, {});
        ++iMatches;
        iWins += t.outcome == Outcome::iWins &&
                 t.rounds.size() <= cert.coranks.entries[0].corank;
      }
    } else if (cert.verdict == Verdict::laverInside && iiMatches < 100) {
      auto II = g1StrategyIIFromLaver(cert.tree);
      for (int k = 0; k < 5 && iiMatches < 100; ++k) {
        std::vector<Challenge> stem, cycle(1 + rng.below(3));
        for (std::size_t j = rng.below(3); j > 0; --j) stem.push_back(Challenge{rng.below(9)});
        for (auto& c : cycle) c = Challenge{rng.below(9)};
        LassoStrategy I(GameKind::game1, stem, cycle);
        // Without cycle detection the play must stay live to the budget.
        MatchOptions longRun{.budget = 200};
        ScriptedStrategy unrolled(GameKind::game1, Role::I, {});
        std::vector<Challenge> moves;
        for (std::size_t j = 0; j < 200; ++j) {
          moves.push_back(j < stem.size() ? stem[j] : cycle[(j - stem.size()) % cycle.size()]);
        }
        ScriptedStrategy scripted(GameKind::game1, Role::I, moves);
        const auto live = playMatch(GameKind::game1, scripted, *II, p, longRun);
        alive += live.outcome == Outcome::undecidedAtBudget && live.rounds.size() == 200;
        const auto t = playMatch(GameKind::game1, I, *II, p, {.budget = 100000});
        ++iiMatches;
        iiWins += t.outcome == Outcome::iiWins;
      }
    }
  }

  // Strategy/tree roundtrips, compared move by move to depth 6.
  std::size_t roundtrips[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 25; ++trial) {
    const RegularTree h = randomHechlerTree(rng, 4);
    const RegularTree l = randomLaverTree(rng, 4);
    auto s1 = g1StrategyFromHechler(h);
    auto s1back = g1StrategyFromHechler(g1HechlerFromStrategy(*s1, 6));
    roundtrips[0] += movesAgree(rng, [&](Rng& r) {
      std::vector<Round> played;
      for (std::size_t k = 0; k < 6; ++k) {
        const auto c = s1->challenge(played);
        if (!c || s1back->challenge(played) != c) return false;
        played.push_back(Round{*c, std::get<Natural>(*c) + 1 + r.below(4)});
      }
      return true;
    });
    auto s2 = g1StrategyIIFromLaver(l);
    auto s2back = g1StrategyIIFromLaver(g1LaverFromStrategyII(*s2));
    roundtrips[1] += movesAgree(rng, [&](Rng& r) {
      std::vector<Round> played;
      for (std::size_t k = 0; k < 6; ++k) {
        const Challenge c{r.below(12)};
        const auto a = s2->answer(played, c);
        if (!a || s2back->answer(played, c) != a) return false;
        played.push_back(Round{c, *a});
      }
      return true;
    });
    auto s3 = g2StrategyFromLaverI(l);
    auto s3back = g2StrategyFromLaverI(g2LaverFromStrategyI(*s3));
    roundtrips[2] += movesAgree(rng, [&](Rng& r) {
      std::vector<Round> played;
      for (std::size_t k = 0; k < 6; ++k) {
        const auto c = s3->challenge(played);
        if (!c || s3back->challenge(played) != c) return false;
        played.push_back(Round{*c, enumerate(std::get<PeriodicSet>(*c), r.below(4))});
      }
      return true;
    });
    auto s4 = g2StrategyIIFromHechler(h);
    const auto tree4 = g2HechlerFromStrategyII(*s4);
    if (!std::holds_alternative<RegularTree>(tree4)) continue;
    auto s4back = g2StrategyIIFromHechler(std::get<RegularTree>(tree4));
    roundtrips[3] += movesAgree(rng, [&](Rng& r) {
      std::vector<Round> played;
      for (std::size_t k = 0; k < 6; ++k) {
        const Challenge c{randomInfiniteSet(r, 4, 4)};
        const auto a = s4->answer(played, c);
        if (!a || s4back->answer(played, c) != a) return false;
        played.push_back(Round{c, *a});
      }
      return true;
    });
  }
  const std::string detail =
      "hechlerMiss strategies " + std::to_string(iWins) + "/" + std::to_string(iMatches) +
      " iWins within the corank bound; laverInside strategies " + std::to_string(iiWins) +
      "/" + std::to_string(iiMatches) + " iiWins, " + std::to_string(alive) +
      " live after 200 rounds; roundtrips " + std::to_string(roundtrips[0]) + "/" +
      std::to_string(roundtrips[1]) + "/" + std::to_string(roundtrips[2]) + "/" +
      std::to_string(roundtrips[3]) + " of 25";
  const bool ok = iMatches == 500 && iWins == 500 && iiMatches == 100 && iiWins == 100 &&
                  alive == 100 && roundtrips[0] == 25 && roundtrips[1] == 25 &&
                  roundtrips[2] == 25 && roundtrips[3] == 25;
  return ok ? pass(detail) : fail(detail);
}

Result filters() {
  Rng rng(1009);
  Filter u = Filter::lazyUltra();
  std::vector<PeriodicSet> accepted;
  std::size_t conflicts = 0, finiteKernels = 0;
  for (int i = 0; i < 1000; ++i) {
    const PeriodicSet s = randomSet(rng, 5, 6);
    const bool in = u.inFilter(s);
    if (in == u.inFilter(complement(s))) ++conflicts;
    if (!u.kernel().infinite()) ++finiteKernels;
    if (in) accepted.push_back(s);
  }
  // Finite intersection property on random triples of accepted sets.
  std::size_t fipFailures = 0;
  for (int i = 0; i < 1000 && !accepted.empty(); ++i) {
    PeriodicSet meet = PeriodicSet::all();
    for (int k = 0; k < 3; ++k) meet = intersect(meet, accepted[rng.below(accepted.size())]);
    if (!meet.infinite()) ++fipFailures;
  }

  // Density filter axioms, with membership judged on a bitmap: a set is in
  // the filter iff its complement vanishes on [2048, 4096).
  Filter d = Filter::density();
  auto oracle = [](const PeriodicSet& s) {
    const auto bits = bitmap(s, 4096);
    for (std::size_t n = 2048; n < 4096; ++n) {
      if (!bits[n]) return false;
    }
    return true;
  };
  std::size_t axiomFailures = 0;
  if (d.inFilter(PeriodicSet::none()) || !d.inFilter(PeriodicSet::all())) ++axiomFailures;
  for (int i = 0; i < 1000; ++i) {
    const PeriodicSet a = rng.coin() ? randomCofinite(rng) : randomSet(rng, 5, 6);
    const PeriodicSet b = rng.coin() ? randomCofinite(rng) : randomSet(rng, 5, 6);
    const bool ina = d.inFilter(a), inb = d.inFilter(b);
    if (ina != oracle(a) || inb != oracle(b)) ++axiomFailures;
    if (ina && inb && !d.inFilter(intersect(a, b))) ++axiomFailures;
    if (ina && !d.inFilter(unite(a, b))) ++axiomFailures;
    if (d.isPositive(a) != !d.inFilter(complement(a))) ++axiomFailures;
    if (ina && !d.isPositive(a)) ++axiomFailures;
  }
  const std::string detail = "ultrafilter: " + std::to_string(conflicts) +
                             " complement conflicts, " + std::to_string(finiteKernels) +
                             " finite kernels, " + std::to_string(fipFailures) +
                             " intersection failures over 1000 queries; density: " +
                             std::to_string(axiomFailures) + " axiom failures over 1000 pairs";
  return conflicts + finiteKernels + fipFailures + axiomFailures == 0 ? pass(detail)
                                                                      : fail(detail);
}

Result repl() {
  const PairAutomaton odd({
      AutState{"q0", {AutRule{fin({1, 3, 5}), PeriodicSet::all(), 1}}},
      AutState{"q1", {AutRule{PeriodicSet::all(), PeriodicSet::all(), 1}}},
  });
  const PairAutomaton even({
      AutState{"q0", {AutRule{PeriodicSet::residue(2, 0), PeriodicSet::all(), 1}}},
      AutState{"q1", {AutRule{PeriodicSet::all(), PeriodicSet::all(), 1}}},
  });
  auto session = [](const PairAutomaton& p, Role human, Strategy& machine,
                    const std::string& script) {
    std::istringstream in(script);
    std::ostringstream out;
    const GameTranscript t = interactiveSession(GameKind::game1, human, p, machine, in, out,
                                                20, false, true);
    return std::make_pair(t, out.str());
  };

  Rng rng(1010);
  auto I = g1StrategyFromHechler(solve(odd, Filter::frechet()).tree);
  auto II = g1StrategyIIFromLaver(solve(even, Filter::frechet()).tree);

  // Replays: a session rerun from its own transcript prints the same bytes.
  std::size_t replays = 0, identical = 0;
  for (int i = 0; i < 50; ++i) {
    std::string script;
    for (std::size_t k = 0, n = 1 + rng.below(6); k < n; ++k) {
      script += std::to_string(rng.below(12)) + "\n";
    }
    const bool humanIsII = i % 2 == 0;
    Strategy& machine = humanIsII ? static_cast<Strategy&>(*I) : *II;
    const PairAutomaton& p = humanIsII ? odd : even;
    const Role role = humanIsII ? Role::II : Role::I;
    const auto [t1, log1] = session(p, role, machine, script);
    const auto [t2, log2] = session(p, role, machine, scriptFor(t1, role));
    const auto [t3, log3] = session(p, role, machine, script);
    ++replays;
    const auto tail = [](const std::string& log) { return log.substr(log.rfind("outcome:")); };
    identical += log1 == log3 && t1 == t2 && tail(log1) == tail(log2);
  }

  // Illegal moves are rejected and re-prompted.
  const auto [ti, logi] = session(odd, Role::II, *I, "2\nfive\n5\n6\n");
  const bool rejected = ti.outcome == Outcome::iWins && ti.rounds.size() == 1 &&
                        ti.rounds[0].answer == 6 &&
                        logi.find("illegal move: 2 does not exceed 5") != std::string::npos &&
                        logi.find("not a move") != std::string::npos;

  // Any human input loses within two rounds, unless it runs out before a
  // legal move (the session then stops undecided with no rounds played).
  std::size_t games = 0, quick = 0, silent = 0;
  for (int i = 0; i < 500; ++i) {
    std::string script;
    for (std::size_t k = 0, n = rng.below(4); k < n; ++k) {
      switch (rng.below(3)) {
        case 0: script += std::to_string(rng.below(6)) + "\n"; break;
        case 1: script += "x" + std::to_string(rng.below(9)) + "\n"; break;
        default: script += "\n"; break;
      }
    }
    for (std::size_t k = 0, n = 1 + rng.below(3); k < n; ++k) {
      script += std::to_string(rng.below(40)) + "\n";
    }
    const auto [t, log] = session(odd, Role::II, *I, script);
    ++games;
    quick += t.outcome == Outcome::iWins && t.rounds.size() <= 2;
    silent += t.outcome == Outcome::undecidedAtBudget && t.rounds.empty();
  }
  const std::string detail = std::to_string(identical) + "/" + std::to_string(replays) +
                             " sessions replay identically; illegal input " +
                             (rejected ? "rejected and re-prompted" : "NOT handled") + "; " +
                             std::to_string(quick) + "/" + std::to_string(games) +
                             " odd-start sessions end iWins within 2 rounds, the other " +
                             std::to_string(silent) + " ran out of input before a legal move";
  return identical == replays && rejected && quick + silent == games && quick > 0
             ? pass(detail)
             : fail(detail);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Result (*)()>> criteria{
      {"1 dichotomy agrees with backward induction", dichotomyOracle},
      {"2 certificate soundness", certificateSoundness},
      {"3 corank descent", corankDescent},
      {"4 exclusivity", exclusivity},
      {"5 lemma combinators", lemmaCombinators},
      {"6 range proposition, N=12", rangeProposition},
      {"7 Silver at desk scale", silverDeskScale},
      {"8 game engine", gameEngine},
      {"9 filters", filters},
      {"10 interactive sessions", repl},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << name << ": " << r.detail << std::endl;
    failures += !r.pass;
  }
  return failures == 0 ? 0 : 1;
}
