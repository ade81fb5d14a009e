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

#include "hechler/dichotomy.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace hechler {
namespace {

struct ConfigGraph {
  std::vector<WitnessConfig> configs;
  std::vector<std::vector<std::size_t>> succ;  // succ[i][cell]
};

ConfigGraph explore(const PairAutomaton& p) {
  ConfigGraph g;
  std::map<WitnessConfig, std::size_t> index;
  auto intern = [&](WitnessConfig c) {
    auto [it, fresh] = index.emplace(c, g.configs.size());
    if (fresh) g.configs.push_back(c);
    return it->second;
  };
  intern(p.initialConfig());
  for (std::size_t i = 0; i < g.configs.size(); ++i) {
    std::vector<std::size_t> row;
    for (std::size_t k = 0; k < p.cells().size(); ++k) {
      row.push_back(intern(p.stepByCell(g.configs[i], k)));
    }
    g.succ.push_back(std::move(row));
  }
  return g;
}

// Tree over the configurations selected by `keep`, following the cells that
// `allowed` admits at each configuration.
template <typename Allowed>
RegularTree configTree(const PairAutomaton& p, const CorankMap& coranks,
                       Allowed allowed) {
  std::map<std::size_t, std::size_t> stateOf;  // entry index -> tree state
  std::vector<std::size_t> order;
  std::vector<TreeState> states;
  auto intern = [&](std::size_t entry) {
    auto [it, fresh] = stateOf.emplace(entry, states.size());
    if (fresh) {
      order.push_back(entry);
      states.push_back(TreeState{configName(entry), {}});
    }
    return it->second;
  };
  intern(0);
  for (std::size_t s = 0; s < states.size(); ++s) {
    const std::size_t entry = order[s];
    const WitnessConfig c = coranks.entries[entry].config;
    // Group admitted cells by target, in order of first appearance.
    std::vector<std::pair<std::size_t, PeriodicSet>> groups;
    for (std::size_t k = 0; k < p.cells().size(); ++k) {
      const std::size_t target = *coranks.find(p.stepByCell(c, k));
      if (!allowed(entry, target)) continue;
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& g) { return g.first == target; });
      if (it == groups.end()) {
        groups.emplace_back(target, p.cells()[k]);
      } else {
        it->second = unite(it->second, p.cells()[k]);
      }
    }
    for (auto& [target, guard] : groups) {
      const std::size_t t = intern(target);
      states[s].rules.push_back({std::move(guard), t});
    }
  }
  return RegularTree(std::move(states));
}

}  // namespace

const char* to_string(Verdict v) {
  return v == Verdict::hechlerMiss ? "hechlerMiss" : "laverInside";
}

std::optional<std::size_t> CorankMap::find(WitnessConfig c) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].config == c) return i;
  }
  return std::nullopt;
}

const ConfigEntry& CorankMap::at(WitnessConfig c) const {
  auto i = find(c);
  if (!i) throw Error("corank map: configuration not present");
  return entries[*i];
}

CorankMap computeGfp(const PairAutomaton& p, Filter& f) {
  const ConfigGraph g = explore(p);
  const std::size_t n = g.configs.size();

  CorankMap out;
  out.entries.resize(n);
  std::vector<bool> inW(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.entries[i].config = g.configs[i];
    inW[i] = !g.configs[i].dead();
  }

  // Phi is applied to the whole current level at once, so the level at which
  // a configuration drops out is its corank.
  for (std::size_t level = 1;; ++level) {
    ++out.iterations;
    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < n; ++i) {
      if (!inW[i]) continue;
      PeriodicSet stay;
      for (std::size_t k = 0; k < p.cells().size(); ++k) {
        if (inW[g.succ[i][k]]) stay = unite(stay, p.cells()[k]);
      }
      if (!f.isPositive(stay)) drop.push_back(i);
    }
    if (drop.empty()) break;
    for (std::size_t i : drop) {
      inW[i] = false;
      out.entries[i].corank = level;
    }
  }
  for (std::size_t i = 0; i < n; ++i) out.entries[i].inGfp = inW[i];
  return out;
}

RegularTree extractHechler(const PairAutomaton& p, Filter& f,
                           const CorankMap& coranks) {
  (void)f;
  if (coranks.entries.at(0).inGfp) {
    throw Error("extractHechler: initial configuration is in the fixpoint");
  }
  return configTree(p, coranks, [&](std::size_t from, std::size_t to) {
    const ConfigEntry& a = coranks.entries[from];
    const ConfigEntry& b = coranks.entries[to];
    if (a.config.dead()) return true;
    return !b.inGfp && b.corank < a.corank;
  });
}

RegularTree extractLaver(const PairAutomaton& p, Filter& f,
                         const CorankMap& coranks) {
  (void)f;
  if (!coranks.entries.at(0).inGfp) {
    throw Error("extractLaver: initial configuration is not in the fixpoint");
  }
  return configTree(p, coranks, [&](std::size_t, std::size_t to) {
    return coranks.entries[to].inGfp;
  });
}

FilterRecord recordOf(const Filter& f) {
  return FilterRecord{f.kind(), f.seed(), f.decisionLog()};
}

Filter replayFilter(const FilterRecord& record) {
  switch (record.kind) {
    case FilterKind::frechet: return Filter::frechet();
    case FilterKind::density: return Filter::density();
    case FilterKind::lazyUltra: return Filter::replay(record.seed, record.decisions);
  }
  throw Error("unknown filter kind");
}

std::uint64_t instanceHash(const PairAutomaton& p) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : to_string(p)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

DichotomyCertificate solveDichotomy(const PairAutomaton& p, Filter& f) {
  CorankMap coranks = computeGfp(p, f);
  const bool inside = coranks.entries[0].inGfp;
  RegularTree tree = inside ? extractLaver(p, f, coranks)
                            : extractHechler(p, f, coranks);
  // Postcondition, and it logs every query a checker will replay.
  const bool classified = inside ? isLaverModF(tree, f) : isHechlerModF(tree, f);
  if (!classified) {
    throw Error("solveDichotomy: extracted tree fails its classification");
  }
  return DichotomyCertificate{
      inside ? Verdict::laverInside : Verdict::hechlerMiss,
      p,
      instanceHash(p),
      recordOf(f),
      std::move(coranks),
      std::move(tree),
  };
}

std::string configName(std::size_t i) { return "c" + std::to_string(i); }

std::size_t configIndex(const DichotomyCertificate& cert, std::size_t state) {
  const std::string& name = cert.tree.state(state).name;
  for (std::size_t i = 0; i < cert.coranks.entries.size(); ++i) {
    if (configName(i) == name) return i;
  }
  throw Error("certificate: tree state '" + name + "' names no configuration");
}

CheckReport checkCertificate(const DichotomyCertificate& cert,
                             std::size_t samples, std::uint64_t seed,
                             const PairAutomaton* expected) {
  const PairAutomaton& p = cert.instance;
  if (expected && instanceHash(*expected) != cert.instanceHash) {
    throw Error("certificate was issued for a different instance");
  }

  CheckReport report;
  auto violation = [&](std::string what) {
    report.violations.push_back(std::move(what));
  };
  if (instanceHash(p) != cert.instanceHash) {
    violation("instance hash does not match the embedded instance");
  }

  std::optional<Filter> filter;
  try {
    filter = replayFilter(cert.filter);
    filter->freeze();
  } catch (const Error& e) {
    violation(std::string("filter log: ") + e.what());
  }

  const RegularTree& t = cert.tree;
  const bool hechler = cert.verdict == Verdict::hechlerMiss;
  if (!t.root().empty()) violation("certificate tree must be unrooted");

  std::vector<std::size_t> entryOf(t.size());
  for (std::size_t s = 0; s < t.size(); ++s) {
    try {
      entryOf[s] = configIndex(cert, s);
    } catch (const Error& e) {
      violation(e.what());
      return report;
    }
  }
  auto entry = [&](std::size_t s) -> const ConfigEntry& {
    return cert.coranks.entries[entryOf[s]];
  };
  if (entry(0).config != p.initialConfig()) {
    violation("tree's initial state is not the initial configuration");
  }

  for (std::size_t s = 0; s < t.size(); ++s) {
    const ConfigEntry& from = entry(s);
    const std::string& name = t.state(s).name;
    for (const auto& r : t.state(s).rules) {
      const ConfigEntry& to = entry(r.next);
      for (std::size_t k = 0; k < p.cells().size(); ++k) {
        if (intersect(p.cells()[k], r.guard).empty()) continue;
        if (p.stepByCell(from.config, k) != to.config) {
          violation("transition " + name + " -> " + t.state(r.next).name +
                    " disagrees with the automaton on cell " +
                    to_string(p.cells()[k]));
        }
      }
      if (hechler && !from.config.dead() &&
          (to.inGfp || to.corank >= from.corank)) {
        violation("corank does not descend along " + name + " -> " +
                  t.state(r.next).name);
      }
    }
    if (hechler) {
      if (from.inGfp) violation(name + " is a fixpoint configuration");
      if (from.config.dead() != (from.corank == 0)) {
        violation(name + " has corank 0 iff it is dead, violated");
      }
    } else if (!from.inGfp || from.config.dead()) {
      violation(name + " is outside the fixpoint");
    }
  }

  if (filter) {
    try {
      const bool classified =
          hechler ? isHechlerModF(t, *filter) : isLaverModF(t, *filter);
      if (!classified) {
        violation(std::string("tree does not classify ") +
                  (hechler ? "hechler" : "laver") + " mod " + filter->describe());
      }
    } catch (const Filter::UnloggedQuery& e) {
      violation(e.what());
    }
  }

  for (std::size_t i = 0; i < samples; ++i) {
    BranchSample b;
    try {
      b = sampleBranch(t, SampleScheme::lasso, 0, seed + i);
    } catch (const Error& e) {
      violation(std::string("sampling: ") + e.what());
      break;
    }
    ++report.samplesChecked;
    if (memberLasso(p, *b.lasso) == hechler) {
      violation("sampled branch " + to_string(b.lasso->stem()) + "(" +
                to_string(b.lasso->cycle()) + ")^w is " +
                (hechler ? "inside" : "outside") + " the set");
      break;
    }
  }
  return report;
}

}  // namespace hechler
