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

#include "support/support.hpp"

#include <map>

namespace hechler::testing {

std::vector<bool> bitmap(const PeriodicSet& s, std::size_t length) {
  std::vector<bool> out(length);
  const auto& pre = s.prefix();
  const auto& per = s.period();
  for (std::size_t n = 0; n < length; ++n) {
    out[n] = n < pre.size() ? pre[n] : per[(n - pre.size()) % per.size()];
  }
  return out;
}

namespace {

PeriodicSet::Bits randomBits(Rng& rng, std::size_t length) {
  PeriodicSet::Bits bits(length);
  for (std::size_t i = 0; i < length; ++i) bits[i] = rng.coin();
  return bits;
}

}  // namespace

PeriodicSet randomSet(Rng& rng, std::size_t maxPrefix, std::size_t maxPeriod) {
  auto prefix = randomBits(rng, rng.below(maxPrefix + 1));
  auto period = randomBits(rng, 1 + rng.below(maxPeriod));
  return PeriodicSet::normalize(std::move(prefix), std::move(period));
}

PeriodicSet randomInfiniteSet(Rng& rng, std::size_t maxPrefix,
                              std::size_t maxPeriod) {
  auto prefix = randomBits(rng, rng.below(maxPrefix + 1));
  auto period = randomBits(rng, 1 + rng.below(maxPeriod));
  period[rng.below(period.size())] = true;
  return PeriodicSet::normalize(std::move(prefix), std::move(period));
}

PeriodicSet randomCofinite(Rng& rng, std::size_t maxMissing) {
  Sequence missing;
  for (Natural n = 0; n <= maxMissing; ++n) {
    if (rng.below(3) == 0) missing.push_back(n);
  }
  return PeriodicSet::cofinite(missing);
}

PairAutomaton randomAutomaton(Rng& rng, std::size_t maxStates,
                              std::size_t maxPeriod) {
  const std::size_t n = 1 + rng.below(maxStates);
  std::vector<AutState> states(n);
  for (std::size_t q = 0; q < n; ++q) {
    states[q].name = "q" + std::to_string(q);
    const std::size_t rules = rng.below(3);
    for (std::size_t r = 0; r < rules; ++r) {
      AutRule rule;
      switch (rng.below(6)) {
        case 0: rule.x = PeriodicSet::all(); break;
        case 1: rule.x = randomCofinite(rng, 4); break;
        case 2: rule.x = PeriodicSet::finite({rng.below(5), rng.below(5)}); break;
        default: rule.x = randomSet(rng, 3, maxPeriod); break;
      }
      rule.y = rng.coin() ? PeriodicSet::all()
                          : PeriodicSet::finite({rng.below(3)});
      rule.next = rng.below(n);
      states[q].rules.push_back(std::move(rule));
    }
  }
  // Chain the states so most of them stay reachable.
  for (std::size_t q = 1; q < n; ++q) {
    if (rng.below(4) != 0) {
      states[rng.below(q)].rules.push_back(
          AutRule{randomInfiniteSet(rng, 2, maxPeriod), PeriodicSet::all(), q});
    }
  }
  return PairAutomaton::pruned(std::move(states));
}

namespace {

RegularTree randomTree(Rng& rng, std::size_t maxStates, bool cofinite) {
  const std::size_t n = 1 + rng.below(maxStates);
  std::vector<TreeState> states(n);
  for (std::size_t q = 0; q < n; ++q) {
    states[q].name = "t" + std::to_string(q);
    const PeriodicSet succ =
        cofinite ? randomCofinite(rng, 5) : randomInfiniteSet(rng, 3, 4);
    const std::size_t modulus = 1 + rng.below(3);
    for (std::size_t r = 0; r < modulus; ++r) {
      const PeriodicSet guard = intersect(succ, PeriodicSet::residue(modulus, r));
      const std::size_t next = r == 0 && q + 1 < n ? q + 1 : rng.below(n);
      states[q].rules.push_back(TreeRule{guard, next});
    }
  }
  return RegularTree::pruned(std::move(states));
}

}  // namespace

RegularTree randomHechlerTree(Rng& rng, std::size_t maxStates) {
  return randomTree(rng, maxStates, true);
}

RegularTree randomLaverTree(Rng& rng, std::size_t maxStates) {
  return randomTree(rng, maxStates, false);
}

RegularTree delayed(const RegularTree& g, std::size_t n) {
  std::vector<TreeState> states;
  for (std::size_t i = 0; i < n; ++i) {
    states.push_back(TreeState{"d" + std::to_string(i), {TreeRule{PeriodicSet::all(), i + 1}}});
  }
  for (const auto& s : g.states()) {
    TreeState copy{"g." + s.name, {}};
    for (const auto& r : s.rules) copy.rules.push_back({r.guard, r.next + n});
    states.push_back(std::move(copy));
  }
  return RegularTree::pruned(std::move(states));
}

bool oracleContains(const RegularTree& t, const Sequence& u) {
  const Sequence& root = t.root();
  const std::size_t shared = std::min(root.size(), u.size());
  for (std::size_t i = 0; i < shared; ++i) {
    if (root[i] != u[i]) return false;
  }
  if (u.size() <= root.size()) return true;
  std::size_t q = 0;
  for (std::size_t i = root.size(); i < u.size(); ++i) {
    bool moved = false;
    for (const auto& r : t.state(q).rules) {
      if (r.guard.contains(u[i])) {
        q = r.next;
        moved = true;
        break;
      }
    }
    if (!moved) return false;
  }
  return true;
}

std::set<std::size_t> oracleStates(const PairAutomaton& p, const Sequence& x) {
  // Depth-first over runs; a state survives at depth i if some run reaches it.
  std::set<std::pair<std::size_t, std::size_t>> visited;
  std::set<std::size_t> out;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [depth, q] = stack.back();
    stack.pop_back();
    if (!visited.insert({depth, q}).second) continue;
    if (depth == x.size()) {
      out.insert(q);
      continue;
    }
    for (const auto& r : p.states()[q].rules) {
      if (r.x.contains(x[depth]) && !r.y.empty()) stack.push_back({depth + 1, r.next});
    }
  }
  return out;
}

bool oracleMember(const PairAutomaton& p, const Lasso& x) {
  // State sets along the cycle repeat within 2^n cycle passes.
  const std::size_t passes = (std::size_t{1} << p.size()) + 1;
  const std::size_t length = x.stem().size() + passes * x.cycle().size();
  return !oracleStates(p, x.unroll(length)).empty();
}

bool oracleLaverInside(
    const PairAutomaton& p, const std::vector<PeriodicSet>& cells,
    const std::function<bool(const std::vector<std::size_t>&)>& positive) {
  using Config = std::set<std::size_t>;
  std::vector<Natural> reps;
  for (const auto& c : cells) reps.push_back(*minElement(c));

  auto next = [&](const Config& c, std::size_t cell) {
    Config out;
    for (std::size_t q : c) {
      for (const auto& r : p.states()[q].rules) {
        if (r.x.contains(reps[cell]) && !r.y.empty()) out.insert(r.next);
      }
    }
    return out;
  };

  std::set<Config> reachable{Config{0}};
  std::vector<Config> frontier{Config{0}};
  while (!frontier.empty()) {
    Config c = frontier.back();
    frontier.pop_back();
    for (std::size_t k = 0; k < cells.size(); ++k) {
      Config n = next(c, k);
      if (reachable.insert(n).second) frontier.push_back(n);
    }
  }
  const std::size_t depth = reachable.size();

  std::map<std::pair<Config, std::size_t>, bool> memo;
  std::function<bool(const Config&, std::size_t)> value =
      [&](const Config& c, std::size_t d) -> bool {
    if (c.empty()) return false;
    if (d == 0) return true;
    auto key = std::make_pair(c, d);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::size_t> good;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (value(next(c, k), d - 1)) good.push_back(k);
    }
    return memo[key] = positive(good);
  };
  return value(Config{0}, depth);
}

}  // namespace hechler::testing
