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

#include "hechler/presentations.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace hechler {
namespace {

void dropEmptyGuards(std::vector<AutState>& states) {
  for (auto& s : states) {
    std::erase_if(s.rules, [](const AutRule& r) {
      return r.x.empty() || r.y.empty();
    });
  }
}

std::vector<bool> reachable(const std::vector<AutState>& states) {
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

std::vector<PeriodicSet> refineCells(const std::vector<AutState>& states) {
  std::set<PeriodicSet> guards;
  for (const auto& s : states) {
    for (const auto& r : s.rules) guards.insert(r.x);
  }
  std::vector<PeriodicSet> cells{PeriodicSet::all()};
  for (const auto& g : guards) {
    std::vector<PeriodicSet> refined;
    for (const auto& c : cells) {
      PeriodicSet in = intersect(c, g);
      PeriodicSet out = difference(c, g);
      if (!in.empty()) refined.push_back(std::move(in));
      if (!out.empty()) refined.push_back(std::move(out));
    }
    cells = std::move(refined);
  }
  std::sort(cells.begin(), cells.end(),
            [](const PeriodicSet& a, const PeriodicSet& b) {
              return *minElement(a) < *minElement(b);
            });
  return cells;
}

}  // namespace

PairAutomaton::PairAutomaton(std::vector<AutState> states)
    : states_(std::move(states)) {
  if (states_.empty()) throw Error("automaton: no states");
  if (states_.size() > WitnessConfig::kMaxStates) {
    throw Error("automaton: more than 64 states");
  }
  dropEmptyGuards(states_);

  std::set<std::string> names;
  for (const auto& s : states_) {
    if (s.name.empty()) throw Error("automaton: empty state name");
    if (!names.insert(s.name).second) {
      throw Error("automaton: duplicate state name '" + s.name + "'");
    }
    for (const auto& r : s.rules) {
      if (r.next >= states_.size()) {
        throw Error("automaton: state '" + s.name +
                    "' has a rule to a missing state");
      }
    }
  }
  const auto seen = reachable(states_);
  for (std::size_t q = 0; q < states_.size(); ++q) {
    if (!seen[q]) {
      throw Error("automaton: state '" + states_[q].name + "' is unreachable");
    }
  }

  cells_ = refineCells(states_);
  for (const auto& c : cells_) reps_.push_back(*minElement(c));
  table_.assign(states_.size() * cells_.size(), WitnessConfig());
  for (std::size_t q = 0; q < states_.size(); ++q) {
    for (std::size_t k = 0; k < cells_.size(); ++k) {
      WitnessConfig out;
      for (const auto& r : states_[q].rules) {
        if (r.x.contains(reps_[k])) out |= WitnessConfig::single(r.next);
      }
      table_[q * cells_.size() + k] = out;
    }
  }
}

PairAutomaton PairAutomaton::pruned(std::vector<AutState> states) {
  if (states.empty()) throw Error("automaton: no states");
  dropEmptyGuards(states);
  const auto seen = reachable(states);
  std::vector<std::size_t> remap(states.size(), 0);
  std::vector<AutState> kept;
  for (std::size_t q = 0; q < states.size(); ++q) {
    if (seen[q]) {
      remap[q] = kept.size();
      kept.push_back(std::move(states[q]));
    }
  }
  for (auto& s : kept) {
    for (auto& r : s.rules) r.next = remap[r.next];
  }
  return PairAutomaton(std::move(kept));
}

std::size_t PairAutomaton::cellOf(Natural a) const {
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (cells_[k].contains(a)) return k;
  }
  throw Error("automaton: cells do not cover " + std::to_string(a));
}

WitnessConfig PairAutomaton::stepByCell(WitnessConfig c, std::size_t cell) const {
  WitnessConfig out;
  for (std::size_t q = 0; q < states_.size(); ++q) {
    if (c.contains(q)) out |= table_[q * cells_.size() + cell];
  }
  return out;
}

WitnessConfig PairAutomaton::stepCommitted(WitnessConfig c, Natural a,
                                           Natural b) const {
  WitnessConfig out;
  for (std::size_t q = 0; q < states_.size(); ++q) {
    if (!c.contains(q)) continue;
    for (const auto& r : states_[q].rules) {
      if (r.x.contains(a) && r.y.contains(b)) out |= WitnessConfig::single(r.next);
    }
  }
  return out;
}

std::string PairAutomaton::describe(WitnessConfig c) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t q = 0; q < states_.size(); ++q) {
    if (!c.contains(q)) continue;
    if (!first) out += ",";
    out += states_[q].name;
    first = false;
  }
  return out + "}";
}

WitnessConfig stepWitness(const PairAutomaton& p, WitnessConfig c, Natural a) {
  return p.step(c, a);
}

WitnessConfig residual(const PairAutomaton& p, std::span<const Natural> s,
                       std::span<const Natural> t) {
  if (t.size() > s.size()) {
    throw Error("residual: committed y prefix longer than x prefix");
  }
  WitnessConfig c = p.initialConfig();
  for (std::size_t i = 0; i < s.size(); ++i) {
    c = i < t.size() ? p.stepCommitted(c, s[i], t[i]) : p.step(c, s[i]);
  }
  return c;
}

bool memberLasso(const PairAutomaton& p, const Lasso& x) {
  WitnessConfig c = p.initialConfig();
  for (Natural a : x.stem()) {
    c = p.step(c, a);
    if (c.dead()) return false;
  }
  // Configurations at cycle boundaries evolve deterministically in a finite
  // space, so a repeat means the run never dies.
  std::set<WitnessConfig> boundaries;
  while (boundaries.insert(c).second) {
    for (Natural a : x.cycle()) {
      c = p.step(c, a);
      if (c.dead()) return false;
    }
  }
  return true;
}

Sequence witnessForBranch(const PairAutomaton& p, std::span<const Natural> x) {
  std::vector<WitnessConfig> configs{p.initialConfig()};
  for (std::size_t i = 0; i < x.size(); ++i) {
    configs.push_back(p.step(configs.back(), x[i]));
    if (configs.back().dead()) {
      throw Error("witnessForBranch: configuration dies at step " +
                  std::to_string(i));
    }
  }

  auto leastState = [&](WitnessConfig c) {
    return static_cast<std::size_t>(std::countr_zero(c.bits()));
  };
  Sequence y(x.size());
  std::size_t target = leastState(configs.back());
  for (std::size_t i = x.size(); i-- > 0;) {
    bool found = false;
    for (std::size_t q = 0; q < p.size() && !found; ++q) {
      if (!configs[i].contains(q)) continue;
      for (const auto& r : p.states()[q].rules) {
        if (r.next == target && r.x.contains(x[i])) {
          y[i] = *minElement(r.y);
          target = q;
          found = true;
          break;
        }
      }
    }
    if (!found) throw Error("witnessForBranch: no predecessor run");
  }
  return y;
}

std::string to_string(const PairAutomaton& p, std::size_t indent) {
  std::string out = "(aut";
  const std::string pad(indent + 2, ' ');
  for (const auto& s : p.states()) {
    out += "\n" + pad + "(state " + s.name;
    for (const auto& r : s.rules) {
      out += " (rule (x " + to_string(r.x) + ") (y " + to_string(r.y) + ") " +
             p.states()[r.next].name + ")";
    }
    out += ")";
  }
  return out + ")";
}

}  // namespace hechler
