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

#include "hechler/text.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace hechler {

namespace {

// Runs f, turning structural errors into parse errors located at e.
template <class F>
auto at(const SExpr& e, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    e.fail(err.what());
  }
}

const SExpr& expectList(const SExpr& e, std::string_view head) {
  if (e.head() != head) e.fail("expected (" + std::string(head) + " ...)");
  return e;
}

Natural expectNumber(const SExpr& e) {
  if (!e.isNumber()) e.fail("expected a natural number");
  return e.number;
}

const std::string& expectName(const SExpr& e) {
  if (!e.isSymbol()) e.fail("expected a name");
  return e.text;
}

Sequence numbers(const SExpr& list, std::size_t from) {
  Sequence out;
  for (std::size_t i = from; i < list.items.size(); ++i) {
    out.push_back(expectNumber(list.items[i]));
  }
  return out;
}

Sequence numberList(const SExpr& e) {
  if (!e.isList()) e.fail("expected a list of naturals");
  return numbers(e, 0);
}

// Name -> index over the (state NAME ...) children of e starting at `from`.
std::map<std::string, std::size_t> stateIndex(const SExpr& e, std::size_t from) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = from; i < e.items.size(); ++i) {
    const SExpr& s = expectList(e.items[i], "state");
    if (s.items.size() < 2) s.fail("state without a name");
    if (!index.emplace(expectName(s.items[1]), index.size()).second) {
      s.items[1].fail("duplicate state name '" + s.items[1].text + "'");
    }
  }
  if (index.empty()) e.fail("no states");
  return index;
}

std::size_t lookup(const std::map<std::string, std::size_t>& index,
                   const SExpr& name) {
  auto it = index.find(expectName(name));
  if (it == index.end()) name.fail("unknown state '" + name.text + "'");
  return it->second;
}

}  // namespace

PeriodicSet parseSet(const SExpr& e) {
  if (e.isSymbol("all")) return PeriodicSet::all();
  if (e.isSymbol("none")) return PeriodicSet::none();
  const std::string_view head = e.head();
  if (head == "fin" || head == "cofin") {
    const Sequence elements = numbers(e, 1);
    return head == "fin" ? PeriodicSet::finite(elements)
                         : PeriodicSet::cofinite(elements);
  }
  if (head == "per") {
    if (e.items.size() != 3 || !e.items[1].isString() || !e.items[2].isString()) {
      e.fail("expected (per \"prefix\" \"period\")");
    }
    return at(e, [&] {
      return PeriodicSet::fromWords(e.items[1].text, e.items[2].text);
    });
  }
  e.fail("expected a set: none, all, (fin ...), (cofin ...) or (per ...)");
}

PeriodicSet parseSetLiteral(std::string_view text) {
  return parseSet(readSExpr(text));
}

RegularTree parseTree(const SExpr& e) {
  expectList(e, "tree");
  std::size_t first = 1;
  Sequence root;
  if (e.items.size() > 1 && e.items[1].head() == "root") {
    root = numbers(e.items[1], 1);
    first = 2;
  }
  const auto index = stateIndex(e, first);
  std::vector<TreeState> states;
  for (std::size_t i = first; i < e.items.size(); ++i) {
    const SExpr& s = e.items[i];
    TreeState state{s.items[1].text, {}};
    for (std::size_t r = 2; r < s.items.size(); ++r) {
      const SExpr& rule = expectList(s.items[r], "rule");
      if (rule.items.size() != 3) rule.fail("expected (rule SET NAME)");
      PeriodicSet guard = parseSet(rule.items[1]);
      const std::size_t next = lookup(index, rule.items[2]);
      state.rules.push_back(TreeRule{std::move(guard), next});
    }
    states.push_back(std::move(state));
  }
  return at(e, [&] { return RegularTree(std::move(states), std::move(root)); });
}

PairAutomaton parseAutomaton(const SExpr& e) {
  expectList(e, "aut");
  const auto index = stateIndex(e, 1);
  std::vector<AutState> states;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& s = e.items[i];
    AutState state{s.items[1].text, {}};
    for (std::size_t r = 2; r < s.items.size(); ++r) {
      const SExpr& rule = expectList(s.items[r], "rule");
      if (rule.items.size() != 4) rule.fail("expected (rule (x SET) (y SET) NAME)");
      const SExpr& x = expectList(rule.items[1], "x");
      const SExpr& y = expectList(rule.items[2], "y");
      if (x.items.size() != 2) x.fail("expected (x SET)");
      if (y.items.size() != 2) y.fail("expected (y SET)");
      // Locals first: GCC 11 leaks aggregate members built before a throw.
      PeriodicSet xs = parseSet(x.items[1]);
      PeriodicSet ys = parseSet(y.items[1]);
      const std::size_t next = lookup(index, rule.items[3]);
      state.rules.push_back(AutRule{std::move(xs), std::move(ys), next});
    }
    states.push_back(std::move(state));
  }
  return at(e, [&] { return PairAutomaton(std::move(states)); });
}

Lasso parseLasso(const SExpr& e) {
  expectList(e, "lasso");
  if (e.items.size() != 3) e.fail("expected (lasso (n...) (n...))");
  Sequence stem = numberList(e.items[1]);
  Sequence cycle = numberList(e.items[2]);
  return at(e, [&] { return Lasso(std::move(stem), std::move(cycle)); });
}

RootedFamily parseFamily(const SExpr& e) {
  expectList(e, "family");
  RootedFamily family;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& item = e.items[i];
    const std::string_view head = item.head();
    if (head == "root") {
      family.root = numbers(item, 1);
    } else if (head == "excluded") {
      if (item.items.size() != 2) item.fail("expected (excluded SET)");
      family.excluded = parseSet(item.items[1]);
    } else if (head == "member") {
      if (item.items.size() != 3) item.fail("expected (member SET TREE)");
      PeriodicSet indices = parseSet(item.items[1]);
      RegularTree tree = parseTree(item.items[2]);
      family.members.push_back(FamilyMember{std::move(indices), std::move(tree)});
    } else {
      item.fail("expected (root ...), (excluded ...) or (member ...)");
    }
  }
  return family;
}

LevelFamily parseLevels(const SExpr& e) {
  expectList(e, "levels");
  LevelFamily family;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    family.levels.push_back(parseTree(e.items[i]));
  }
  if (family.levels.empty()) e.fail("no levels");
  return family;
}

namespace {

FilterRecord parseFilterRecord(const SExpr& e) {
  if (e.items.size() != 2) e.fail("expected (filter KIND)");
  const SExpr& kind = e.items[1];
  FilterRecord record;
  if (kind.isSymbol("frechet")) return record;
  if (kind.isSymbol("density")) {
    record.kind = FilterKind::density;
    return record;
  }
  if (kind.head() != "ultra" || kind.items.size() < 2) {
    kind.fail("expected frechet, density or (ultra SEED (decide SET yes|no)...)");
  }
  record.kind = FilterKind::lazyUltra;
  record.seed = parseSet(kind.items[1]);
  for (std::size_t i = 2; i < kind.items.size(); ++i) {
    const SExpr& d = expectList(kind.items[i], "decide");
    if (d.items.size() != 3 || !(d.items[2].isSymbol("yes") ||
                                 d.items[2].isSymbol("no"))) {
      d.fail("expected (decide SET yes|no)");
    }
    record.decisions.push_back(
        Decision{parseSet(d.items[1]), d.items[2].isSymbol("yes")});
  }
  return record;
}

CorankMap parseConfigs(const SExpr& e, const PairAutomaton& p) {
  std::map<std::string, std::size_t> names;
  for (std::size_t q = 0; q < p.size(); ++q) names[p.states()[q].name] = q;
  CorankMap map;
  std::size_t i = 1;
  if (i < e.items.size() && e.items[i].head() == "iterations") {
    const SExpr& it = e.items[i];
    if (it.items.size() != 2) it.fail("expected (iterations N)");
    map.iterations = expectNumber(it.items[1]);
    ++i;
  }
  for (; i < e.items.size(); ++i) {
    const SExpr& c = expectList(e.items[i], "config");
    if (c.items.size() != 4) c.fail("expected (config NAME (states ...) LEVEL)");
    if (expectName(c.items[1]) != configName(map.entries.size())) {
      c.items[1].fail("expected configuration " + configName(map.entries.size()));
    }
    const SExpr& st = expectList(c.items[2], "states");
    std::uint64_t bits = 0;
    for (std::size_t k = 1; k < st.items.size(); ++k) {
      bits |= std::uint64_t{1} << lookup(names, st.items[k]);
    }
    ConfigEntry entry;
    entry.config = WitnessConfig::fromBits(bits);
    const SExpr& level = c.items[3];
    if (level.isSymbol("gfp")) {
      entry.inGfp = true;
    } else if (level.head() == "corank" && level.items.size() == 2) {
      entry.corank = expectNumber(level.items[1]);
    } else {
      level.fail("expected gfp or (corank N)");
    }
    map.entries.push_back(entry);
  }
  if (map.entries.empty()) e.fail("no configurations");
  return map;
}

}  // namespace

DichotomyCertificate parseCertificate(const SExpr& e) {
  expectList(e, "certificate");
  const SExpr* parts[6] = {};
  static constexpr std::string_view kHeads[6] = {
      "verdict", "instance-hash", "filter", "instance", "configs", "tree"};
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& item = e.items[i];
    bool known = false;
    for (std::size_t k = 0; k < 6; ++k) {
      if (item.head() != kHeads[k]) continue;
      if (parts[k]) item.fail("duplicate (" + std::string(kHeads[k]) + ")");
      parts[k] = &item;
      known = true;
    }
    if (!known) item.fail("unexpected certificate part");
  }
  for (std::size_t k = 0; k < 6; ++k) {
    if (!parts[k]) e.fail("missing (" + std::string(kHeads[k]) + " ...)");
  }
  const SExpr& v = *parts[0];
  if (v.items.size() != 2) v.fail("expected (verdict hechlerMiss|laverInside)");
  Verdict verdict;
  if (v.items[1].isSymbol("hechlerMiss")) {
    verdict = Verdict::hechlerMiss;
  } else if (v.items[1].isSymbol("laverInside")) {
    verdict = Verdict::laverInside;
  } else {
    v.items[1].fail("expected hechlerMiss or laverInside");
  }
  if (parts[1]->items.size() != 2) parts[1]->fail("expected (instance-hash N)");
  if (parts[3]->items.size() != 2) parts[3]->fail("expected (instance (aut ...))");
  if (parts[5]->items.size() < 2) parts[5]->fail("empty tree");
  PairAutomaton instance = parseAutomaton(parts[3]->items[1]);
  CorankMap coranks = parseConfigs(*parts[4], instance);
  return DichotomyCertificate{
      verdict,
      std::move(instance),
      expectNumber(parts[1]->items[1]),
      parseFilterRecord(*parts[2]),
      std::move(coranks),
      parseTree(*parts[5]),
  };
}

std::string to_string(const Lasso& l) {
  auto list = [](const Sequence& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(s[i]);
    }
    return out + ")";
  };
  return "(lasso " + list(l.stem()) + " " + list(l.cycle()) + ")";
}

std::string to_string(const RootedFamily& family) {
  std::string out = "(family (root";
  for (Natural n : family.root) out += " " + std::to_string(n);
  out += ")\n  (excluded " + to_string(family.excluded) + ")";
  for (const auto& m : family.members) {
    out += "\n  (member " + to_string(m.indices) + "\n    " +
           to_string(m.tree, 4) + ")";
  }
  return out + ")";
}

std::string to_string(const LevelFamily& family) {
  std::string out = "(levels";
  for (const auto& t : family.levels) out += "\n  " + to_string(t, 2);
  return out + ")";
}

std::string to_string(const FilterRecord& record, std::size_t indent) {
  switch (record.kind) {
    case FilterKind::frechet: return "frechet";
    case FilterKind::density: return "density";
    case FilterKind::lazyUltra: break;
  }
  std::string out = "(ultra " + to_string(record.seed);
  const std::string pad(indent + 2, ' ');
  for (const auto& d : record.decisions) {
    out += "\n" + pad + "(decide " + to_string(d.set) +
           (d.verdict ? " yes)" : " no)");
  }
  return out + ")";
}

std::string to_string(const DichotomyCertificate& cert) {
  std::string out = "(certificate\n  (verdict ";
  out += to_string(cert.verdict);
  out += ")\n  (instance-hash " + std::to_string(cert.instanceHash) + ")";
  out += "\n  (filter " + to_string(cert.filter, 2) + ")";
  out += "\n  (instance\n    " + to_string(cert.instance, 4) + ")";
  out += "\n  (configs (iterations " + std::to_string(cert.coranks.iterations) +
         ")";
  const auto& states = cert.instance.states();
  for (std::size_t i = 0; i < cert.coranks.entries.size(); ++i) {
    const ConfigEntry& e = cert.coranks.entries[i];
    out += "\n    (config " + configName(i) + " (states";
    for (std::size_t q = 0; q < states.size(); ++q) {
      if (e.config.contains(q)) out += " " + states[q].name;
    }
    out += ") ";
    out += e.inGfp ? "gfp" : "(corank " + std::to_string(e.corank) + ")";
    out += ")";
  }
  out += ")\n  " + to_string(cert.tree, 2) + ")";
  return out;
}

Filter parseFilterSpec(std::string_view spec) {
  if (spec == "frechet") return Filter::frechet();
  if (spec == "density") return Filter::density();
  if (spec == "ultra") return Filter::lazyUltra();
  if (spec.starts_with("ultra:")) {
    const PeriodicSet seed = parseSetLiteral(spec.substr(6));
    if (!seed.infinite()) throw Error("ultrafilter seed must be infinite");
    return Filter::lazyUltra(seed);
  }
  throw Error("unknown filter '" + std::string(spec) +
              "' (expected frechet, density, ultra or ultra:SET)");
}

InstanceDocument parseDocument(std::string_view text) {
  InstanceDocument doc;
  for (const SExpr& e : readSExprs(text)) {
    const std::string_view head = e.head();
    LocatedForm located{PeriodicSet(), e.line, e.column};
    if (e.isSymbol("all") || e.isSymbol("none") || head == "fin" ||
        head == "cofin" || head == "per") {
      located.form = parseSet(e);
    } else if (head == "tree") {
      located.form = parseTree(e);
    } else if (head == "aut") {
      located.form = parseAutomaton(e);
    } else if (head == "lasso") {
      located.form = parseLasso(e);
    } else if (head == "family") {
      located.form = parseFamily(e);
    } else if (head == "levels") {
      located.form = parseLevels(e);
    } else if (head == "certificate") {
      located.form = parseCertificate(e);
    } else {
      e.fail("unknown form");
    }
    doc.forms.push_back(std::move(located));
  }
  return doc;
}

std::string printDocument(const InstanceDocument& doc) {
  std::string out;
  for (const auto& f : doc.forms) {
    std::visit([&](const auto& v) { out += to_string(v); }, f.form);
    out += "\n";
  }
  return out;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace hechler
