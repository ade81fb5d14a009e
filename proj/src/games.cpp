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

#include "hechler/games.hpp"

#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "hechler/text.hpp"

namespace hechler {

const char* to_string(GameKind g) {
  return g == GameKind::game1 ? "game1" : "game2";
}

const char* to_string(Role r) { return r == Role::I ? "I" : "II"; }

std::string to_string(const Challenge& c) {
  if (const Natural* n = std::get_if<Natural>(&c)) return std::to_string(*n);
  return to_string(std::get<PeriodicSet>(c));
}

Sequence answers(std::span<const Round> played) {
  Sequence out;
  out.reserve(played.size());
  for (const Round& r : played) out.push_back(r.answer);
  return out;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::iiWins: return "iiWins";
    case Outcome::iWins: return "iWins";
    case Outcome::undecidedAtBudget: return "undecidedAtBudget";
    case Outcome::illegalMove: return "illegalMove";
  }
  return "?";
}

namespace {

// nullopt when the move is legal, otherwise the reason it is not.
std::optional<std::string> challengeProblem(GameKind game, const Challenge& c) {
  if (game == GameKind::game1) {
    if (!std::holds_alternative<Natural>(c)) return "Game 1 challenges are naturals";
    return std::nullopt;
  }
  const PeriodicSet* x = std::get_if<PeriodicSet>(&c);
  if (!x) return "Game 2 challenges are sets";
  if (!x->infinite()) return to_string(*x) + " is not infinite";
  return std::nullopt;
}

std::optional<std::string> answerProblem(const Challenge& c, Natural m) {
  if (const Natural* n = std::get_if<Natural>(&c)) {
    if (m <= *n) {
      return std::to_string(m) + " does not exceed " + std::to_string(*n);
    }
    return std::nullopt;
  }
  const PeriodicSet& x = std::get<PeriodicSet>(c);
  if (!x.contains(m)) return std::to_string(m) + " is not in " + to_string(x);
  return std::nullopt;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::optional<Natural> parseNatural(std::string_view s) {
  if (s.empty() || s.size() > 19) return std::nullopt;
  Natural v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<Natural>(c - '0');
  }
  return v;
}

Challenge parseChallenge(GameKind game, std::string_view text) {
  if (game == GameKind::game2) return parseSetLiteral(text);
  if (auto n = parseNatural(text)) return *n;
  throw Error("expected a natural number, got '" + std::string(text) + "'");
}

void requireGameTree(const RegularTree& t, std::string_view what) {
  if (!t.root().empty()) {
    throw Error(std::string(what) + ": strategies need a tree with empty root");
  }
}

}  // namespace

std::string to_string(const GameTranscript& t) {
  std::string out = "game ";
  out += to_string(t.game);
  out += "\n";
  for (const Round& r : t.rounds) {
    out += "I " + to_string(r.challenge) + "\n";
    out += "II " + std::to_string(r.answer) + "\n";
  }
  out += "outcome ";
  out += to_string(t.outcome);
  out += "\nevidence " + t.evidence + "\n";
  return out;
}

GameTranscript parseTranscript(std::string_view text) {
  GameTranscript t;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineNo = 0;
  bool sawGame = false, sawOutcome = false;
  std::optional<Challenge> pending;
  while (std::getline(in, line)) {
    ++lineNo;
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto space = body.find(' ');
    const std::string key = body.substr(0, space);
    const std::string rest =
        space == std::string::npos ? "" : trim(body.substr(space + 1));
    auto fail = [&](const std::string& m) -> void { throw ParseError(m, lineNo, 1); };
    if (!sawGame) {
      if (key != "game" || (rest != "game1" && rest != "game2")) {
        fail("expected 'game game1' or 'game game2'");
      }
      t.game = rest == "game1" ? GameKind::game1 : GameKind::game2;
      sawGame = true;
    } else if (key == "I" && !sawOutcome) {
      if (pending) fail("two challenges in a row");
      try {
        pending = parseChallenge(t.game, rest);
      } catch (const Error& e) {
        fail(e.what());
      }
      if (auto problem = challengeProblem(t.game, *pending)) fail(*problem);
    } else if (key == "II" && !sawOutcome) {
      if (!pending) fail("answer without a challenge");
      auto m = parseNatural(rest);
      if (!m) fail("expected a natural number");
      if (auto problem = answerProblem(*pending, *m)) fail(*problem);
      t.rounds.push_back(Round{std::move(*pending), *m});
      pending.reset();
    } else if (key == "outcome" && !sawOutcome) {
      if (pending) fail("unanswered challenge");
      bool known = false;
      for (Outcome o : {Outcome::iiWins, Outcome::iWins,
                        Outcome::undecidedAtBudget, Outcome::illegalMove}) {
        if (rest == to_string(o)) {
          t.outcome = o;
          known = true;
        }
      }
      if (!known) fail("unknown outcome '" + rest + "'");
      sawOutcome = true;
    } else if (key == "evidence" && sawOutcome) {
      t.evidence = rest;
    } else {
      fail("unexpected line");
    }
  }
  if (!sawGame || !sawOutcome) throw ParseError("incomplete transcript", lineNo, 1);
  return t;
}

std::string scriptFor(const GameTranscript& t, Role role) {
  std::string out;
  for (const Round& r : t.rounds) {
    out += role == Role::I ? to_string(r.challenge) : std::to_string(r.answer);
    out += "\n";
  }
  return out;
}

std::optional<Challenge> Strategy::challenge(std::span<const Round>) const {
  throw Error("strategy does not play for Player I");
}

std::optional<Natural> Strategy::answer(std::span<const Round>,
                                        const Challenge&) const {
  throw Error("strategy does not play for Player II");
}

std::optional<std::string> Strategy::stateKey(std::span<const Round>) const {
  return std::nullopt;
}

ThresholdStrategy::ThresholdStrategy(ThresholdFunction sigma)
    : sigma_(std::move(sigma)), tree_(fromThreshold(sigma_)) {}

std::optional<Challenge> ThresholdStrategy::challenge(
    std::span<const Round> played) const {
  return Challenge{sigma_(answers(played))};
}

std::optional<std::string> ThresholdStrategy::stateKey(
    std::span<const Round> played) const {
  auto q = tree_.stateAt(answers(played));
  if (!q) return std::nullopt;
  return std::to_string(*q);
}

HechlerWalkStrategy::HechlerWalkStrategy(RegularTree h) : tree_(std::move(h)) {
  requireGameTree(tree_, "hechler walk");
  Filter frechet = Filter::frechet();
  if (!isHechlerModF(tree_, frechet)) {
    throw Error("hechler walk: tree is not hechler (some successor set is not cofinite)");
  }
}

Natural HechlerWalkStrategy::bound(std::size_t q) const {
  return maxElement(complement(tree_.successors(q))).value_or(0);
}

std::optional<Challenge> HechlerWalkStrategy::challenge(
    std::span<const Round> played) const {
  auto q = tree_.stateAt(answers(played));
  if (!q) return std::nullopt;
  return Challenge{bound(*q)};
}

std::optional<std::string> HechlerWalkStrategy::stateKey(
    std::span<const Round> played) const {
  auto q = tree_.stateAt(answers(played));
  if (!q) return std::nullopt;
  return std::to_string(*q);
}

LaverWalkStrategy::LaverWalkStrategy(RegularTree l) : tree_(std::move(l)) {
  requireGameTree(tree_, "laver walk");
  Filter frechet = Filter::frechet();
  if (!isLaverModF(tree_, frechet)) {
    throw Error("laver walk: tree is not laver (some successor set is finite)");
  }
}

std::optional<Natural> LaverWalkStrategy::answer(std::span<const Round> played,
                                                 const Challenge& c) const {
  auto q = tree_.stateAt(answers(played));
  const Natural* n = std::get_if<Natural>(&c);
  if (!q || !n) return std::nullopt;
  return minAbove(tree_.successors(*q), *n);
}

std::optional<std::string> LaverWalkStrategy::stateKey(
    std::span<const Round> played) const {
  auto q = tree_.stateAt(answers(played));
  if (!q) return std::nullopt;
  return std::to_string(*q);
}

SetWalkStrategy::SetWalkStrategy(RegularTree l) : tree_(std::move(l)) {
  requireGameTree(tree_, "set walk");
  Filter frechet = Filter::frechet();
  if (!isLaverModF(tree_, frechet)) {
    throw Error("set walk: tree is not laver (some successor set is finite)");
  }
}

std::optional<Challenge> SetWalkStrategy::challenge(
    std::span<const Round> played) const {
  auto q = tree_.stateAt(answers(played));
  if (!q) return std::nullopt;
  return Challenge{tree_.successors(*q)};
}

std::optional<std::string> SetWalkStrategy::stateKey(
    std::span<const Round> played) const {
  auto q = tree_.stateAt(answers(played));
  if (!q) return std::nullopt;
  return std::to_string(*q);
}

ResponderStrategy::ResponderStrategy(std::vector<ResponderState> states)
    : states_(std::move(states)) {
  if (states_.empty()) throw Error("responder: no states");
  for (const auto& s : states_) {
    PeriodicSet seen;
    for (const auto& r : s.moves) {
      if (r.next >= states_.size()) throw Error("responder: transition out of range");
      if (!intersect(seen, r.guard).empty()) {
        throw Error("responder: overlapping guards in state " + s.name);
      }
      seen = unite(seen, r.guard);
    }
  }
}

std::optional<std::size_t> ResponderStrategy::stateAfter(
    std::span<const Natural> moves) const {
  std::size_t q = 0;
  for (Natural m : moves) {
    bool moved = false;
    for (const auto& r : states_[q].moves) {
      if (r.guard.contains(m)) {
        q = r.next;
        moved = true;
        break;
      }
    }
    if (!moved) return std::nullopt;
  }
  return q;
}

std::optional<Natural> ResponderStrategy::respond(std::size_t state,
                                                  const PeriodicSet& x) const {
  for (const auto& p : states_.at(state).priorities) {
    if (auto m = minElement(intersect(x, p))) return m;
  }
  return std::nullopt;
}

std::optional<Natural> ResponderStrategy::answer(std::span<const Round> played,
                                                 const Challenge& c) const {
  auto q = stateAfter(answers(played));
  const PeriodicSet* x = std::get_if<PeriodicSet>(&c);
  if (!q || !x) return std::nullopt;
  return respond(*q, *x);
}

std::optional<std::string> ResponderStrategy::stateKey(
    std::span<const Round> played) const {
  auto q = stateAfter(answers(played));
  if (!q) return std::nullopt;
  return std::to_string(*q);
}

// m is answered to some infinite X iff, for the first priority P_i holding
// m, the region R_i left by the earlier priorities is infinite: then
// X = {m} ∪ (R_i \ P_i) ∪ (R_i ∩ P_i above m) is such a challenge.
PeriodicSet ResponderStrategy::reachableAnswers(std::size_t state) const {
  PeriodicSet region = PeriodicSet::all();
  PeriodicSet out;
  for (const auto& p : states_.at(state).priorities) {
    if (region.infinite()) out = unite(out, intersect(region, p));
    region = difference(region, p);
  }
  return out;
}

PeriodicSet ResponderStrategy::challengeFor(std::size_t state, Natural m) const {
  PeriodicSet region = PeriodicSet::all();
  for (const auto& p : states_.at(state).priorities) {
    if (p.contains(m) && region.contains(m)) {
      if (!region.infinite()) break;
      return unite(unite(PeriodicSet::finite({m}), difference(region, p)),
                   intersect(intersect(region, p), PeriodicSet::above(m)));
    }
    region = difference(region, p);
  }
  throw Error("responder never answers " + std::to_string(m) + " in state " +
              states_.at(state).name);
}

LassoStrategy::LassoStrategy(GameKind game, std::vector<Challenge> stem,
                             std::vector<Challenge> cycle)
    : game_(game), role_(Role::I), stem_(std::move(stem)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw Error("lasso strategy: empty repeating word");
  for (const auto* part : {&stem_, &cycle_}) {
    for (const auto& c : *part) {
      if (auto problem = challengeProblem(game_, c)) {
        throw Error("lasso strategy: " + *problem);
      }
    }
  }
}

LassoStrategy::LassoStrategy(GameKind game, Lasso offsets)
    : game_(game), role_(Role::II), offsets_(std::move(offsets)) {}

std::size_t LassoStrategy::position(std::size_t round) const {
  const std::size_t stem = offsets_ ? offsets_->stem().size() : stem_.size();
  const std::size_t cycle = offsets_ ? offsets_->cycle().size() : cycle_.size();
  if (round < stem) return round;
  return stem + (round - stem) % cycle;
}

std::optional<Challenge> LassoStrategy::challenge(
    std::span<const Round> played) const {
  if (role_ != Role::I) return Strategy::challenge(played);
  const std::size_t k = position(played.size());
  return k < stem_.size() ? stem_[k] : cycle_[k - stem_.size()];
}

std::optional<Natural> LassoStrategy::answer(std::span<const Round> played,
                                             const Challenge& c) const {
  if (role_ != Role::II) return Strategy::answer(played, c);
  const Natural offset = offsets_->at(played.size());
  if (const Natural* n = std::get_if<Natural>(&c)) return *n + 1 + offset;
  return enumerate(std::get<PeriodicSet>(c), offset);
}

std::optional<std::string> LassoStrategy::stateKey(
    std::span<const Round> played) const {
  return std::to_string(position(played.size()));
}

ScriptedStrategy::ScriptedStrategy(GameKind game, Role role,
                                   std::vector<Challenge> moves)
    : game_(game), role_(role), moves_(std::move(moves)) {
  if (role_ == Role::II) {
    for (const auto& m : moves_) {
      if (!std::holds_alternative<Natural>(m)) {
        throw Error("scripted strategy: Player II plays naturals");
      }
    }
  }
}

std::optional<Challenge> ScriptedStrategy::challenge(
    std::span<const Round> played) const {
  if (role_ != Role::I) return Strategy::challenge(played);
  if (played.size() >= moves_.size()) return std::nullopt;
  return moves_[played.size()];
}

std::optional<Natural> ScriptedStrategy::answer(std::span<const Round> played,
                                                const Challenge& c) const {
  if (role_ != Role::II) return Strategy::answer(played, c);
  if (played.size() >= moves_.size()) return std::nullopt;
  return std::get<Natural>(moves_[played.size()]);
}

HumanStrategy::HumanStrategy(GameKind game, Role role, std::istream& in,
                             std::ostream& out, bool echo)
    : game_(game), role_(role), in_(in), out_(out), echo_(echo) {}

std::optional<std::string> HumanStrategy::readLine() const {
  std::string line;
  while (std::getline(in_, line)) {
    std::string body = trim(line);
    if (echo_) out_ << line << "\n";
    if (!body.empty()) return body;
  }
  return std::nullopt;
}

std::optional<Challenge> HumanStrategy::challenge(
    std::span<const Round> played) const {
  if (role_ != Role::I) return Strategy::challenge(played);
  for (;;) {
    out_ << "round " << played.size() + 1 << ": your move as Player I ("
         << (game_ == GameKind::game1 ? "any natural n" : "an infinite set, e.g. (cofin 0)")
         << "): " << std::flush;
    auto line = readLine();
    if (!line) {
      out_ << "\n";
      return std::nullopt;
    }
    try {
      Challenge c = parseChallenge(game_, *line);
      if (auto problem = challengeProblem(game_, c)) {
        out_ << "illegal move: " << *problem << "\n";
        continue;
      }
      return c;
    } catch (const Error& e) {
      out_ << "not a move: " << e.what() << "\n";
    }
  }
}

std::optional<Natural> HumanStrategy::answer(std::span<const Round> played,
                                             const Challenge& c) const {
  if (role_ != Role::II) return Strategy::answer(played, c);
  for (;;) {
    out_ << "round " << played.size() + 1 << ": Player I plays "
         << to_string(c) << "; your move as Player II ("
         << (game_ == GameKind::game1 ? "m > " + to_string(c) : "m in the set")
         << "): " << std::flush;
    auto line = readLine();
    if (!line) {
      out_ << "\n";
      return std::nullopt;
    }
    auto m = parseNatural(*line);
    if (!m) {
      out_ << "not a move: expected a natural number, got '" << *line << "'\n";
      continue;
    }
    if (auto problem = answerProblem(c, *m)) {
      out_ << "illegal move: " << *problem << "\n";
      continue;
    }
    return m;
  }
}

std::unique_ptr<Strategy> g1StrategyFromHechler(const RegularTree& h) {
  return std::make_unique<HechlerWalkStrategy>(h);
}

namespace {

// Walks the nodes of t to `depth`, one representative move per rule, and
// checks that the successor set at each node is (sigma(u), infinity).
void checkAgainstChallenges(const RegularTree& t, const Strategy& s,
                            std::size_t depth) {
  std::deque<Sequence> queue{Sequence{}};
  while (!queue.empty()) {
    Sequence u = std::move(queue.front());
    queue.pop_front();
    std::vector<Round> played;
    for (Natural m : u) played.push_back(Round{Natural{0}, m});
    auto c = s.challenge(played);
    if (!c || !std::holds_alternative<Natural>(*c)) {
      throw Error("strategy offers no Game 1 move at " + to_string(u));
    }
    if (t.successorSet(u) != PeriodicSet::above(std::get<Natural>(*c))) {
      throw Error("induced tree disagrees with the strategy at " + to_string(u));
    }
    if (u.size() == depth) continue;
    for (const auto& r : t.state(*t.stateAt(u)).rules) {
      Sequence v = u;
      v.push_back(*minElement(r.guard));
      queue.push_back(std::move(v));
    }
  }
}

}  // namespace

RegularTree g1HechlerFromStrategy(const Strategy& s, std::size_t depth) {
  if (s.game() != GameKind::game1 || s.role() != Role::I) {
    throw Error("g1HechlerFromStrategy: needs a Game 1 strategy for Player I");
  }
  std::optional<RegularTree> tree;
  if (const auto* t = dynamic_cast<const ThresholdStrategy*>(&s)) {
    tree = fromThreshold(t->sigma());
  } else if (const auto* w = dynamic_cast<const HechlerWalkStrategy*>(&s)) {
    std::vector<TreeState> states = w->tree().states();
    for (std::size_t q = 0; q < states.size(); ++q) {
      const PeriodicSet allowed = PeriodicSet::above(w->bound(q));
      for (auto& r : states[q].rules) r.guard = intersect(r.guard, allowed);
    }
    tree = RegularTree::pruned(std::move(states));
  } else {
    throw Error("g1HechlerFromStrategy: strategy is not finitely presented");
  }
  checkAgainstChallenges(*tree, s, depth);
  return *tree;
}

std::unique_ptr<Strategy> g1StrategyIIFromLaver(const RegularTree& l) {
  return std::make_unique<LaverWalkStrategy>(l);
}

RegularTree g1LaverFromStrategyII(const Strategy& s) {
  const auto* w = dynamic_cast<const LaverWalkStrategy*>(&s);
  if (!w || s.game() != GameKind::game1) {
    throw Error("g1LaverFromStrategyII: strategy is not finitely presented");
  }
  std::vector<TreeState> states = w->tree().states();
  const PeriodicSet playable = PeriodicSet::above(0);
  for (auto& st : states) {
    for (auto& r : st.rules) r.guard = intersect(r.guard, playable);
  }
  return RegularTree::pruned(std::move(states));
}

std::unique_ptr<Strategy> g2StrategyFromLaverI(const RegularTree& l) {
  return std::make_unique<SetWalkStrategy>(l);
}

RegularTree g2LaverFromStrategyI(const Strategy& s) {
  const auto* w = dynamic_cast<const SetWalkStrategy*>(&s);
  if (!w) throw Error("g2LaverFromStrategyI: strategy is not finitely presented");
  return w->tree();
}

std::unique_ptr<Strategy> g2StrategyIIFromHechler(const RegularTree& h) {
  requireGameTree(h, "g2StrategyIIFromHechler");
  Filter frechet = Filter::frechet();
  if (!isHechlerModF(h, frechet)) {
    throw Error("g2StrategyIIFromHechler: tree is not hechler");
  }
  std::vector<ResponderState> states;
  for (std::size_t q = 0; q < h.size(); ++q) {
    states.push_back(
        ResponderState{h.state(q).name, {h.successors(q)}, h.state(q).rules});
  }
  return std::make_unique<ResponderStrategy>(std::move(states));
}

std::variant<RegularTree, Refutation> g2HechlerFromStrategyII(const Strategy& s) {
  const auto* r = dynamic_cast<const ResponderStrategy*>(&s);
  if (!r) throw Error("g2HechlerFromStrategyII: strategy is not finitely presented");
  const auto& rs = r->states();
  std::vector<std::optional<Sequence>> path(rs.size());
  std::vector<TreeState> states(rs.size());
  std::deque<std::size_t> queue{0};
  path[0] = Sequence{};
  while (!queue.empty()) {
    const std::size_t q = queue.front();
    queue.pop_front();
    const PeriodicSet m = r->reachableAnswers(q);
    if (cardinalityClass(m) != Cardinality::cofinite &&
        cardinalityClass(m) != Cardinality::all) {
      return Refutation{*path[q], complement(m)};
    }
    states[q].name = rs[q].name;
    PeriodicSet covered;
    for (const auto& rule : rs[q].moves) {
      const PeriodicSet guard = intersect(rule.guard, m);
      covered = unite(covered, guard);
      if (guard.empty()) continue;
      states[q].rules.push_back(TreeRule{guard, rule.next});
      if (!path[rule.next]) {
        Sequence p = *path[q];
        p.push_back(*minElement(guard));
        path[rule.next] = std::move(p);
        queue.push_back(rule.next);
      }
    }
    if (covered != m) {
      throw Error("responder state " + rs[q].name +
                  " has no transition for some of its answers");
    }
  }
  for (std::size_t q = 0; q < rs.size(); ++q) {
    if (states[q].name.empty()) states[q].name = rs[q].name;
  }
  return RegularTree::pruned(std::move(states));
}

namespace {

const char* paint(bool color, bool live) {
  if (!color) return "";
  return live ? "\x1b[32m" : "\x1b[31m";
}

}  // namespace

GameTranscript playMatch(GameKind game, Strategy& playerI, Strategy& playerII,
                         const PairAutomaton& payoff,
                         const MatchOptions& options) {
  if (playerI.game() != game || playerII.game() != game ||
      playerI.role() != Role::I || playerII.role() != Role::II) {
    throw Error("playMatch: strategies do not fit the game and roles");
  }
  GameTranscript t;
  t.game = game;
  WitnessConfig config = payoff.initialConfig();
  std::map<std::string, std::size_t> seen;
  std::optional<std::size_t> loopStart;
  auto stopped = [&](const Strategy& s, const char* who) {
    const bool external =
        s.backing() == Backing::human || s.backing() == Backing::scripted;
    t.outcome = external ? Outcome::undecidedAtBudget : Outcome::illegalMove;
    t.evidence = std::string("Player ") + who +
                 (external ? " stopped playing" : " has no legal move") +
                 " in round " + std::to_string(t.rounds.size() + 1);
    return t;
  };
  auto illegal = [&](const char* who, const std::string& why) {
    t.outcome = Outcome::illegalMove;
    t.evidence = std::string("Player ") + who + " moved illegally in round " +
                 std::to_string(t.rounds.size() + 1) + ": " + why;
    return t;
  };

  while (t.rounds.size() < options.budget) {
    const auto keyI = playerI.stateKey(t.rounds);
    const auto keyII = playerII.stateKey(t.rounds);
    if (keyI && keyII) {
      const std::string key =
          *keyI + "|" + *keyII + "|" + std::to_string(config.bits());
      auto [it, fresh] = seen.emplace(key, t.rounds.size());
      if (!fresh) {
        loopStart = it->second;
        break;
      }
    }
    const auto c = playerI.challenge(t.rounds);
    if (!c) return stopped(playerI, "I");
    if (auto problem = challengeProblem(game, *c)) return illegal("I", *problem);
    const auto m = playerII.answer(t.rounds, *c);
    if (!m) return stopped(playerII, "II");
    if (auto problem = answerProblem(*c, *m)) return illegal("II", *problem);
    t.rounds.push_back(Round{*c, *m});
    config = payoff.step(config, *m);
    if (options.log) {
      *options.log << "round " << t.rounds.size() << ": I " << to_string(*c)
                   << ", II " << *m << "; payoff configuration "
                   << payoff.describe(config) << " " << paint(options.color, !config.dead())
                   << (config.dead() ? "dead" : "live")
                   << (options.color ? "\x1b[0m" : "") << "\n";
    }
    if (config.dead()) {
      t.outcome = Outcome::iWins;
      t.evidence = "payoff configuration dead after round " +
                   std::to_string(t.rounds.size()) +
                   ": the play has left the payoff set";
      return t;
    }
  }

  if (loopStart) {
    const Sequence ms = answers(t.rounds);
    const Lasso play(Sequence(ms.begin(), ms.begin() + *loopStart),
                     Sequence(ms.begin() + *loopStart, ms.end()));
    const bool member = memberLasso(payoff, play);
    t.outcome = member ? Outcome::iiWins : Outcome::iWins;
    t.evidence = "positions repeat from round " + std::to_string(*loopStart + 1) +
                 "; the play is " + to_string(play) +
                 (member ? ", inside the payoff set" : ", outside the payoff set");
    return t;
  }
  t.outcome = Outcome::undecidedAtBudget;
  t.evidence = "payoff configuration " + payoff.describe(config) +
               " still live after " + std::to_string(t.rounds.size()) + " rounds";
  return t;
}

GameTranscript interactiveSession(GameKind game, Role humanRole,
                                  const PairAutomaton& payoff,
                                  Strategy& machine, std::istream& in,
                                  std::ostream& out, std::size_t budget,
                                  bool color, bool echo) {
  HumanStrategy human(game, humanRole, in, out, echo);
  if (machine.role() == humanRole) {
    throw Error("interactiveSession: machine and human play the same role");
  }
  out << "You are Player " << to_string(humanRole) << " in " << to_string(game)
      << ". Player II wins iff the answers stay in the payoff set.\n"
      << "payoff configuration " << payoff.describe(payoff.initialConfig())
      << " live\n";
  MatchOptions options{budget, &out, color};
  GameTranscript t = humanRole == Role::I
                         ? playMatch(game, human, machine, payoff, options)
                         : playMatch(game, machine, human, payoff, options);
  out << "outcome: " << to_string(t.outcome) << " (" << t.evidence << ")\n";
  return t;
}

}  // namespace hechler
