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

#ifndef HECHLER_GAMES_HPP_
#define HECHLER_GAMES_HPP_

#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hechler/presentations.hpp"
#include "hechler/setalg.hpp"
#include "hechler/trees.hpp"

namespace hechler {

// Game 1: I plays n_k, II answers m_k > n_k.
// Game 2: I plays an infinite set X_k, II answers m_k in X_k.
// In both, II wins the play iff (m_0, m_1, ...) lies in the payoff set.
enum class GameKind { game1, game2 };
enum class Role { I, II };
enum class Backing { thresholdFn, treeWalk, setWalk, responder, lasso, scripted, human };

const char* to_string(GameKind g);
const char* to_string(Role r);

// Player I's move: a natural in Game 1, an infinite periodic set in Game 2.
using Challenge = std::variant<Natural, PeriodicSet>;
std::string to_string(const Challenge& c);

struct Round {
  Challenge challenge;
  Natural answer = 0;
  bool operator==(const Round&) const = default;
};

// II's moves so far.
Sequence answers(std::span<const Round> played);

enum class Outcome { iiWins, iWins, undecidedAtBudget, illegalMove };
const char* to_string(Outcome o);

struct GameTranscript {
  GameKind game = GameKind::game1;
  std::vector<Round> rounds;
  Outcome outcome = Outcome::undecidedAtBudget;
  std::string evidence;
  bool operator==(const GameTranscript&) const = default;
};

// One move per line, then the outcome and evidence trailer.
std::string to_string(const GameTranscript& t);
GameTranscript parseTranscript(std::string_view text);
// The moves of `role`, one per line, in the format the scripted and human
// players read.
std::string scriptFor(const GameTranscript& t, Role role);

class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual GameKind game() const = 0;
  virtual Role role() const = 0;
  virtual Backing backing() const = 0;

  // Player I's next move; nullopt when the player offers none.
  virtual std::optional<Challenge> challenge(std::span<const Round> played) const;
  // Player II's answer to `c`; nullopt when the player offers none.
  virtual std::optional<Natural> answer(std::span<const Round> played,
                                        const Challenge& c) const;

  // Equal keys at two positions promise identical play from both onwards.
  // nullopt for strategies without finite internal state.
  virtual std::optional<std::string> stateKey(std::span<const Round> played) const;
};

// I in Game 1 playing sigma(m_0, ..., m_{k-1}).
class ThresholdStrategy final : public Strategy {
 public:
  explicit ThresholdStrategy(ThresholdFunction sigma);
  GameKind game() const override { return GameKind::game1; }
  Role role() const override { return Role::I; }
  Backing backing() const override { return Backing::thresholdFn; }
  std::optional<Challenge> challenge(std::span<const Round> played) const override;
  std::optional<std::string> stateKey(std::span<const Round> played) const override;
  const ThresholdFunction& sigma() const { return sigma_; }

 private:
  ThresholdFunction sigma_;
  RegularTree tree_;
};

// I in Game 1 walking a Hechler tree: plays the least b with (b, inf)
// inside the current successor set, which forces every play into the tree.
class HechlerWalkStrategy final : public Strategy {
 public:
  explicit HechlerWalkStrategy(RegularTree h);
  GameKind game() const override { return GameKind::game1; }
  Role role() const override { return Role::I; }
  Backing backing() const override { return Backing::treeWalk; }
  std::optional<Challenge> challenge(std::span<const Round> played) const override;
  std::optional<std::string> stateKey(std::span<const Round> played) const override;
  const RegularTree& tree() const { return tree_; }
  // Least b with (b, inf) inside the successor set of state q.
  Natural bound(std::size_t q) const;

 private:
  RegularTree tree_;
};

// II in Game 1 walking a Laver tree: answers the least successor above n.
class LaverWalkStrategy final : public Strategy {
 public:
  explicit LaverWalkStrategy(RegularTree l);
  GameKind game() const override { return GameKind::game1; }
  Role role() const override { return Role::II; }
  Backing backing() const override { return Backing::treeWalk; }
  std::optional<Natural> answer(std::span<const Round> played,
                                const Challenge& c) const override;
  std::optional<std::string> stateKey(std::span<const Round> played) const override;
  const RegularTree& tree() const { return tree_; }

 private:
  RegularTree tree_;
};

// I in Game 2 playing the current successor set of a Laver tree.
class SetWalkStrategy final : public Strategy {
 public:
  explicit SetWalkStrategy(RegularTree l);
  GameKind game() const override { return GameKind::game2; }
  Role role() const override { return Role::I; }
  Backing backing() const override { return Backing::setWalk; }
  std::optional<Challenge> challenge(std::span<const Round> played) const override;
  std::optional<std::string> stateKey(std::span<const Round> played) const override;
  const RegularTree& tree() const { return tree_; }

 private:
  RegularTree tree_;
};

// II in Game 2, finitely presented: each state holds a priority list
// P_1, ..., P_k and answers min(X ∩ P_i) for the first i with X ∩ P_i
// nonempty (no answer if there is none); the next state is chosen by the
// answer through deterministic guards, as in a tree.
struct ResponderState {
  std::string name;
  std::vector<PeriodicSet> priorities;
  std::vector<TreeRule> moves;
};

class ResponderStrategy final : public Strategy {
 public:
  explicit ResponderStrategy(std::vector<ResponderState> states);
  GameKind game() const override { return GameKind::game2; }
  Role role() const override { return Role::II; }
  Backing backing() const override { return Backing::responder; }
  std::optional<Natural> answer(std::span<const Round> played,
                                const Challenge& c) const override;
  std::optional<std::string> stateKey(std::span<const Round> played) const override;

  const std::vector<ResponderState>& states() const { return states_; }
  std::optional<std::size_t> stateAfter(std::span<const Natural> moves) const;
  std::optional<Natural> respond(std::size_t state, const PeriodicSet& x) const;
  // {m : some infinite X is answered with m} at `state`.
  PeriodicSet reachableAnswers(std::size_t state) const;
  // An infinite X answered with m at `state`; requires m in
  // reachableAnswers(state).
  PeriodicSet challengeFor(std::size_t state, Natural m) const;

 private:
  std::vector<ResponderState> states_;
};

// Plays a fixed eventually periodic move list. For I the list holds the
// challenges; for II it holds offsets: m = n + 1 + offset in Game 1 and the
// offset-th element of X in Game 2.
class LassoStrategy final : public Strategy {
 public:
  LassoStrategy(GameKind game, std::vector<Challenge> stem,
                std::vector<Challenge> cycle);
  LassoStrategy(GameKind game, Lasso offsets);
  GameKind game() const override { return game_; }
  Role role() const override { return role_; }
  Backing backing() const override { return Backing::lasso; }
  std::optional<Challenge> challenge(std::span<const Round> played) const override;
  std::optional<Natural> answer(std::span<const Round> played,
                                const Challenge& c) const override;
  std::optional<std::string> stateKey(std::span<const Round> played) const override;

 private:
  std::size_t position(std::size_t round) const;

  GameKind game_;
  Role role_;
  std::vector<Challenge> stem_;
  std::vector<Challenge> cycle_;
  std::optional<Lasso> offsets_;
};

// Plays a finite list verbatim, without checking legality, then stops.
class ScriptedStrategy final : public Strategy {
 public:
  ScriptedStrategy(GameKind game, Role role, std::vector<Challenge> moves);
  GameKind game() const override { return game_; }
  Role role() const override { return role_; }
  Backing backing() const override { return Backing::scripted; }
  std::optional<Challenge> challenge(std::span<const Round> played) const override;
  std::optional<Natural> answer(std::span<const Round> played,
                                const Challenge& c) const override;

 private:
  GameKind game_;
  Role role_;
  std::vector<Challenge> moves_;
};

// Reads moves from a stream, prompting on `out`. Malformed or illegal input
// is reported and re-prompted; end of input yields nullopt. With `echo`,
// every line read is copied to `out`, for input that is not a terminal.
class HumanStrategy final : public Strategy {
 public:
  HumanStrategy(GameKind game, Role role, std::istream& in, std::ostream& out,
                bool echo = false);
  GameKind game() const override { return game_; }
  Role role() const override { return role_; }
  Backing backing() const override { return Backing::human; }
  std::optional<Challenge> challenge(std::span<const Round> played) const override;
  std::optional<Natural> answer(std::span<const Round> played,
                                const Challenge& c) const override;

 private:
  std::optional<std::string> readLine() const;

  GameKind game_;
  Role role_;
  std::istream& in_;
  std::ostream& out_;
  bool echo_;
};

// Game 1, trees -> strategies -> trees. Hechler and Laver are taken mod the
// Frechet filter, matching the game's cofinite and infinite move sets.
std::unique_ptr<Strategy> g1StrategyFromHechler(const RegularTree& h);
// H_sigma for a threshold or tree-walking Player I, checked against the
// strategy on every node reached by representative moves to `depth`.
RegularTree g1HechlerFromStrategy(const Strategy& s, std::size_t depth);
std::unique_ptr<Strategy> g1StrategyIIFromLaver(const RegularTree& l);
// The tree of all answers a tree-walking Player II can give. II never plays
// 0 (m > n >= 0), so this is the walked tree with move 0 removed.
RegularTree g1LaverFromStrategyII(const Strategy& s);

// Game 2.
std::unique_ptr<Strategy> g2StrategyFromLaverI(const RegularTree& l);
RegularTree g2LaverFromStrategyI(const Strategy& s);
std::unique_ptr<Strategy> g2StrategyIIFromHechler(const RegularTree& h);

// A position (II's moves so far) and a legal challenge there that the
// strategy cannot answer legally.
struct Refutation {
  Sequence position;
  PeriodicSet challenge;
};

// The tree whose successor set at each position is the set of all answers
// the responder can give there; that set must be cofinite, otherwise its
// complement is returned as a challenge the responder cannot meet.
std::variant<RegularTree, Refutation> g2HechlerFromStrategyII(const Strategy& s);

// Observer for progress messages; may be null.
struct MatchOptions {
  std::size_t budget = 50;
  std::ostream* log = nullptr;
  bool color = false;
};

// Plays up to `budget` rounds. The play is decided early when the payoff
// configuration dies (I wins). If the joint strategy state and payoff
// configuration repeat, the play is an explicit lasso and is decided with
// memberLasso at the end; otherwise the result is undecidedAtBudget.
GameTranscript playMatch(GameKind game, Strategy& playerI, Strategy& playerII,
                         const PairAutomaton& payoff,
                         const MatchOptions& options);

// A match in which `humanRole` is read from `in` (prompts on `out`) against
// `machine`. Reports the payoff configuration after every round.
GameTranscript interactiveSession(GameKind game, Role humanRole,
                                  const PairAutomaton& payoff,
                                  Strategy& machine, std::istream& in,
                                  std::ostream& out, std::size_t budget,
                                  bool color = false, bool echo = false);

}  // namespace hechler

#endif  // HECHLER_GAMES_HPP_
