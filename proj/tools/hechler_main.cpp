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

// Command-line front end: solve, check, play, extract.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hechler/dichotomy.hpp"
#include "hechler/games.hpp"
#include "hechler/proofkit.hpp"
#include "hechler/ramsey.hpp"
#include "hechler/text.hpp"

namespace {

using namespace hechler;

constexpr int kUsage = 2;
constexpr int kViolation = 1;

bool useColor() {
  return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

InstanceDocument load(const std::string& path) {
  const std::string text = readFile(path);
  try {
    return parseDocument(text);
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

template <class T>
T loadOne(const std::string& path, std::string_view what) {
  return soleForm<T>(load(path), what);
}

void emit(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(outPath, std::ios::binary);
  if (!out) throw Error("cannot write '" + outPath + "'");
  out << text;
}

struct SolveArgs {
  std::string instance;
  std::string filter = "frechet";
  std::string out;
};

int runSolve(const SolveArgs& a) {
  const auto p = loadOne<PairAutomaton>(a.instance, "automaton");
  Filter f = parseFilterSpec(a.filter);
  emit(to_string(solveDichotomy(p, f)) + "\n", a.out);
  return 0;
}

struct CheckArgs {
  std::string cert;
  std::string instance;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
};

int runCheck(const CheckArgs& a) {
  const auto cert = loadOne<DichotomyCertificate>(a.cert, "certificate");
  std::optional<PairAutomaton> expected;
  if (!a.instance.empty()) {
    expected = loadOne<PairAutomaton>(a.instance, "automaton");
  }
  CheckReport report;
  try {
    report = checkCertificate(cert, a.samples, a.seed,
                              expected ? &*expected : nullptr);
  } catch (const Error& e) {
    std::cout << "violation: " << e.what() << "\n";
    return kViolation;
  }
  for (const auto& v : report.violations) std::cout << "violation: " << v << "\n";
  if (!report.ok()) return kViolation;
  std::cout << "ok: " << to_string(cert.verdict) << ", "
            << report.samplesChecked << " sampled branches checked\n";
  return 0;
}

struct PlayArgs {
  GameKind game = GameKind::game1;
  std::string payoff;
  std::string role;
  std::string vs;
  std::string script;
  std::string transcript;
  std::size_t rounds = 20;
};

// The machine side of a match, built from a certificate for the payoff.
std::unique_ptr<Strategy> machineFor(const PlayArgs& a, Role human,
                                     const PairAutomaton& payoff) {
  std::optional<DichotomyCertificate> cert;
  if (a.vs.empty()) {
    Filter f = Filter::frechet();
    cert = solveDichotomy(payoff, f);
  } else {
    cert = loadOne<DichotomyCertificate>(a.vs, "certificate");
    if (cert->instanceHash != instanceHash(payoff)) {
      throw Error("certificate was issued for a different payoff");
    }
  }
  const bool miss = cert->verdict == Verdict::hechlerMiss;
  const RegularTree& tree = cert->tree;
  if (a.game == GameKind::game1) {
    // I wins Game 1 with a Hechler tree avoiding the payoff, II with a Laver
    // tree inside it.
    if (human == Role::II && miss) return g1StrategyFromHechler(tree);
    if (human == Role::I && !miss) return g1StrategyIIFromLaver(tree);
  } else {
    // I wins Game 2 with a Laver tree avoiding the payoff, II with a Hechler
    // tree inside it.
    Filter frechet = Filter::frechet();
    if (human == Role::II && miss) return g2StrategyFromLaverI(tree);
    if (human == Role::I && !miss && isHechlerModF(tree, frechet)) {
      return g2StrategyIIFromHechler(tree);
    }
  }
  throw Error(std::string("the ") + to_string(cert->verdict) +
              " certificate gives no winning strategy for Player " +
              (human == Role::I ? "II" : "I") + " in " + to_string(a.game));
}

int runPlay(const PlayArgs& a) {
  const auto payoff = loadOne<PairAutomaton>(a.payoff, "automaton");
  const Role human = a.role == "I" ? Role::I : Role::II;
  auto machine = machineFor(a, human, payoff);
  std::ifstream script;
  if (!a.script.empty()) {
    script.open(a.script);
    if (!script) throw Error("cannot read '" + a.script + "'");
  }
  std::istream& in = a.script.empty() ? std::cin : script;
  const GameTranscript t = interactiveSession(a.game, human, payoff, *machine,
                                              in, std::cout, a.rounds, useColor(),
                                              !a.script.empty() || !isatty(fileno(stdin)));
  if (a.transcript.empty()) {
    std::cout << "\n" << to_string(t);
  } else {
    emit(to_string(t), a.transcript);
  }
  return 0;
}

struct RamseyArgs {
  std::string coloring;
  std::size_t d = 2;
  std::size_t n = 10;
};

int runRamsey(const RamseyArgs& a) {
  const auto coloring = loadOne<PairAutomaton>(a.coloring, "automaton");
  const HomogeneousReport report = silverExtract(coloring, a.d, a.n);
  Filter replayed = Filter::replay(report.filter.seed, report.filter.decisions);
  const HomogeneousReport again = silverExtract(coloring, a.d, a.n, replayed);
  std::cout << "X";
  for (Natural x : report.x) std::cout << " " << x;
  std::cout << "\nside " << to_string(report.side) << "\nchecked "
            << report.subsetsChecked << " " << a.d << "-subsets, all "
            << (report.side == Side::inA ? "inside" : "outside") << " A"
            << "\nreplay " << (again.x == report.x ? "identical" : "DIFFERENT")
            << "\nfilter " << to_string(report.filter) << "\n";
  return again.x == report.x ? 0 : kViolation;
}

struct TreeArgs {
  std::string file;
  std::string scheme = "minimal";
  std::size_t length = 8;
  std::uint64_t seed = 0;
  std::string filter = "frechet";
};

int runTreeSample(const TreeArgs& a) {
  const auto t = loadOne<RegularTree>(a.file, "tree");
  SampleScheme scheme = SampleScheme::minimal;
  if (a.scheme == "random") scheme = SampleScheme::seededRandom;
  if (a.scheme == "lasso") scheme = SampleScheme::lasso;
  const BranchSample s = sampleBranch(t, scheme, a.length, a.seed);
  std::cout << to_string(s.nodes) << "\n";
  if (s.lasso) std::cout << to_string(*s.lasso) << "\n";
  return 0;
}

int runTreeClassify(const TreeArgs& a) {
  const auto t = loadOne<RegularTree>(a.file, "tree");
  Filter f = parseFilterSpec(a.filter);
  std::cout << to_string(classifyModF(t, f)) << "\n";
  return 0;
}

struct ProofkitArgs {
  std::string first;
  std::string second;
  std::string filter = "frechet";
};

int runUnion(const ProofkitArgs& a) {
  const auto family = loadOne<RootedFamily>(a.first, "family");
  Filter f = parseFilterSpec(a.filter);
  std::cout << to_string(lemma1Union(family, f)) << "\n";
  return 0;
}

int runIntersect(const ProofkitArgs& a) {
  const auto h = loadOne<RegularTree>(a.first, "tree");
  const auto levels = loadOne<LevelFamily>(a.second, "levels");
  Filter f = parseFilterSpec(a.filter);
  std::cout << to_string(syncIntersection(h, levels, f)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hechler/Laver dichotomy solver, certificate checker and game engine",
               "hechler"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solveCmd = app.add_subcommand("solve", "solve the dichotomy for an instance");
  solveCmd->add_option("instance", solve.instance, "instance file (aut ...)")->required();
  solveCmd->add_option("--filter", solve.filter, "frechet | density | ultra[:SET]");
  solveCmd->add_option("--out", solve.out, "write the certificate here");

  CheckArgs check;
  auto* checkCmd = app.add_subcommand("check", "verify a certificate");
  checkCmd->add_option("certificate", check.cert, "certificate file")->required();
  checkCmd->add_option("--samples", check.samples, "lasso branches to sample");
  checkCmd->add_option("--seed", check.seed, "sampling seed");
  checkCmd->add_option("--instance", check.instance, "expected instance file");

  PlayArgs play1, play2;
  play1.game = GameKind::game1;
  play2.game = GameKind::game2;
  std::vector<CLI::App*> playCmds;
  for (auto* args : {&play1, &play2}) {
    auto* gameCmd = app.add_subcommand(to_string(args->game),
                                       std::string("play ") + to_string(args->game));
    gameCmd->require_subcommand(1);
    auto* cmd = gameCmd->add_subcommand("play", "play against a derived strategy");
    cmd->add_option("--payoff", args->payoff, "payoff automaton")->required();
    cmd->add_option("--as", args->role, "your role")
        ->required()
        ->check(CLI::IsMember({"I", "II"}));
    cmd->add_option("--vs", args->vs, "certificate to derive the opponent from");
    cmd->add_option("--script", args->script, "read your moves from this file");
    cmd->add_option("--rounds", args->rounds, "round budget");
    cmd->add_option("--transcript", args->transcript, "write the transcript here");
    playCmds.push_back(cmd);
  }

  RamseyArgs ramsey;
  auto* ramseyCmd = app.add_subcommand("ramsey", "homogeneous sets");
  ramseyCmd->require_subcommand(1);
  auto* extractCmd = ramseyCmd->add_subcommand("extract", "homogeneous prefix for a coloring");
  extractCmd->add_option("--coloring", ramsey.coloring, "coloring automaton")->required();
  extractCmd->add_option("--d", ramsey.d, "subset size the coloring reads");
  extractCmd->add_option("--N", ramsey.n, "length of the prefix");

  TreeArgs tree;
  auto* treeCmd = app.add_subcommand("tree", "tree utilities");
  treeCmd->require_subcommand(1);
  auto* sampleCmd = treeCmd->add_subcommand("sample", "sample a branch");
  sampleCmd->add_option("tree", tree.file, "tree file")->required();
  sampleCmd->add_option("--scheme", tree.scheme, "minimal | random | lasso")
      ->check(CLI::IsMember({"minimal", "random", "lasso"}));
  sampleCmd->add_option("--length", tree.length, "nodes to produce");
  sampleCmd->add_option("--seed", tree.seed, "sampling seed");
  auto* classifyCmd = treeCmd->add_subcommand("classify", "hechler, laver or neither");
  classifyCmd->add_option("tree", tree.file, "tree file")->required();
  classifyCmd->add_option("--filter", tree.filter, "frechet | density | ultra[:SET]");

  ProofkitArgs kit;
  auto* kitCmd = app.add_subcommand("proofkit", "tree combinators");
  kitCmd->require_subcommand(1);
  auto* unionCmd = kitCmd->add_subcommand("union", "union of a rooted family");
  unionCmd->add_option("family", kit.first, "family file")->required();
  unionCmd->add_option("--filter", kit.filter, "frechet | density | ultra[:SET]");
  auto* intersectCmd = kitCmd->add_subcommand("intersect", "synchronized intersection");
  intersectCmd->add_option("tree", kit.first, "tree file")->required();
  intersectCmd->add_option("levels", kit.second, "levels file")->required();
  intersectCmd->add_option("--filter", kit.filter, "frechet | density | ultra[:SET]");

  if (argc < 2) {
    std::cerr << app.help();
    return kUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (solveCmd->parsed()) return runSolve(solve);
    if (checkCmd->parsed()) return runCheck(check);
    if (playCmds[0]->parsed()) return runPlay(play1);
    if (playCmds[1]->parsed()) return runPlay(play2);
    if (extractCmd->parsed()) return runRamsey(ramsey);
    if (sampleCmd->parsed()) return runTreeSample(tree);
    if (classifyCmd->parsed()) return runTreeClassify(tree);
    if (unionCmd->parsed()) return runUnion(kit);
    if (intersectCmd->parsed()) return runIntersect(kit);
  } catch (const std::exception& e) {
    std::cerr << "hechler: " << e.what() << "\n";
    return kUsage;
  }
  std::cerr << app.help();
  return kUsage;
}
