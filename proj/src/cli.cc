// Copyright 2026 The Ludo Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ludo_lab/cli.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "ludo_lab/analytics.h"
#include "ludo_lab/engine.h"
#include "ludo_lab/equilibrium.h"
#include "ludo_lab/fixtures.h"
#include "ludo_lab/montecarlo.h"
#include "ludo_lab/table_io.h"

namespace ludo_lab {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Bad names or values on the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::string variant = "2p3d";
  int turns = 16;
  std::string profile;
  std::uint64_t games = 0;  // 0: variant default
  std::uint64_t seed = 42;
  int workers = 0;
  std::string out_path;
  std::string format;
  std::string epsilon = "0";
  std::string fixture;
  std::string table_path;
  std::uint64_t game_index = 0;
  bool sweep_seed = false;
  bool variant_given = false;
};

GameConfig ResolveConfig(const RunOptions& o) {
  const auto variant = ParseVariant(o.variant);
  if (!variant) throw UsageError("unknown variant '" + o.variant + "'");
  if (o.turns <= 0) {
    throw UsageError("turns must be positive, got " + std::to_string(o.turns));
  }
  return GameConfig::Make(*variant, o.turns);
}

Profile ResolveProfile(const RunOptions& o, const GameConfig& config) {
  const auto profile = ParseProfile(o.profile);
  if (!profile) throw UsageError("unknown profile '" + o.profile + "'");
  if (static_cast<int>(profile->size()) != config.seats()) {
    throw UsageError("profile needs " + std::to_string(config.seats()) +
                     " strategies");
  }
  return *profile;
}

std::uint64_t ResolveGames(const RunOptions& o, const GameConfig& config) {
  if (o.games > 0) return o.games;
  return config.seats() == 2 ? 10000 : 1000;
}

void CheckFormat(const std::string& format,
                 std::initializer_list<std::string_view> allowed) {
  for (std::string_view a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported format '" + format + "'");
}

json ConfigJson(const GameConfig& config) {
  return {{"variant", VariantName(config.variant)},
          {"turns", config.total_turns}};
}

json Manifest(std::string_view command, json config, json seed,
              Clock::time_point start) {
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return {{"command", command},
          {"config", std::move(config)},
          {"seed", std::move(seed)},
          {"version", kVersion},
          {"duration_s", std::round(seconds * 1000.0) / 1000.0}};
}

void Emit(const RunOptions& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + o.out_path + "'");
  file << text;
  if (!file) throw std::runtime_error("write failed for '" + o.out_path + "'");
}

std::string ReadFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

std::string TextTable(const ResultTable& table) {
  std::ostringstream ss;
  const int w = 9;
  ss << std::left << std::setw(table.seats == 2 ? 10 : 18) << "profile"
     << std::right << std::setw(w) << "games";
  for (int s = 0; s < table.seats; ++s) {
    ss << std::setw(w) << ("win" + std::to_string(s + 1));
  }
  ss << std::setw(w) << "draw";
  for (int s = 0; s < table.seats; ++s) {
    ss << std::setw(w) << ("mean" + std::to_string(s + 1))
       << std::setw(w) << ("sd" + std::to_string(s + 1));
  }
  ss << "\n";
  auto cell = [](const std::optional<double>& v) {
    return v ? Format2(*v) : std::string("-");
  };
  for (const ResultRow& r : table.rows) {
    ss << std::left << std::setw(table.seats == 2 ? 10 : 18)
       << FormatProfile(r.profile) << std::right << std::setw(w) << r.games;
    for (const auto& v : r.win_pct) ss << std::setw(w) << cell(v);
    ss << std::setw(w) << cell(r.draw_pct);
    for (int s = 0; s < table.seats; ++s) {
      ss << std::setw(w) << cell(r.mean[s]) << std::setw(w) << cell(r.sd[s]);
    }
    ss << "\n";
  }
  return ss.str();
}

std::string RenderTable(const ResultTable& table, const std::string& format) {
  if (format == "csv") return WriteCsv(table);
  if (format == "json") return ToJson(table).dump(2) + "\n";
  return TextTable(table);
}

int CmdSimulate(const RunOptions& o, std::ostream& out) {
  const auto start = Clock::now();
  const GameConfig config = ResolveConfig(o);
  const Profile profile = ResolveProfile(o, config);
  const std::uint64_t n = ResolveGames(o, config);
  const std::string format = o.format.empty() ? "text" : o.format;
  CheckFormat(format, {"text", "csv", "json"});
  PayoffTable payoff{config, n, o.seed, {}};
  payoff.rows.push_back({profile, Simulate(config, profile, n, o.seed, o.workers)});
  ResultTable table = ToResultTable(payoff);
  json cfg = ConfigJson(config);
  cfg["profile"] = FormatProfile(profile);
  cfg["games"] = n;
  table.manifest = Manifest("simulate", cfg, o.seed, start);
  Emit(o, out, RenderTable(table, format));
  return kExitOk;
}

ResultTable RunSweep(const RunOptions& o, Clock::time_point start) {
  const GameConfig config = ResolveConfig(o);
  const std::uint64_t n = ResolveGames(o, config);
  ResultTable table = ToResultTable(Sweep(config, n, o.seed, o.workers));
  json cfg = ConfigJson(config);
  cfg["games"] = n;
  table.manifest = Manifest("sweep", cfg, o.seed, start);
  return table;
}

int CmdSweep(const RunOptions& o, std::ostream& out) {
  const auto start = Clock::now();
  const std::string format = o.format.empty() ? "csv" : o.format;
  CheckFormat(format, {"text", "csv", "json"});
  Emit(o, out, RenderTable(RunSweep(o, start), format));
  return kExitOk;
}

double ResolveEpsilon(const std::string& text, std::uint64_t n) {
  if (text == "se") return StdError(n);
  if (text == "2se") return 2.0 * StdError(n);
  double v = 0;
  std::size_t used = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v >= 0) || !std::isfinite(v)) {
    throw UsageError("epsilon must be a non-negative number, 'se' or '2se'");
  }
  return v;
}

int CmdNe(const RunOptions& o, std::ostream& out) {
  const auto start = Clock::now();
  const std::string format = o.format.empty() ? "json" : o.format;
  CheckFormat(format, {"text", "json"});
  if (!o.fixture.empty() && !o.table_path.empty()) {
    throw UsageError("--fixture and --table are mutually exclusive");
  }
  ResultTable table;
  json variant = nullptr;
  json turns = nullptr;
  std::uint64_t n = 0;
  json cfg;
  json seed = nullptr;
  if (!o.fixture.empty()) {
    const auto id = ParseFixture(o.fixture);
    if (!id) throw UsageError("unknown fixture '" + o.fixture + "'");
    table = LoadFixtureTable(*id);
    const GameConfig config = FixtureConfig(*id);
    variant = VariantName(config.variant);
    turns = config.total_turns;
    n = GamesPerProfile(table);
    cfg = {{"fixture", o.fixture}};
  } else if (!o.table_path.empty()) {
    table = ParseCsv(ReadFile(o.table_path));
    n = GamesPerProfile(table);
    if (table.manifest && table.manifest->contains("config")) {
      const json& c = (*table.manifest)["config"];
      variant = c.value("variant", json(nullptr));
      turns = c.value("turns", json(nullptr));
      if (c.contains("games")) n = c["games"].get<std::uint64_t>();
      seed = table.manifest->value("seed", json(nullptr));
    }
    cfg = {{"table", o.table_path}};
  } else {
    table = RunSweep(o, start);
    const GameConfig config = ResolveConfig(o);
    variant = VariantName(config.variant);
    turns = config.total_turns;
    n = GamesPerProfile(table);
    cfg = ConfigJson(config);
    cfg["games"] = n;
    seed = o.seed;
  }
  const double eps = ResolveEpsilon(o.epsilon, n);
  const EquilibriumReport report = EpsilonNe(ToWinTable(table), eps);
  if (format == "text") {
    std::ostringstream ss;
    ss << "epsilon " << Format2(eps) << " over n = " << n << ": "
       << report.profiles.size() << " profile(s)\n";
    for (const Profile& p : report.profiles) {
      ss << "(" << FormatProfile(p, ',') << ")\n";
    }
    Emit(o, out, ss.str());
    return kExitOk;
  }
  json profiles = json::array();
  for (const Profile& p : report.profiles) {
    json names = json::array();
    for (StrategyKind k : p) names.push_back(StrategyName(k));
    profiles.push_back(std::move(names));
  }
  cfg["epsilon"] = o.epsilon;
  json j = {{"variant", variant},
            {"turns", turns},
            {"n", n},
            {"epsilon", eps},
            {"profiles", std::move(profiles)},
            {"manifest", Manifest("ne", cfg, seed, start)}};
  Emit(o, out, j.dump(2) + "\n");
  return kExitOk;
}

// Trims trailing zeros: 73.00 -> 73, 90.50 -> 90.5.
std::string Short(double v) {
  std::string s = Format2(v);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string Half(double v) { return v == 0.5 ? "1/2" : Short(v); }

std::string Pair(const std::pair<double, double>& p,
                 std::string (*fmt)(double)) {
  return "(" + fmt(p.first) + ", " + fmt(p.second) + ")";
}

std::string Render3x3(const std::string& corner, const Bimatrix& m,
                      std::string (*fmt)(double)) {
  std::ostringstream ss;
  ss << std::left << std::setw(14) << corner;
  for (AnalyticStrategy s : kAllAnalyticStrategies) {
    ss << std::setw(20) << ("(" + std::string(AnalyticName(s)) + ")");
  }
  ss << "\n";
  for (int r = 0; r < 3; ++r) {
    ss << std::setw(14)
       << ("(" + std::string(AnalyticName(kAllAnalyticStrategies[r])) + ")");
    for (int c = 0; c < 3; ++c) ss << std::setw(20) << Pair(m[r][c], fmt);
    ss << "\n";
  }
  return ss.str();
}

std::vector<std::array<AnalyticStrategy, 4>> PpSProfiles() {
  std::vector<std::array<AnalyticStrategy, 4>> out;
  for (int code = 0; code < 16; ++code) {
    std::array<AnalyticStrategy, 4> p;
    for (int s = 0; s < 4; ++s) {
      p[s] = (code >> (3 - s)) & 1 ? AnalyticStrategy::kS
                                   : AnalyticStrategy::kPP;
    }
    out.push_back(p);
  }
  return out;
}

std::string AnalyticProfileName(std::span<const AnalyticStrategy> p) {
  std::string s;
  for (AnalyticStrategy a : p) {
    if (!s.empty()) s += ',';
    s += AnalyticName(a);
  }
  return s;
}

int CmdExpected(const RunOptions& o, std::ostream& out) {
  const auto start = Clock::now();
  const std::string format = o.format.empty() ? "text" : o.format;
  CheckFormat(format, {"text", "json"});
  bool two = true;
  bool four = true;
  if (o.variant_given) {
    const auto v = ParseVariant(o.variant);
    if (!v) throw UsageError("unknown variant '" + o.variant + "'");
    two = *v == Variant::kTwoPlayerThreeDice;
    four = !two;
  }
  const Bimatrix points = ExpectedPayoffTable2p();
  const Bimatrix wins = WinTable2p();
  if (format == "text") {
    std::ostringstream ss;
    if (two) {
      ss << "expected movement points, 24 picks: "
         << Format2(ExpectedTotalPoints(24)) << "\n\n";
      ss << "points on the expected path, 16 turns\n"
         << Render3x3("points", points, Short) << "\n";
      ss << "win/loss on the expected path, 16 turns\n"
         << Render3x3("payoff (W/L)", wins, Half) << "\n";
      ss << "re-derived cells (flag: differs from the table by more than "
         << Short(kRederiveTolerance) << ")\n";
      for (AnalyticStrategy r : kAllAnalyticStrategies) {
        for (AnalyticStrategy c : kAllAnalyticStrategies) {
          const Rederivation2p d = RederivePayoff2p(r, c);
          ss << "  " << std::left << std::setw(8)
             << (std::string(AnalyticName(r)) + "/" + std::string(AnalyticName(c)))
             << " derived (" << Format2(d.derived.first) << ", "
             << Format2(d.derived.second) << ")  table "
             << Pair(d.printed, Short) << (d.discrepancy ? "  FLAG" : "")
             << "\n";
        }
      }
      if (four) ss << "\n";
    }
    if (four) {
      ss << "expected movement points, 20 picks: "
         << Format2(ExpectedTotalPoints(20)) << "\n\n";
      ss << "four-seat expected points, 16 turns\n";
      for (const auto& p : PpSProfiles()) {
        const auto v = ExpectedPayoffs4p(p);
        ss << "  " << std::left << std::setw(14) << AnalyticProfileName(p)
           << std::right;
        for (const SeatPayoff4p& seat : v) ss << std::setw(9) << Format2(seat.value);
        if (v[0].discrepancy) {
          ss << "  FLAG printed " << Format2(*v[0].printed);
        }
        ss << "\n";
      }
    }
    Emit(o, out, ss.str());
    return kExitOk;
  }
  json j;
  auto matrix = [](const Bimatrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& [a, b] : row) r.push_back({a, b});
      rows.push_back(std::move(r));
    }
    return rows;
  };
  json names = json::array();
  for (AnalyticStrategy s : kAllAnalyticStrategies) names.push_back(AnalyticName(s));
  if (two) {
    json rederived = json::array();
    for (AnalyticStrategy r : kAllAnalyticStrategies) {
      for (AnalyticStrategy c : kAllAnalyticStrategies) {
        const Rederivation2p d = RederivePayoff2p(r, c);
        rederived.push_back({{"row", AnalyticName(r)},
                             {"col", AnalyticName(c)},
                             {"derived", {d.derived.first, d.derived.second}},
                             {"printed", {d.printed.first, d.printed.second}},
                             {"discrepancy", d.discrepancy}});
      }
    }
    j["two_player"] = {{"strategies", names},
                       {"expected_total_points", ExpectedTotalPoints(24)},
                       {"points", matrix(points)},
                       {"win", matrix(wins)},
                       {"rederived", std::move(rederived)}};
  }
  if (four) {
    json rows = json::array();
    for (const auto& p : PpSProfiles()) {
      json seats = json::array();
      for (const SeatPayoff4p& seat : ExpectedPayoffs4p(p)) {
        json s = {{"value", seat.value}, {"discrepancy", seat.discrepancy}};
        if (seat.printed) s["printed"] = *seat.printed;
        seats.push_back(std::move(s));
      }
      rows.push_back({{"profile", AnalyticProfileName(p)}, {"seats", seats}});
    }
    j["four_player"] = {{"expected_total_points", ExpectedTotalPoints(20)},
                        {"payoffs", std::move(rows)}};
  }
  json cfg = json::object();
  if (o.variant_given) cfg["variant"] = o.variant;
  j["manifest"] = Manifest("expected", cfg, nullptr, start);
  Emit(o, out, j.dump(2) + "\n");
  return kExitOk;
}

int CmdFixtures(const RunOptions& o, std::ostream& out) {
  if (o.fixture.empty()) {
    const std::string format = o.format.empty() ? "text" : o.format;
    CheckFormat(format, {"text", "json"});
    json list = json::array();
    std::ostringstream ss;
    for (FixtureId id : kAllFixtures) {
      const GameConfig c = FixtureConfig(id);
      const ResultTable t = LoadFixtureTable(id);
      ss << std::left << std::setw(6) << FixtureName(id) << VariantName(c.variant)
         << "  turns " << std::setw(3) << c.total_turns << "profiles "
         << std::setw(3) << t.rows.size() << "games/profile "
         << GamesPerProfile(t) << "\n";
      list.push_back({{"fixture", FixtureName(id)},
                      {"variant", VariantName(c.variant)},
                      {"turns", c.total_turns},
                      {"profiles", t.rows.size()},
                      {"games", GamesPerProfile(t)}});
    }
    Emit(o, out, format == "json" ? list.dump(2) + "\n" : ss.str());
    return kExitOk;
  }
  const auto id = ParseFixture(o.fixture);
  if (!id) throw UsageError("unknown fixture '" + o.fixture + "'");
  const std::string format = o.format.empty() ? "csv" : o.format;
  CheckFormat(format, {"text", "csv", "json"});
  Emit(o, out, RenderTable(LoadFixtureTable(*id), format));
  return kExitOk;
}

int CmdReplay(const RunOptions& o, std::ostream& out) {
  const GameConfig config = ResolveConfig(o);
  const Profile profile = ResolveProfile(o, config);
  std::uint64_t master = o.seed;
  if (o.sweep_seed) master = DeriveGameSeed(o.seed, ProfileRank(profile));
  const std::uint64_t game_seed = DeriveGameSeed(master, o.game_index);
  Transcript transcript;
  const GameResult result = PlayGame(config, profile, game_seed, &transcript);
  std::ostringstream ss;
  ss << "# " << VariantName(config.variant) << " turns " << config.total_turns
     << " profile " << FormatProfile(profile) << " seed " << o.seed
     << (o.sweep_seed ? " (sweep)" : "") << " game " << o.game_index << "\n";
  ss << "turn\tmover\tsource\tdie\ttoken\tfrom\tto\tflags\n";
  for (const TranscriptEvent& e : transcript) ss << e.ToLine() << "\n";
  ss << "points";
  for (int s = 0; s < result.num_seats; ++s) ss << "\t" << result.points[s];
  ss << "\nwinner\t"
     << (result.winner ? std::to_string(*result.winner + 1) : std::string("draw"))
     << "\n";
  Emit(o, out, ss.str());
  return kExitOk;
}

void AddRunFlags(CLI::App* cmd, RunOptions& o, bool with_profile) {
  cmd->add_option("--variant", o.variant, "2p3d or 4p5d");
  cmd->add_option("--turns", o.turns, "Turns per game");
  if (with_profile) {
    cmd->add_option("--profile", o.profile, "Strategies per seat, e.g. A,N")
        ->required();
  }
  cmd->add_option("--seed", o.seed, "Master seed");
}

void AddBatchFlags(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--games", o.games,
                  "Games per profile (default 10000 for 2p3d, 1000 for 4p5d)");
  cmd->add_option("--workers", o.workers, "Worker threads")
      ->envname("LUDO_LAB_WORKERS");
}

void AddOutputFlags(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--out", o.out_path, "Write to this file instead of stdout");
  cmd->add_option("--format", o.format, "csv, json or text");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Multi-dice Ludo simulator and equilibrium toolkit", "ludo_lab"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  RunOptions o;
  std::function<int()> action;

  auto* simulate = app.add_subcommand("simulate", "Simulate one profile");
  AddRunFlags(simulate, o, true);
  AddBatchFlags(simulate, o);
  AddOutputFlags(simulate, o);
  simulate->callback([&] { action = [&] { return CmdSimulate(o, out); }; });

  auto* sweep = app.add_subcommand("sweep", "Simulate every profile");
  AddRunFlags(sweep, o, false);
  AddBatchFlags(sweep, o);
  AddOutputFlags(sweep, o);
  sweep->callback([&] { action = [&] { return CmdSweep(o, out); }; });

  auto* ne = app.add_subcommand("ne", "Epsilon-Nash equilibria of a table");
  AddRunFlags(ne, o, false);
  AddBatchFlags(ne, o);
  AddOutputFlags(ne, o);
  ne->add_option("--epsilon", o.epsilon, "Number, se or 2se");
  ne->add_option("--fixture", o.fixture, "Embedded table, e.g. 2p16");
  ne->add_option("--table", o.table_path, "CSV table written by sweep");
  ne->callback([&] { action = [&] { return CmdNe(o, out); }; });

  auto* expected = app.add_subcommand("expected", "Expected-path tables");
  expected->add_option("--variant", o.variant, "2p3d or 4p5d (default both)");
  expected->add_option("--format", o.format, "text or json");
  expected->add_option("--out", o.out_path, "Write to this file");
  expected->callback([&] {
    o.variant_given = expected->count("--variant") > 0;
    action = [&] { return CmdExpected(o, out); };
  });

  auto* fixtures = app.add_subcommand("fixtures", "List or print fixtures");
  fixtures->add_option("--fixture", o.fixture, "Fixture to print");
  AddOutputFlags(fixtures, o);
  fixtures->callback([&] { action = [&] { return CmdFixtures(o, out); }; });

  auto* replay = app.add_subcommand("replay", "Print the transcript of a game");
  AddRunFlags(replay, o, true);
  replay->add_option("--game-index", o.game_index, "Game number in the run");
  replay->add_flag("--sweep", o.sweep_seed,
                   "Use the profile's seed within a sweep");
  replay->add_option("--out", o.out_path, "Write to this file");
  replay->callback([&] { action = [&] { return CmdReplay(o, out); }; });

  std::vector<std::string> argv_store = {"ludo_lab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace ludo_lab
