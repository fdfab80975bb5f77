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

#include "ludo_lab/engine.h"

#include <map>
#include <stdexcept>

#include "doctest.h"
#include "oracles.h"

using namespace ludo_lab;
using ludo_lab::testing::ScriptedDice;

namespace {

const GameConfig k2p = GameConfig::Make(Variant::kTwoPlayerThreeDice, 16);
const GameConfig k4p = GameConfig::Make(Variant::kFourPlayerFiveDice, 16);

Profile P(const char* text) { return *ParseProfile(text); }

}  // namespace

TEST_CASE("variant names") {
  CHECK(VariantName(Variant::kTwoPlayerThreeDice) == "2p3d");
  CHECK(ParseVariant("4p5d") == Variant::kFourPlayerFiveDice);
  CHECK(ParseVariant("2p") == Variant::kTwoPlayerThreeDice);
  CHECK_FALSE(ParseVariant("3p").has_value());
}

TEST_CASE("config") {
  CHECK_THROWS_AS(GameConfig::Make(Variant::kTwoPlayerThreeDice, 0),
                  std::invalid_argument);
  CHECK(k2p.picks_per_seat() == 24);
  CHECK(k4p.picks_per_seat() == 20);
  CHECK(GameConfig::Make(Variant::kTwoPlayerThreeDice, 20).picks_per_seat() == 30);
  CHECK(GameConfig::Make(Variant::kFourPlayerFiveDice, 8).picks_per_seat() == 10);
  CHECK(k2p.canonical());
  CHECK_FALSE(GameConfig::Make(Variant::kFourPlayerFiveDice, 20).canonical());
}

TEST_CASE("pick order: owner first and last") {
  CHECK(PickSequence(Variant::kTwoPlayerThreeDice, 0) == std::vector{0, 1, 0});
  CHECK(PickSequence(Variant::kTwoPlayerThreeDice, 3) == std::vector{1, 0, 1});
  CHECK(PickSequence(Variant::kFourPlayerFiveDice, 2) ==
        std::vector{2, 3, 0, 1, 2});
  // Over a full game each seat picks the same number of pool dice.
  for (const GameConfig& c : {k2p, k4p}) {
    std::map<int, int> picks;
    for (int t = 0; t < c.total_turns; ++t) {
      for (int s : PickSequence(c.variant, t)) ++picks[s];
    }
    for (int s = 0; s < c.seats(); ++s) CHECK(picks[s] == c.picks_per_seat());
  }
}

TEST_CASE("profile size must match") {
  CHECK_THROWS_AS(GameState(k2p, P("N,N,N,N")), std::invalid_argument);
}

TEST_CASE("capture resets the victim and its points") {
  GameState g(k2p, P("N,N"));
  g.mutable_board().positions[0] = {3, 0, 0, 0};
  g.mutable_board().positions[1] = {30, 0, 0, 0};  // cell 4
  g.SyncScores();
  DicePool pool{1};
  const ActionResult r = g.ApplyAction(0, pool, {0, 0});
  CHECK(r.captured.size() == 1);
  CHECK(r.extra_granted);
  CHECK(g.board().pos(1, 0) == 0);
  CHECK(g.Score(0) == 4);
  CHECK(g.Score(1) == 0);
  CHECK(g.Score(1) == g.RecomputeScore(1));
}

TEST_CASE("promotion earns the bonus and an extra move") {
  GameState g(k2p, P("N,N"));
  g.mutable_board().positions[0] = {53, 0, 0, 0};
  g.SyncScores();
  DicePool pool{3};
  const ActionResult r = g.ApplyAction(0, pool, {0, 0});
  CHECK(r.promoted);
  CHECK(r.extra_granted);
  CHECK(g.Score(0) == 56 + 56);
  CHECK(g.promotions(0) == 1);
}

TEST_CASE("illegal actions throw") {
  GameState g(k2p, P("N,N"));
  g.mutable_board().positions[0] = {55, 56, 56, 56};
  DicePool pool{2};
  CHECK_THROWS_AS(g.ApplyAction(0, pool, {0, 0}), std::logic_error);
  CHECK_THROWS_AS(g.ApplyAction(0, pool, {0, 1}), std::logic_error);
}

TEST_CASE("third consecutive six is void") {
  GameState g(k2p, P("N,N"));
  Transcript tr;
  g.set_transcript(&tr);
  ScriptedDice extras({6, 6, 4});
  const std::array<int, 3> pool = {6, 1, 1};
  g.PlayTurn(pool, extras);
  // 6 from the pool, one 6 extra, then a void six; the 4 is never rolled.
  CHECK(extras.used() == 2);
  CHECK(g.board().pos(0, 0) == 6 + 6 + 1);
  CHECK(g.board().pos(1, 0) == 1);
  REQUIRE(tr.size() == 5);
  CHECK(tr[2].flags == kFlagVoidSix);
  CHECK(tr[2].token == -1);
  CHECK(tr[2].ToLine() == "0\t0\textra:1\t6\t-\t-\t-\tV");
  CHECK(tr[0].ToLine() == "0\t0\tpool:0\t6\t0\t0\t6\tX");
}

TEST_CASE("forfeit burns the lowest-index die") {
  GameState g(k2p, P("N,N"));
  g.mutable_board().positions[1] = {56, 56, 56, 56};
  g.SyncScores();
  Transcript tr;
  g.set_transcript(&tr);
  ScriptedDice extras({});
  const std::array<int, 3> pool = {2, 3, 4};
  g.PlayTurn(pool, extras);
  REQUIRE(tr.size() == 3);
  CHECK(tr[1].mover == 1);
  CHECK(tr[1].source_index == 1);
  CHECK(tr[1].token == -1);
  CHECK(g.board().pos(0, 0) == 2 + 4);
}

TEST_CASE("pool size must match the variant") {
  GameState g(k2p, P("N,N"));
  ScriptedDice extras({});
  const std::array<int, 2> pool = {1, 2};
  CHECK_THROWS_AS(g.PlayTurn(pool, extras), std::invalid_argument);
}

TEST_CASE("game ends after the configured turns") {
  GameState g(GameConfig::Make(Variant::kTwoPlayerThreeDice, 2), P("N,A"));
  RngDice dice(5);
  g.PlayTurn(dice);
  g.PlayTurn(dice);
  CHECK(g.finished());
  CHECK_THROWS_AS(g.PlayTurn(dice), std::logic_error);
}

TEST_CASE("one-turn game matches the closed form for every pool") {
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      for (int c = 1; c <= 6; ++c) {
        const std::array<int, 3> pool = {a, b, c};
        for (const char* prof : {"N,N", "A,A"}) {
          GameState g(GameConfig::Make(Variant::kTwoPlayerThreeDice, 1), P(prof));
          ScriptedDice ones({}, 1);
          g.PlayTurn(pool, ones);
          const auto want = prof[0] == 'N'
                                ? ludo_lab::testing::MiniGameNaive(pool)
                                : ludo_lab::testing::MiniGameAggressive(pool);
          CHECK(g.Score(0) == want.first);
          CHECK(g.Score(1) == want.second);
        }
      }
    }
  }
}

TEST_CASE("results and draws") {
  GameState g(k2p, P("N,N"));
  g.mutable_board().positions[0] = {5, 0, 0, 0};
  g.mutable_board().positions[1] = {2, 3, 0, 0};
  g.SyncScores();
  CHECK(g.Result().draw());
  g.mutable_board().positions[1] = {2, 4, 0, 0};
  g.SyncScores();
  CHECK(g.Result().winner == 1);
}

TEST_CASE("whole games are deterministic and keep tracked scores exact") {
  for (const char* prof : {"N,A", "RP,A", "RP,RP"}) {
    const GameResult a = PlayGame(k2p, P(prof), 99);
    const GameResult b = PlayGame(k2p, P(prof), 99);
    CHECK(a.points == b.points);
  }
  GameState g(k4p, P("RP,A,N,RP"));
  RngDice dice(7);
  while (!g.finished()) {
    g.PlayTurn(dice);
    for (int s = 0; s < 4; ++s) CHECK(g.Score(s) == g.RecomputeScore(s));
  }
}
