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

#include "ludo_lab/montecarlo.h"

#include <cmath>
#include <set>

#include "doctest.h"

using namespace ludo_lab;

namespace {

const GameConfig k2p = GameConfig::Make(Variant::kTwoPlayerThreeDice, 16);
const GameConfig k4p = GameConfig::Make(Variant::kFourPlayerFiveDice, 8);

GameResult Result2(int a, int b) {
  GameResult r;
  r.num_seats = 2;
  r.points[0] = a;
  r.points[1] = b;
  if (a != b) r.winner = a > b ? 0 : 1;
  return r;
}

}  // namespace

TEST_CASE("splitmix64 reference outputs") {
  SplitMix64 zero(0);
  CHECK(zero.Next() == 0xE220A8397B1DCDAFULL);
  SplitMix64 ref(1234567);
  CHECK(ref.Next() == 6457827717110365317ULL);
  CHECK(ref.Next() == 3203168211198807973ULL);
}

TEST_CASE("game seeds spread the golden gamma over the game index") {
  // Avalanche of master ^ (i + 1) * gamma, written out by hand.
  auto mix = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  };
  for (std::uint64_t master : {0ULL, 42ULL, 0xDEADBEEFULL}) {
    for (std::uint64_t i : {0ULL, 1ULL, 9999ULL}) {
      CHECK(DeriveGameSeed(master, i) ==
            mix(master ^ ((i + 1) * 0x9E3779B97F4A7C15ULL)));
    }
  }
  // Game 0 of master 0 is the first splitmix64 output of seed 0.
  CHECK(DeriveGameSeed(0, 0) == 0xE220A8397B1DCDAFULL);
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(DeriveGameSeed(42, i));
  CHECK(seen.size() == 1000);
}

TEST_CASE("die mapping splits the 64-bit range into sixths") {
  CHECK(DieFromU64(0) == 1);
  CHECK(DieFromU64(~0ULL) == 6);
  const unsigned __int128 range = static_cast<unsigned __int128>(1) << 64;
  for (int k = 1; k < 6; ++k) {
    // Smallest x with 6x >= k * 2^64.
    const auto edge = static_cast<std::uint64_t>((range * k + 5) / 6);
    CHECK(DieFromU64(edge) == k + 1);
    CHECK(DieFromU64(edge - 1) == k);
  }
}

TEST_CASE("dice are close to uniform") {
  RngDice dice(2024);
  std::array<int, 7> counts{};
  const int n = 60000;
  for (int i = 0; i < n; ++i) ++counts[dice.Roll()];
  for (int f = 1; f <= 6; ++f) {
    CHECK(std::abs(counts[f] - n / 6) < 400);  // about 4.4 sd
  }
}

TEST_CASE("stats from hand-computed games") {
  MatchStats s;
  s.num_seats = 2;
  s.Add(Result2(10, 4));
  s.Add(Result2(6, 6));
  s.Add(Result2(2, 8));
  s.Add(Result2(6, 2));
  CHECK(s.games == 4);
  CHECK(s.draws == 1);
  CHECK(s.WinPct(0) == doctest::Approx(50.0));
  CHECK(s.WinPct(1) == doctest::Approx(25.0));
  CHECK(s.DrawPct() == doctest::Approx(25.0));
  CHECK(s.Mean(0) == doctest::Approx(6.0));
  // Seat 0 deviations 4, 0, -4, 0: population variance 8.
  CHECK(s.Sd(0) == doctest::Approx(std::sqrt(8.0)));
  // Seat 1: 4, 6, 8, 2, mean 5, deviations -1, 1, 3, -3: variance 5.
  CHECK(s.Sd(1) == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("empty stats are zero") {
  MatchStats s;
  CHECK(s.WinPct(0) == 0.0);
  CHECK(s.Mean(1) == 0.0);
  CHECK(s.Sd(0) == 0.0);
}

TEST_CASE("merge order does not matter") {
  MatchStats a, b, c;
  a.Add(Result2(1, 2));
  b.Add(Result2(9, 3));
  b.Add(Result2(4, 4));
  c.Add(Result2(7, 0));
  MatchStats x = a;
  x.Merge(b);
  x.Merge(c);
  MatchStats y = c;
  y.Merge(a);
  y.Merge(b);
  CHECK(x == y);
}

TEST_CASE("parallel and serial paths agree for any worker count") {
  const Profile p = {StrategyKind::kResponsiblePair, StrategyKind::kAggressive};
  const MatchStats serial = SimulateSerial(k2p, p, 300, 17);
  for (int w : {1, 2, 3, 8}) CHECK(Simulate(k2p, p, 300, 17, w) == serial);
  const Profile q(4, StrategyKind::kNaive);
  CHECK(Simulate(k4p, q, 101, 5, 4) == SimulateSerial(k4p, q, 101, 5));
}

TEST_CASE("simulate rejects a profile of the wrong size") {
  CHECK_THROWS(Simulate(k2p, Profile(4, StrategyKind::kNaive), 1, 1, 1));
}

TEST_CASE("stats tally every game") {
  const MatchStats s =
      Simulate(k2p, {StrategyKind::kNaive, StrategyKind::kNaive}, 200, 3, 2);
  CHECK(s.games == 200);
  CHECK(s.wins[0] + s.wins[1] + s.draws == 200);
}

TEST_CASE("profiles are enumerated lexicographically") {
  const auto two = AllProfiles(2);
  REQUIRE(two.size() == 9);
  CHECK(two[0] == Profile{StrategyKind::kNaive, StrategyKind::kNaive});
  CHECK(two[1] == Profile{StrategyKind::kNaive, StrategyKind::kAggressive});
  CHECK(two[3] == Profile{StrategyKind::kAggressive, StrategyKind::kNaive});
  CHECK(two[8] == Profile{StrategyKind::kResponsiblePair,
                          StrategyKind::kResponsiblePair});
  const auto four = AllProfiles(4);
  REQUIRE(four.size() == 81);
  for (int i = 0; i < 81; ++i) CHECK(ProfileRank(four[i]) == i);
}

TEST_CASE("sweep seeds each profile from its rank") {
  const PayoffTable t = Sweep(k2p, 50, 11, 2);
  REQUIRE(t.rows.size() == 9);
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    CHECK(t.rows[k].stats ==
          SimulateSerial(k2p, t.rows[k].profile, 50, DeriveGameSeed(11, k)));
  }
}
