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

#include "ludo_lab/equilibrium.h"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace ludo_lab;

namespace {

constexpr StrategyKind N = StrategyKind::kNaive;
constexpr StrategyKind A = StrategyKind::kAggressive;
constexpr StrategyKind R = StrategyKind::kResponsiblePair;

// Fills a two-seat table from row-player win percentages with no draws.
WinTable TwoSeat(const std::array<std::array<double, 3>, 3>& row_win) {
  WinTable t(2);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      t.Set({kAllStrategies[r], kAllStrategies[c]},
            {row_win[r][c], 100.0 - row_win[r][c]});
    }
  }
  return t;
}

}  // namespace

TEST_CASE("standard error of a win percentage") {
  CHECK(StdError(10000) == doctest::Approx(0.5));
  CHECK(StdError(1000) == doctest::Approx(std::sqrt(10.0) / 2));
  CHECK(StdError(1) == doctest::Approx(50.0));
  CHECK_THROWS_AS(StdError(0), std::invalid_argument);
}

TEST_CASE("win table storage") {
  WinTable t(2);
  CHECK(t.FirstMissing() == Profile{N, N});
  t.Set({N, N}, {50, 50});
  CHECK(t.Has({N, N}));
  CHECK_FALSE(t.Has({N, A}));
  CHECK(t.FirstMissing() == Profile{N, A});
  CHECK(t.Get({N, N})[1] == 50);
  CHECK_THROWS_AS(t.Get({A, R}), std::invalid_argument);
  CHECK_THROWS(t.Set({N}, {1}));
  CHECK_THROWS(t.Set({N, N}, {1}));
}

TEST_CASE("incomplete tables are rejected") {
  WinTable t(2);
  t.Set({N, N}, {50, 50});
  CHECK_THROWS_AS(EpsilonNe(t, 0), std::invalid_argument);
}

TEST_CASE("dominant strategy equilibrium") {
  // Row and column both do best with A whatever the other plays.
  const WinTable t = TwoSeat({{{50, 20, 40}, {80, 50, 70}, {60, 30, 50}}});
  const auto r = EpsilonNe(t, 0);
  REQUIRE(r.profiles.size() == 1);
  CHECK(r.profiles[0] == Profile{A, A});
}

TEST_CASE("a deviation gaining exactly epsilon does not disqualify") {
  const WinTable t = TwoSeat({{{50, 49, 49}, {51, 50, 50}, {51, 50, 50}}});
  // (N,N): the row gains exactly 1 by switching to A or RP.
  CHECK(EpsilonNe(t, 0.999).profiles.size() == 4);
  const auto at_one = EpsilonNe(t, 1.0).profiles;
  CHECK(at_one.size() == 9);
  CHECK(at_one.front() == Profile{N, N});
}

TEST_CASE("four-seat table with one strict equilibrium") {
  WinTable t(4);
  for (int rank = 0; rank < 81; ++rank) {
    Profile p(4);
    int r = rank;
    for (int s = 3; s >= 0; --s) {
      p[s] = kAllStrategies[r % 3];
      r /= 3;
    }
    // Every seat scores 10 points per seat playing RP, plus 5 if it plays RP.
    int rp = 0;
    for (StrategyKind k : p) rp += k == R ? 1 : 0;
    std::vector<double> w(4);
    for (int s = 0; s < 4; ++s) w[s] = 10.0 * rp + (p[s] == R ? 5.0 : 0.0);
    t.Set(p, w);
  }
  const auto ne = EpsilonNe(t, 0).profiles;
  REQUIRE(ne.size() == 1);
  CHECK(ne[0] == Profile{R, R, R, R});
  // Switching to RP gains 15; at epsilon 15 everything qualifies.
  CHECK(EpsilonNe(t, 15).profiles.size() == 81);
  CHECK(EpsilonNe(t, 14.99).profiles.size() == 1);
}

TEST_CASE("bimatrix pure equilibria") {
  Bimatrix pennies{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const double a = (r + c) % 2 == 0 ? 1 : 0;
      pennies[r][c] = {a, 1 - a};
    }
  }
  CHECK(PureNeBimatrix(pennies).empty());

  Bimatrix coordination{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const double v = r == c ? 1.0 + r : 0.0;
      coordination[r][c] = {v, v};
    }
  }
  const auto ne = PureNeBimatrix(coordination);
  REQUIRE(ne.size() == 3);
  CHECK(ne[0] == std::pair{0, 0});
  CHECK(ne[2] == std::pair{2, 2});
}
