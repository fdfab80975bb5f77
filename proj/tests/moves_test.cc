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

#include "ludo_lab/moves.h"

#include <stdexcept>

#include "doctest.h"

using namespace ludo_lab;

TEST_CASE("dice pool bookkeeping") {
  DicePool pool{3, 6, 1};
  CHECK(pool.size() == 3);
  CHECK(pool.untaken_count() == 3);
  CHECK(pool.FirstUntaken() == 0);
  pool.Take(0);
  CHECK(pool.taken(0));
  CHECK(pool.FirstUntaken() == 1);
  CHECK_THROWS_AS(pool.Take(0), std::logic_error);
  CHECK_THROWS_AS(pool.Take(3), std::logic_error);
  pool.Take(1);
  pool.Take(2);
  CHECK(pool.untaken_count() == 0);
  CHECK(pool.FirstUntaken() == -1);
}

TEST_CASE("dice pool rejects bad faces and overflow") {
  DicePool pool;
  CHECK_THROWS_AS(pool.Add(0), std::invalid_argument);
  CHECK_THROWS_AS(pool.Add(7), std::invalid_argument);
  for (int i = 0; i < kMaxDicePerTurn; ++i) pool.Add(1);
  CHECK_THROWS_AS(pool.Add(1), std::length_error);
}

TEST_CASE("exact landing on home") {
  CHECK(CanMove(0, 6));
  CHECK(CanMove(50, 6));
  CHECK(CanMove(55, 1));
  CHECK_FALSE(CanMove(55, 2));
  CHECK_FALSE(CanMove(56, 1));
  CHECK_FALSE(CanMove(53, 4));
}

TEST_CASE("legal actions are die-major and skip taken dice") {
  Board b;
  b.positions[0] = {56, 54, 10, 0};
  DicePool pool{2, 5};
  const auto all = LegalActions(b, 0, pool);
  // Die 2: tokens 1, 2, 3. Die 5: tokens 2, 3.
  REQUIRE(all.size() == 5);
  CHECK(all[0] == Action{0, 1});
  CHECK(all[3] == Action{1, 2});
  pool.Take(0);
  CHECK(LegalActions(b, 0, pool).size() == 2);
  CHECK_FALSE(IsLegal(b, 0, pool, {0, 2}));
  CHECK(IsLegal(b, 0, pool, {1, 3}));
  CHECK_FALSE(IsLegal(b, 0, pool, {1, 1}));
  CHECK_FALSE(IsLegal(b, 0, pool, {2, 3}));
  CHECK_FALSE(IsLegal(b, 0, pool, {1, 4}));
}

TEST_CASE("legal action count matches brute force") {
  Board b;
  for (int p = 50; p <= 56; ++p) {
    b.positions[1] = {p, p, 0, 56};
    for (int d = 1; d <= 6; ++d) {
      DicePool pool{d};
      int expected = 1;  // the token at 0
      if (p + d <= 56 && p < 56) expected += 2;
      CHECK(static_cast<int>(LegalActions(b, 1, pool).size()) == expected);
    }
  }
}
