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

#include "ludo_lab/fixtures.h"

#include <set>
#include <stdexcept>

#include "doctest.h"
#include "expected_equilibria.h"

using namespace ludo_lab;

namespace {

std::set<std::string> Names(const std::vector<Profile>& profiles) {
  std::set<std::string> out;
  for (const Profile& p : profiles) out.insert(FormatProfile(p));
  return out;
}

}  // namespace

TEST_CASE("fixture names") {
  for (FixtureId id : kAllFixtures) CHECK(ParseFixture(FixtureName(id)) == id);
  CHECK_FALSE(ParseFixture("2p18").has_value());
  CHECK_THROWS_AS(LoadFixture("3p16"), std::invalid_argument);
}

TEST_CASE("fixture configs") {
  CHECK(FixtureConfig(FixtureId::k2p20).total_turns == 20);
  CHECK(FixtureConfig(FixtureId::k4p8).variant == Variant::kFourPlayerFiveDice);
  for (FixtureId id : kAllFixtures) CHECK(FixtureConfig(id).canonical());
}

TEST_CASE("every fixture is a complete table") {
  for (FixtureId id : kAllFixtures) {
    const ResultTable t = LoadFixtureTable(id);
    const int seats = FixtureConfig(id).seats();
    CHECK(t.seats == seats);
    CHECK(t.rows.size() == (seats == 2 ? 9u : 81u));
    CHECK(GamesPerProfile(t) == (seats == 2 ? 10000u : 1000u));
    std::set<std::string> profiles;
    std::set<int> serials;
    for (const ResultRow& r : t.rows) {
      profiles.insert(FormatProfile(r.profile));
      serials.insert(r.sl_no);
    }
    CHECK(profiles.size() == t.rows.size());
    CHECK(serials.size() == t.rows.size());
    CHECK_FALSE(LoadFixture(id).FirstMissing().has_value());
  }
}

TEST_CASE("printed values survive loading") {
  const WinTable w = LoadFixture(FixtureId::k2p16);
  using K = StrategyKind;
  CHECK(w.Get({K::kNaive, K::kAggressive})[0] == doctest::Approx(0.22));
  CHECK(w.Get({K::kNaive, K::kAggressive})[1] == doctest::Approx(99.78));
  CHECK(w.Get({K::kAggressive, K::kNaive})[0] == doctest::Approx(97.07));
  CHECK(w.Get({K::kNaive, K::kNaive})[0] == doctest::Approx(49.83));
}

TEST_CASE("four-seat win percentages sum to about 100") {
  for (FixtureId id : {FixtureId::k4p8, FixtureId::k4p12, FixtureId::k4p16}) {
    for (const ResultRow& r : LoadFixtureTable(id).rows) {
      double sum = 0;
      for (const auto& v : r.win_pct) sum += v.value();
      CHECK(sum == doctest::Approx(100.0).epsilon(0.02));
    }
  }
}

TEST_CASE("published equilibrium sets are reproduced exactly") {
  for (const auto& want : ludo_lab::testing::ExpectedEquilibria()) {
    const WinTable w = LoadFixture(want.fixture);
    const double se = StdError(GamesPerProfile(LoadFixtureTable(want.fixture)));
    for (int rung = 0; rung < 3; ++rung) {
      INFO(FixtureName(want.fixture), " rung ", rung);
      const std::set<std::string> expected(want.by_rung[rung].begin(),
                                           want.by_rung[rung].end());
      CHECK(Names(EpsilonNe(w, rung * se).profiles) == expected);
    }
  }
}
