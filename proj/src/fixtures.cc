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

#include <stdexcept>
#include <string>

namespace ludo_lab {

std::string_view FixtureName(FixtureId id) {
  switch (id) {
    case FixtureId::k2p16: return "2p16";
    case FixtureId::k2p20: return "2p20";
    case FixtureId::k2p24: return "2p24";
    case FixtureId::k4p8: return "4p8";
    case FixtureId::k4p12: return "4p12";
    case FixtureId::k4p16: return "4p16";
  }
  return "";
}

std::optional<FixtureId> ParseFixture(std::string_view name) {
  for (FixtureId id : kAllFixtures) {
    if (FixtureName(id) == name) return id;
  }
  return std::nullopt;
}

GameConfig FixtureConfig(FixtureId id) {
  switch (id) {
    case FixtureId::k2p16: return GameConfig::Make(Variant::kTwoPlayerThreeDice, 16);
    case FixtureId::k2p20: return GameConfig::Make(Variant::kTwoPlayerThreeDice, 20);
    case FixtureId::k2p24: return GameConfig::Make(Variant::kTwoPlayerThreeDice, 24);
    case FixtureId::k4p8: return GameConfig::Make(Variant::kFourPlayerFiveDice, 8);
    case FixtureId::k4p12: return GameConfig::Make(Variant::kFourPlayerFiveDice, 12);
    case FixtureId::k4p16: return GameConfig::Make(Variant::kFourPlayerFiveDice, 16);
  }
  throw std::invalid_argument("bad fixture id");
}

ResultTable LoadFixtureTable(FixtureId id) { return ParseCsv(FixtureCsv(id)); }

WinTable LoadFixture(FixtureId id) { return ToWinTable(LoadFixtureTable(id)); }

WinTable LoadFixture(std::string_view name) {
  const auto id = ParseFixture(name);
  if (!id) {
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
  }
  return LoadFixture(*id);
}

}  // namespace ludo_lab
