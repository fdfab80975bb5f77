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

#ifndef LUDO_LAB_FIXTURES_H_
#define LUDO_LAB_FIXTURES_H_

#include <array>
#include <optional>
#include <string_view>

#include "ludo_lab/engine.h"
#include "ludo_lab/equilibrium.h"
#include "ludo_lab/table_io.h"

namespace ludo_lab {

// Published simulation tables shipped with the library.
enum class FixtureId { k2p16, k2p20, k2p24, k4p8, k4p12, k4p16 };

inline constexpr std::array<FixtureId, 6> kAllFixtures = {
    FixtureId::k2p16, FixtureId::k2p20, FixtureId::k2p24,
    FixtureId::k4p8,  FixtureId::k4p12, FixtureId::k4p16};

// "2p16", "4p8", ...
std::string_view FixtureName(FixtureId id);
std::optional<FixtureId> ParseFixture(std::string_view name);

std::string_view FixtureCsv(FixtureId id);
GameConfig FixtureConfig(FixtureId id);

ResultTable LoadFixtureTable(FixtureId id);
WinTable LoadFixture(FixtureId id);
// Throws std::invalid_argument on an unknown name.
WinTable LoadFixture(std::string_view name);

}  // namespace ludo_lab

#endif  // LUDO_LAB_FIXTURES_H_
