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

#ifndef LUDO_LAB_STRATEGIES_H_
#define LUDO_LAB_STRATEGIES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ludo_lab/board.h"
#include "ludo_lab/moves.h"

namespace ludo_lab {

enum class StrategyKind { kNaive, kAggressive, kResponsiblePair };

inline constexpr std::array<StrategyKind, 3> kAllStrategies = {
    StrategyKind::kNaive, StrategyKind::kAggressive,
    StrategyKind::kResponsiblePair};

// "N", "A" or "RP".
std::string_view StrategyName(StrategyKind kind);
// Case-insensitive inverse of StrategyName.
std::optional<StrategyKind> ParseStrategy(std::string_view name);

// One strategy per seat, in turn order.
using Profile = std::vector<StrategyKind>;

std::string FormatProfile(const Profile& profile, char sep = ',');
std::optional<Profile> ParseProfile(std::string_view text);

// Everything a policy may look at. The game has no hidden information.
struct Observation {
  const Board& board;
  int mover = 0;
  const DicePool& pool;
  int turn_index = 0;
};

constexpr int AccruedPoints(int pos) {
  return pos == kHomePosition ? pos + kPromotionBonus : pos;
}

// Path position the responsible-pair player gathers its tokens at before
// pushing on.
inline constexpr int kRpGatherPosition = 27;

// Per-game state of the responsible-pair player. Starts with tokens 0 and 1
// rotating and tokens 2 and 3 in reserve.
struct RpMemory {
  std::array<int, 2> rotation = {0, 1};  // -1 marks an empty slot
  int last_rotation_moved = -1;
  std::vector<int> reserve = {2, 3};
  int last_pair_moved = -1;  // alternation of tokens 0/1 once all pass 27
};

std::optional<Action> ChooseNaive(const Observation& obs);
std::optional<Action> ChooseAggressive(const Observation& obs);
std::optional<Action> ChooseResponsiblePair(const Observation& obs,
                                            RpMemory& memory);

// Dispatches to the policy for `kind`. Naive and Aggressive ignore memory.
std::optional<Action> Decide(StrategyKind kind, const Observation& obs,
                             RpMemory& memory);

}  // namespace ludo_lab

#endif  // LUDO_LAB_STRATEGIES_H_
