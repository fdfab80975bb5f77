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

#ifndef LUDO_LAB_MOVES_H_
#define LUDO_LAB_MOVES_H_

#include <array>
#include <initializer_list>
#include <vector>

#include "ludo_lab/board.h"

namespace ludo_lab {

inline constexpr int kMaxDicePerTurn = 5;

// Dice rolled by the turn owner, kept in rolled order. Each die is picked at
// most once.
class DicePool {
 public:
  DicePool() = default;
  DicePool(std::initializer_list<int> values);

  void Add(int value);
  int size() const { return size_; }
  int value(int i) const { return values_[i]; }
  bool taken(int i) const { return taken_[i]; }
  void Take(int i);
  int untaken_count() const;
  // Lowest-index untaken die, or -1.
  int FirstUntaken() const;

 private:
  std::array<int, kMaxDicePerTurn> values_{};
  std::array<bool, kMaxDicePerTurn> taken_{};
  int size_ = 0;
};

struct Action {
  int die_index = 0;
  int token_index = 0;

  friend bool operator==(const Action&, const Action&) = default;
};

// A token may move unless it is home or the die would carry it past home.
constexpr bool CanMove(int pos, int die) {
  return pos < kHomePosition && pos + die <= kHomePosition;
}

// Every (untaken die, token) pair `mover` may play, die-major order.
std::vector<Action> LegalActions(const Board& board, int mover,
                                 const DicePool& pool);

bool IsLegal(const Board& board, int mover, const DicePool& pool,
             Action action);

}  // namespace ludo_lab

#endif  // LUDO_LAB_MOVES_H_
