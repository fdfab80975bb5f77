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

namespace ludo_lab {

DicePool::DicePool(std::initializer_list<int> values) {
  for (int v : values) Add(v);
}

void DicePool::Add(int value) {
  if (size_ == kMaxDicePerTurn) throw std::length_error("dice pool is full");
  if (value < 1 || value > 6) throw std::invalid_argument("die face out of range");
  values_[size_] = value;
  taken_[size_] = false;
  ++size_;
}

void DicePool::Take(int i) {
  if (i < 0 || i >= size_ || taken_[i]) {
    throw std::logic_error("die is not available");
  }
  taken_[i] = true;
}

int DicePool::untaken_count() const {
  int n = 0;
  for (int i = 0; i < size_; ++i) n += taken_[i] ? 0 : 1;
  return n;
}

int DicePool::FirstUntaken() const {
  for (int i = 0; i < size_; ++i) {
    if (!taken_[i]) return i;
  }
  return -1;
}

std::vector<Action> LegalActions(const Board& board, int mover,
                                 const DicePool& pool) {
  std::vector<Action> out;
  for (int d = 0; d < pool.size(); ++d) {
    if (pool.taken(d)) continue;
    for (int t = 0; t < kTokensPerSeat; ++t) {
      if (CanMove(board.pos(mover, t), pool.value(d))) out.push_back({d, t});
    }
  }
  return out;
}

bool IsLegal(const Board& board, int mover, const DicePool& pool,
             Action action) {
  if (action.die_index < 0 || action.die_index >= pool.size()) return false;
  if (action.token_index < 0 || action.token_index >= kTokensPerSeat) {
    return false;
  }
  if (pool.taken(action.die_index)) return false;
  return CanMove(board.pos(mover, action.token_index),
                 pool.value(action.die_index));
}

}  // namespace ludo_lab
