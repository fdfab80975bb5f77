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

#include "ludo_lab/board.h"

#include <cassert>

namespace ludo_lab {

int LoopOffset(int num_seats, int seat) {
  assert(seat >= 0 && seat < num_seats);
  return seat * (kLoopCells / num_seats);
}

std::optional<int> ToLoopCell(int loop_offset, int pos) {
  if (pos > kLastLoopPosition) return std::nullopt;
  return (loop_offset + pos) % kLoopCells;
}

int Board::CountOnCell(int seat, int cell) const {
  const int off = offset(seat);
  int count = 0;
  for (int p : positions[seat]) {
    if (p <= kLastLoopPosition && (off + p) % kLoopCells == cell) ++count;
  }
  return count;
}

bool IsStartCell(int num_seats, int cell) {
  for (int s = 0; s < num_seats; ++s) {
    if (LoopOffset(num_seats, s) == cell) return true;
  }
  return false;
}

bool IsCaptureProtected(const Board& board, int cell, int defender) {
  return IsStartCell(board.num_seats, cell) ||
         board.CountOnCell(defender, cell) >= 2;
}

LandingOutcome ResolveLanding(const Board& board, int mover, int target) {
  LandingOutcome out;
  if (target == kHomePosition) {
    out.kind = LandingOutcome::Kind::kPromoted;
    return out;
  }
  if (target >= kHomeColumnStart) {
    out.kind = LandingOutcome::Kind::kHomeColumn;
    return out;
  }
  const int cell = *ToLoopCell(board.offset(mover), target);
  if (IsStartCell(board.num_seats, cell)) return out;
  for (int s = 0; s < board.num_seats; ++s) {
    if (s == mover) continue;
    // Exactly one token means unprotected; a stack of two or more is safe.
    if (board.CountOnCell(s, cell) != 1) continue;
    for (int t = 0; t < kTokensPerSeat; ++t) {
      if (board.cell(s, t) == cell) out.victims.push_back({s, t});
    }
  }
  if (!out.victims.empty()) out.kind = LandingOutcome::Kind::kCapture;
  return out;
}

}  // namespace ludo_lab
