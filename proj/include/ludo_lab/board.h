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

#ifndef LUDO_LAB_BOARD_H_
#define LUDO_LAB_BOARD_H_

#include <array>
#include <cstddef>
#include <optional>

namespace ludo_lab {

inline constexpr int kTokensPerSeat = 4;
inline constexpr int kMaxSeats = 4;
inline constexpr int kLoopCells = 52;
// Path positions 0..50 lie on the shared loop, 51..55 are the private home
// column, 56 is home.
inline constexpr int kLastLoopPosition = 50;
inline constexpr int kHomeColumnStart = 51;
inline constexpr int kHomePosition = 56;
inline constexpr int kPromotionBonus = 56;

using TokenPositions = std::array<int, kTokensPerSeat>;

struct TokenRef {
  int seat = 0;
  int token = 0;

  friend bool operator==(const TokenRef&, const TokenRef&) = default;
};

// Start offset on the shared loop for each seat, in turn order: {0, 26} for
// two seats (diagonally opposite), {0, 13, 26, 39} for four.
int LoopOffset(int num_seats, int seat);

// Loop cell reached by a token `pos` steps from the start at `loop_offset`.
// Positions in the home column or at home are off the shared loop.
std::optional<int> ToLoopCell(int loop_offset, int pos);

// Token positions for every seat of one game. Seats past `num_seats` are
// unused and stay zeroed.
struct Board {
  int num_seats = 2;
  std::array<TokenPositions, kMaxSeats> positions{};

  int offset(int seat) const { return LoopOffset(num_seats, seat); }
  int pos(int seat, int token) const { return positions[seat][token]; }
  std::optional<int> cell(int seat, int token) const {
    return ToLoopCell(offset(seat), positions[seat][token]);
  }
  // Number of `seat`'s tokens standing on loop cell `cell`.
  int CountOnCell(int seat, int cell) const;

  friend bool operator==(const Board&, const Board&) = default;
};

bool IsStartCell(int num_seats, int cell);

// A loop cell protects the defender if it is any seat's start cell or the
// defender has two or more tokens stacked on it.
bool IsCaptureProtected(const Board& board, int cell, int defender);

// Fixed-capacity list of captured tokens: at most one unprotected token per
// opponent can share the landing cell.
class Victims {
 public:
  void push_back(TokenRef ref) { items_[size_++] = ref; }
  const TokenRef* begin() const { return items_.data(); }
  const TokenRef* end() const { return items_.data() + size_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const TokenRef& operator[](std::size_t i) const { return items_[i]; }

 private:
  std::array<TokenRef, kMaxSeats - 1> items_{};
  std::size_t size_ = 0;
};

struct LandingOutcome {
  enum class Kind { kPlain, kCapture, kHomeColumn, kPromoted };
  Kind kind = Kind::kPlain;
  Victims victims;
};

// What happens when one of `mover`'s tokens arrives at path position
// `target`. The moving token itself is ignored, so the board may still show
// it at its old position.
LandingOutcome ResolveLanding(const Board& board, int mover, int target);

}  // namespace ludo_lab

#endif  // LUDO_LAB_BOARD_H_
