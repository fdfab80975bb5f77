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

#ifndef LUDO_LAB_ENGINE_H_
#define LUDO_LAB_ENGINE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ludo_lab/board.h"
#include "ludo_lab/moves.h"
#include "ludo_lab/rng.h"
#include "ludo_lab/strategies.h"

namespace ludo_lab {

enum class Variant { kTwoPlayerThreeDice, kFourPlayerFiveDice };

// "2p3d" / "4p5d".
std::string_view VariantName(Variant variant);
std::optional<Variant> ParseVariant(std::string_view name);

struct GameConfig {
  Variant variant = Variant::kTwoPlayerThreeDice;
  int total_turns = 16;

  // Throws std::invalid_argument unless total_turns > 0.
  static GameConfig Make(Variant variant, int total_turns);

  int seats() const {
    return variant == Variant::kTwoPlayerThreeDice ? 2 : 4;
  }
  int dice_per_turn() const {
    return variant == Variant::kTwoPlayerThreeDice ? 3 : 5;
  }
  // Pool picks each seat makes over the whole game, extras excluded.
  int picks_per_seat() const {
    return total_turns * dice_per_turn() / seats();
  }
  // 16/20/24 turns for two seats, 8/12/16 for four.
  bool canonical() const;

  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

// Seats picking from turn `turn_index`'s pool, in order. The turn owner
// picks first and last; the others follow in seat order.
std::vector<int> PickSequence(Variant variant, int turn_index);

enum EventFlag : unsigned {
  kFlagCapture = 1u << 0,
  kFlagPromote = 1u << 1,
  kFlagExtra = 1u << 2,
  kFlagVoidSix = 1u << 3,
};

// One line of a game transcript.
struct TranscriptEvent {
  int turn = 0;
  int mover = 0;
  bool from_pool = true;
  int source_index = 0;  // pool die index, or extra-chain link number
  int die = 0;
  int token = -1;  // -1: no token moved (forfeit, wasted or void die)
  int from = 0;
  int to = 0;
  unsigned flags = 0;

  // turn, mover, source, die, token, from, to, flags separated by tabs.
  std::string ToLine() const;
};

using Transcript = std::vector<TranscriptEvent>;

struct ActionResult {
  int from = 0;
  int to = 0;
  Victims captured;
  bool promoted = false;
  bool extra_granted = false;
};

struct GameResult {
  std::array<int, kMaxSeats> points{};
  int num_seats = 2;
  std::optional<int> winner;  // nullopt on a shared maximum

  bool draw() const { return !winner.has_value(); }
};

class GameState {
 public:
  GameState(const GameConfig& config, Profile profile);

  const GameConfig& config() const { return config_; }
  const Board& board() const { return board_; }
  int turn_index() const { return turn_index_; }
  bool finished() const { return turn_index_ >= config_.total_turns; }
  int promotions(int seat) const { return promotions_[seat]; }

  // Incrementally tracked points.
  int Score(int seat) const { return scores_[seat]; }
  // Points recomputed from token positions.
  int RecomputeScore(int seat) const;

  // Moves `mover`'s token by the chosen die and takes the die from `pool`.
  // Throws std::logic_error if the action is not legal.
  ActionResult ApplyAction(int mover, DicePool& pool, Action action);

  // Plays bonus dice after an action granted an extra move. `six_count` is
  // the number of consecutive sixes in the mover's current sequence.
  void RunExtraChain(int mover, int six_count, DiceSource& dice);

  // Plays the next turn. The pool is rolled from `dice` unless given.
  void PlayTurn(DiceSource& dice);
  void PlayTurn(std::span<const int> pool_values, DiceSource& extra_dice);

  GameResult Result() const;

  void set_transcript(Transcript* transcript) { transcript_ = transcript; }
  // For tests and tools that set up positions directly.
  Board& mutable_board() { return board_; }
  void SyncScores();

 private:
  void Record(const TranscriptEvent& event) {
    if (transcript_ != nullptr) transcript_->push_back(event);
  }

  GameConfig config_;
  Profile profile_;
  Board board_;
  std::array<int, kMaxSeats> scores_{};
  std::array<int, kMaxSeats> promotions_{};
  std::array<RpMemory, kMaxSeats> memory_{};
  int turn_index_ = 0;
  Transcript* transcript_ = nullptr;
};

// Plays a whole game. Deterministic in (config, profile, game_seed).
GameResult PlayGame(const GameConfig& config, const Profile& profile,
                    std::uint64_t game_seed, Transcript* transcript = nullptr);

}  // namespace ludo_lab

#endif  // LUDO_LAB_ENGINE_H_
