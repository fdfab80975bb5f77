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

#include "ludo_lab/engine.h"

#include <stdexcept>
#include <utility>

namespace ludo_lab {

std::string_view VariantName(Variant variant) {
  return variant == Variant::kTwoPlayerThreeDice ? "2p3d" : "4p5d";
}

std::optional<Variant> ParseVariant(std::string_view name) {
  if (name == "2p3d" || name == "2p") return Variant::kTwoPlayerThreeDice;
  if (name == "4p5d" || name == "4p") return Variant::kFourPlayerFiveDice;
  return std::nullopt;
}

GameConfig GameConfig::Make(Variant variant, int total_turns) {
  if (total_turns <= 0) {
    throw std::invalid_argument("total_turns must be positive");
  }
  return GameConfig{variant, total_turns};
}

bool GameConfig::canonical() const {
  if (variant == Variant::kTwoPlayerThreeDice) {
    return total_turns == 16 || total_turns == 20 || total_turns == 24;
  }
  return total_turns == 8 || total_turns == 12 || total_turns == 16;
}

std::vector<int> PickSequence(Variant variant, int turn_index) {
  const int seats = variant == Variant::kTwoPlayerThreeDice ? 2 : 4;
  const int owner = turn_index % seats;
  std::vector<int> seq;
  seq.reserve(seats + 1);
  for (int k = 0; k < seats; ++k) seq.push_back((owner + k) % seats);
  seq.push_back(owner);
  return seq;
}

std::string TranscriptEvent::ToLine() const {
  std::string out;
  auto field = [&out](const std::string& s) {
    if (!out.empty()) out += '\t';
    out += s;
  };
  field(std::to_string(turn));
  field(std::to_string(mover));
  field((from_pool ? "pool:" : "extra:") + std::to_string(source_index));
  field(std::to_string(die));
  if (token < 0) {
    field("-");
    field("-");
    field("-");
  } else {
    field(std::to_string(token));
    field(std::to_string(from));
    field(std::to_string(to));
  }
  std::string f;
  if (flags & kFlagCapture) f += 'C';
  if (flags & kFlagPromote) f += 'P';
  if (flags & kFlagExtra) f += 'X';
  if (flags & kFlagVoidSix) f += 'V';
  field(f.empty() ? "-" : f);
  return out;
}

GameState::GameState(const GameConfig& config, Profile profile)
    : config_(config), profile_(std::move(profile)) {
  if (static_cast<int>(profile_.size()) != config_.seats()) {
    throw std::invalid_argument("profile length must match the seat count");
  }
  board_.num_seats = config_.seats();
}

int GameState::RecomputeScore(int seat) const {
  int total = 0;
  for (int p : board_.positions[seat]) total += AccruedPoints(p);
  return total;
}

void GameState::SyncScores() {
  for (int s = 0; s < kMaxSeats; ++s) {
    scores_[s] = s < board_.num_seats ? RecomputeScore(s) : 0;
  }
}

ActionResult GameState::ApplyAction(int mover, DicePool& pool, Action action) {
  if (!IsLegal(board_, mover, pool, action)) {
    throw std::logic_error("illegal action");
  }
  const int die = pool.value(action.die_index);
  pool.Take(action.die_index);

  int& pos = board_.positions[mover][action.token_index];
  ActionResult result;
  result.from = pos;
  result.to = pos + die;
  const LandingOutcome landing = ResolveLanding(board_, mover, result.to);

  pos = result.to;
  scores_[mover] += die;
  if (landing.kind == LandingOutcome::Kind::kPromoted) {
    result.promoted = true;
    scores_[mover] += kPromotionBonus;
    ++promotions_[mover];
  }
  for (const TokenRef& v : landing.victims) {
    scores_[v.seat] -= board_.positions[v.seat][v.token];
    board_.positions[v.seat][v.token] = 0;
  }
  result.captured = landing.victims;
  // A six, a capture and a promotion in one action earn one extra move.
  result.extra_granted = die == 6 || result.promoted || !landing.victims.empty();
  return result;
}

namespace {

unsigned FlagsOf(const ActionResult& r) {
  unsigned f = 0;
  if (!r.captured.empty()) f |= kFlagCapture;
  if (r.promoted) f |= kFlagPromote;
  if (r.extra_granted) f |= kFlagExtra;
  return f;
}

}  // namespace

void GameState::RunExtraChain(int mover, int six_count, DiceSource& dice) {
  for (int link = 0;; ++link) {
    const int die = dice.Roll();
    TranscriptEvent ev{turn_index_, mover, false, link, die};
    if (die == 6 && six_count >= 2) {
      // Third consecutive six: void, and the sequence ends.
      ev.flags = kFlagVoidSix;
      Record(ev);
      return;
    }
    six_count = die == 6 ? six_count + 1 : 0;

    DicePool pool{die};
    const Observation obs{board_, mover, pool, turn_index_};
    const auto action = Decide(profile_[mover], obs, memory_[mover]);
    if (!action) {
      Record(ev);
      return;
    }
    const ActionResult r = ApplyAction(mover, pool, *action);
    ev.token = action->token_index;
    ev.from = r.from;
    ev.to = r.to;
    ev.flags = FlagsOf(r);
    Record(ev);
    if (!r.extra_granted) return;
  }
}

void GameState::PlayTurn(DiceSource& dice) {
  std::array<int, kMaxDicePerTurn> values{};
  const int n = config_.dice_per_turn();
  for (int i = 0; i < n; ++i) values[i] = dice.Roll();
  PlayTurn(std::span<const int>(values.data(), n), dice);
}

void GameState::PlayTurn(std::span<const int> pool_values,
                         DiceSource& extra_dice) {
  if (finished()) throw std::logic_error("game is over");
  if (static_cast<int>(pool_values.size()) != config_.dice_per_turn()) {
    throw std::invalid_argument("pool size does not match the variant");
  }
  DicePool pool;
  for (int v : pool_values) pool.Add(v);

  for (int mover : PickSequence(config_.variant, turn_index_)) {
    const Observation obs{board_, mover, pool, turn_index_};
    const auto action = Decide(profile_[mover], obs, memory_[mover]);
    if (!action) {
      // Forfeit: the mover burns the first remaining die.
      const int d = pool.FirstUntaken();
      Record({turn_index_, mover, true, d, pool.value(d)});
      pool.Take(d);
      continue;
    }
    const ActionResult r = ApplyAction(mover, pool, *action);
    const int die = r.to - r.from;
    Record({turn_index_, mover, true, action->die_index, die,
            action->token_index, r.from, r.to, FlagsOf(r)});
    if (r.extra_granted) RunExtraChain(mover, die == 6 ? 1 : 0, extra_dice);
  }
  ++turn_index_;
}

GameResult GameState::Result() const {
  GameResult result;
  result.num_seats = config_.seats();
  int best = -1;
  int best_count = 0;
  for (int s = 0; s < result.num_seats; ++s) {
    result.points[s] = scores_[s];
    if (scores_[s] > best) {
      best = scores_[s];
      best_count = 1;
      result.winner = s;
    } else if (scores_[s] == best) {
      ++best_count;
    }
  }
  if (best_count > 1) result.winner.reset();
  return result;
}

GameResult PlayGame(const GameConfig& config, const Profile& profile,
                    std::uint64_t game_seed, Transcript* transcript) {
  GameState state(config, profile);
  state.set_transcript(transcript);
  RngDice dice(game_seed);
  while (!state.finished()) state.PlayTurn(dice);
  return state.Result();
}

}  // namespace ludo_lab
