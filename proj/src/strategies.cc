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

#include "ludo_lab/strategies.h"

#include <algorithm>
#include <cctype>

namespace ludo_lab {
namespace {

int Pos(const Observation& obs, int token) {
  return obs.board.pos(obs.mover, token);
}

// Index of the highest-valued untaken die `token` can legally use; the lowest
// index wins among equal values. -1 if none.
int MaxLegalDie(const Observation& obs, int token) {
  int best = -1;
  for (int d = 0; d < obs.pool.size(); ++d) {
    if (obs.pool.taken(d) || !CanMove(Pos(obs, token), obs.pool.value(d))) {
      continue;
    }
    if (best < 0 || obs.pool.value(d) > obs.pool.value(best)) best = d;
  }
  return best;
}

// First (token, die) pair, token-major, satisfying `pred(token, die, target)`.
template <typename Pred>
std::optional<Action> FirstMatching(const Observation& obs, Pred pred) {
  for (int t = 0; t < kTokensPerSeat; ++t) {
    for (int d = 0; d < obs.pool.size(); ++d) {
      if (obs.pool.taken(d)) continue;
      const int from = Pos(obs, t);
      const int die = obs.pool.value(d);
      if (!CanMove(from, die)) continue;
      if (pred(t, d, from + die)) return Action{d, t};
    }
  }
  return std::nullopt;
}

std::optional<Action> Promotion(const Observation& obs) {
  return FirstMatching(obs, [](int, int, int target) {
    return target == kHomePosition;
  });
}

bool CrossesGatherPoint(int from, int target) {
  return from < kRpGatherPosition && target > kRpGatherPosition;
}

// Capture taking the most accrued points from opponents; the lowest token
// and die index win ties. With `respect_gather`, a token short of the gather
// point may not pass it to capture.
std::optional<Action> BestCapture(const Observation& obs, bool respect_gather) {
  std::optional<Action> best;
  int best_value = -1;
  FirstMatching(obs, [&](int t, int d, int target) {
    if (target > kLastLoopPosition) return false;
    if (respect_gather && CrossesGatherPoint(Pos(obs, t), target)) {
      return false;
    }
    const LandingOutcome landing =
        ResolveLanding(obs.board, obs.mover, target);
    if (landing.kind != LandingOutcome::Kind::kCapture) return false;
    int value = 0;
    for (const TokenRef& v : landing.victims) {
      value += AccruedPoints(obs.board.pos(v.seat, v.token));
    }
    if (value > best_value) {
      best_value = value;
      best = Action{d, t};
    }
    return false;
  });
  return best;
}

// The first token with any legal die, moved with its highest legal die.
std::optional<Action> FirstTokenHighestDie(const Observation& obs) {
  for (int t = 0; t < kTokensPerSeat; ++t) {
    const int d = MaxLegalDie(obs, t);
    if (d >= 0) return Action{d, t};
  }
  return std::nullopt;
}

bool IsSafeLanding(const Observation& obs, int target) {
  if (target >= kHomeColumnStart) return target < kHomePosition;
  const int cell = *ToLoopCell(obs.board.offset(obs.mover), target);
  return IsStartCell(obs.board.num_seats, cell) ||
         obs.board.CountOnCell(obs.mover, cell) >= 1;
}

bool OpponentReadyToPromote(const Observation& obs) {
  for (int s = 0; s < obs.board.num_seats; ++s) {
    if (s == obs.mover) continue;
    for (int p : obs.board.positions[s]) {
      if (p >= kHomeColumnStart) return true;
    }
  }
  return false;
}

std::optional<Action> HighestValueToken(const Observation& obs) {
  std::array<int, kTokensPerSeat> order = {0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return AccruedPoints(Pos(obs, a)) > AccruedPoints(Pos(obs, b));
  });
  for (int t : order) {
    if (Pos(obs, t) == kHomePosition) continue;
    const int d = MaxLegalDie(obs, t);
    if (d >= 0) return Action{d, t};
  }
  return std::nullopt;
}

// Moves reserve token 2 or 3 toward the nearest capturable opponent token at
// most six cells ahead, using the largest die that does not overshoot it.
std::optional<Action> Chase(const Observation& obs) {
  const Board& board = obs.board;
  for (int t : {2, 3}) {
    const int from = Pos(obs, t);
    if (from > kLastLoopPosition) continue;
    const int my_cell = *board.cell(obs.mover, t);
    int nearest = 0;
    for (int s = 0; s < board.num_seats; ++s) {
      if (s == obs.mover) continue;
      for (int u = 0; u < kTokensPerSeat; ++u) {
        const auto cell = board.cell(s, u);
        if (!cell || IsCaptureProtected(board, *cell, s)) continue;
        const int gap = (*cell - my_cell + kLoopCells) % kLoopCells;
        if (gap < 1 || gap > 6 || from + gap > kLastLoopPosition) continue;
        if (nearest == 0 || gap < nearest) nearest = gap;
      }
    }
    if (nearest == 0) continue;
    int best = -1;
    for (int d = 0; d < obs.pool.size(); ++d) {
      const int v = obs.pool.value(d);
      if (obs.pool.taken(d) || v > nearest) continue;
      if (v == nearest && CrossesGatherPoint(from, from + v)) continue;
      if (best < 0 || v > obs.pool.value(best)) best = d;
    }
    if (best >= 0) return Action{best, t};
  }
  return std::nullopt;
}

void RefreshRotation(const Observation& obs, RpMemory& memory) {
  auto below = [&](int t) { return Pos(obs, t) < kRpGatherPosition; };
  for (int& slot : memory.rotation) {
    if (slot >= 0 && !below(slot)) slot = -1;
  }
  for (int i = 0; i < 2; ++i) {
    int& slot = memory.rotation[i];
    if (slot >= 0) continue;
    const int other = memory.rotation[1 - i];
    while (!memory.reserve.empty() && slot < 0) {
      const int next = memory.reserve.front();
      memory.reserve.erase(memory.reserve.begin());
      if (next != other && below(next)) slot = next;
    }
    // Reserve exhausted: a token sent back by a capture rejoins.
    for (int t = 0; t < kTokensPerSeat && slot < 0; ++t) {
      if (t != other && below(t)) slot = t;
    }
  }
}

// Largest untaken die that keeps `token` at or before the gather point.
int LargestDieWithinGather(const Observation& obs, int token) {
  const int from = Pos(obs, token);
  int best = -1;
  for (int d = 0; d < obs.pool.size(); ++d) {
    if (obs.pool.taken(d)) continue;
    const int v = obs.pool.value(d);
    if (from + v > kRpGatherPosition) continue;
    if (best < 0 || v > obs.pool.value(best)) best = d;
  }
  return best;
}

// Alternates the two rotation tokens toward the gather point with the
// highest roll that does not pass it. If neither can stay short of it, any
// other token that can is moved instead; only then does the rotation token
// overshoot with the smallest die.
std::optional<Action> Rotation(const Observation& obs, RpMemory& memory) {
  RefreshRotation(obs, memory);
  std::array<int, 2> order = memory.rotation;
  if (order[0] == memory.last_rotation_moved) std::swap(order[0], order[1]);
  for (int t : order) {
    if (t < 0) continue;
    const int d = LargestDieWithinGather(obs, t);
    if (d >= 0) {
      memory.last_rotation_moved = t;
      return Action{d, t};
    }
  }
  for (int t = 0; t < kTokensPerSeat; ++t) {
    if (Pos(obs, t) >= kRpGatherPosition) continue;
    const int d = LargestDieWithinGather(obs, t);
    if (d >= 0) return Action{d, t};
  }
  for (int t : order) {
    if (t < 0) continue;
    int smallest = -1;
    for (int d = 0; d < obs.pool.size(); ++d) {
      if (obs.pool.taken(d)) continue;
      if (smallest < 0 || obs.pool.value(d) < obs.pool.value(smallest)) {
        smallest = d;
      }
    }
    if (smallest >= 0) {
      memory.last_rotation_moved = t;
      return Action{smallest, t};
    }
  }
  return std::nullopt;
}

std::optional<Action> LeadPair(const Observation& obs, RpMemory& memory) {
  std::array<int, 2> order = {0, 1};
  if (memory.last_pair_moved == 0) std::swap(order[0], order[1]);
  for (int t : order) {
    const int d = MaxLegalDie(obs, t);
    if (d >= 0) {
      memory.last_pair_moved = t;
      return Action{d, t};
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view StrategyName(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kNaive:
      return "N";
    case StrategyKind::kAggressive:
      return "A";
    case StrategyKind::kResponsiblePair:
      return "RP";
  }
  return "?";
}

std::optional<StrategyKind> ParseStrategy(std::string_view name) {
  std::string upper;
  for (char c : name) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  }
  for (StrategyKind k : kAllStrategies) {
    if (upper == StrategyName(k)) return k;
  }
  return std::nullopt;
}

std::string FormatProfile(const Profile& profile, char sep) {
  std::string out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) out += sep;
    out += StrategyName(profile[i]);
  }
  return out;
}

std::optional<Profile> ParseProfile(std::string_view text) {
  Profile out;
  while (true) {
    const auto comma = text.find(',');
    const auto kind = ParseStrategy(text.substr(0, comma));
    if (!kind) return std::nullopt;
    out.push_back(*kind);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::optional<Action> ChooseNaive(const Observation& obs) {
  for (int d = 0; d < obs.pool.size(); ++d) {
    if (obs.pool.taken(d)) continue;
    for (int t = 0; t < kTokensPerSeat; ++t) {
      if (CanMove(Pos(obs, t), obs.pool.value(d))) return Action{d, t};
    }
  }
  return std::nullopt;
}

std::optional<Action> ChooseAggressive(const Observation& obs) {
  if (auto a = Promotion(obs)) return a;

  if (auto a = BestCapture(obs, false)) return a;

  if (auto a = FirstMatching(obs, [](int, int, int target) {
        return target >= kHomeColumnStart && target < kHomePosition;
      })) {
    return a;
  }
  return FirstTokenHighestDie(obs);
}

std::optional<Action> ChooseResponsiblePair(const Observation& obs,
                                            RpMemory& memory) {
  if (auto a = Promotion(obs)) return a;
  if (auto a = BestCapture(obs, true)) return a;
  // Once an opponent is about to promote, the most valuable token runs for
  // home; the rest only capture or step onto safe cells.
  if (OpponentReadyToPromote(obs)) {
    if (auto a = HighestValueToken(obs)) return a;
  }
  if (auto a = FirstMatching(obs, [&](int, int, int target) {
        return IsSafeLanding(obs, target);
      })) {
    return a;
  }
  if (auto a = Chase(obs)) return a;

  bool any_below = false;
  for (int t = 0; t < kTokensPerSeat; ++t) {
    any_below = any_below || Pos(obs, t) < kRpGatherPosition;
  }
  if (any_below) {
    if (auto a = Rotation(obs, memory)) return a;
  } else if (auto a = LeadPair(obs, memory)) {
    return a;
  }
  return FirstTokenHighestDie(obs);
}

std::optional<Action> Decide(StrategyKind kind, const Observation& obs,
                             RpMemory& memory) {
  switch (kind) {
    case StrategyKind::kNaive:
      return ChooseNaive(obs);
    case StrategyKind::kAggressive:
      return ChooseAggressive(obs);
    case StrategyKind::kResponsiblePair:
      return ChooseResponsiblePair(obs, memory);
  }
  return std::nullopt;
}

}  // namespace ludo_lab
