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

#ifndef LUDO_LAB_MONTECARLO_H_
#define LUDO_LAB_MONTECARLO_H_

#include <array>
#include <cstdint>
#include <vector>

#include "ludo_lab/engine.h"
#include "ludo_lab/strategies.h"

namespace ludo_lab {

// Seed of game `game_index` in a run keyed by `master_seed`.
constexpr std::uint64_t DeriveGameSeed(std::uint64_t master_seed,
                                       std::uint64_t game_index) {
  return Avalanche(master_seed ^ ((game_index + 1) * kGoldenGamma));
}

// Exact integer tallies over a batch of games. Derived statistics are
// computed from the integer sums only, so any merge order gives the same
// numbers.
struct MatchStats {
  int num_seats = 2;
  std::uint64_t games = 0;
  std::uint64_t draws = 0;
  std::array<std::uint64_t, kMaxSeats> wins{};
  std::array<std::uint64_t, kMaxSeats> point_sum{};
  std::array<std::uint64_t, kMaxSeats> point_sum_sq{};

  void Add(const GameResult& result);
  void Merge(const MatchStats& other);

  double WinPct(int seat) const;
  double DrawPct() const;
  double Mean(int seat) const;
  // Population standard deviation (divides by the game count).
  double Sd(int seat) const;

  friend bool operator==(const MatchStats&, const MatchStats&) = default;
};

// Worker count used when the caller passes 0: $LUDO_LAB_WORKERS if set,
// otherwise the available hardware parallelism.
int DefaultWorkers();

// Plays games 0..n-1 seeded by DeriveGameSeed(master_seed, i) on `workers`
// OpenMP threads. The result does not depend on the thread count.
MatchStats Simulate(const GameConfig& config, const Profile& profile,
                    std::uint64_t n, std::uint64_t master_seed,
                    int workers = 0);

// Single-threaded reference for Simulate.
MatchStats SimulateSerial(const GameConfig& config, const Profile& profile,
                          std::uint64_t n, std::uint64_t master_seed);

// All 3^seats profiles in lexicographic order, N < A < RP, seat 0 most
// significant.
std::vector<Profile> AllProfiles(int seats);
// Position of `profile` in AllProfiles.
int ProfileRank(const Profile& profile);

struct PayoffRow {
  Profile profile;
  MatchStats stats;
};

struct PayoffTable {
  GameConfig config;
  std::uint64_t games_per_profile = 0;
  std::uint64_t master_seed = 0;
  std::vector<PayoffRow> rows;
};

// Simulates every profile; profile k uses master DeriveGameSeed(master, k).
PayoffTable Sweep(const GameConfig& config, std::uint64_t n,
                  std::uint64_t master_seed, int workers = 0);

}  // namespace ludo_lab

#endif  // LUDO_LAB_MONTECARLO_H_
