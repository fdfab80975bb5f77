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

#include "ludo_lab/montecarlo.h"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ludo_lab {

void MatchStats::Add(const GameResult& result) {
  ++games;
  if (result.winner) {
    ++wins[*result.winner];
  } else {
    ++draws;
  }
  for (int s = 0; s < num_seats; ++s) {
    const auto p = static_cast<std::uint64_t>(result.points[s]);
    point_sum[s] += p;
    point_sum_sq[s] += p * p;
  }
}

void MatchStats::Merge(const MatchStats& other) {
  games += other.games;
  draws += other.draws;
  for (int s = 0; s < kMaxSeats; ++s) {
    wins[s] += other.wins[s];
    point_sum[s] += other.point_sum[s];
    point_sum_sq[s] += other.point_sum_sq[s];
  }
}

double MatchStats::WinPct(int seat) const {
  return games == 0 ? 0.0 : 100.0 * static_cast<double>(wins[seat]) / games;
}

double MatchStats::DrawPct() const {
  return games == 0 ? 0.0 : 100.0 * static_cast<double>(draws) / games;
}

double MatchStats::Mean(int seat) const {
  return games == 0 ? 0.0 : static_cast<double>(point_sum[seat]) / games;
}

double MatchStats::Sd(int seat) const {
  if (games == 0) return 0.0;
  // n * sum_sq - sum^2 is exact in 128 bits.
  const auto n = static_cast<unsigned __int128>(games);
  const auto sum = static_cast<unsigned __int128>(point_sum[seat]);
  const unsigned __int128 num = n * point_sum_sq[seat] - sum * sum;
  return std::sqrt(static_cast<double>(num)) / static_cast<double>(games);
}

int DefaultWorkers() {
  if (const char* env = std::getenv("LUDO_LAB_WORKERS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

MatchStats SimulateSerial(const GameConfig& config, const Profile& profile,
                          std::uint64_t n, std::uint64_t master_seed) {
  MatchStats stats;
  stats.num_seats = config.seats();
  for (std::uint64_t i = 0; i < n; ++i) {
    stats.Add(PlayGame(config, profile, DeriveGameSeed(master_seed, i)));
  }
  return stats;
}

MatchStats Simulate(const GameConfig& config, const Profile& profile,
                    std::uint64_t n, std::uint64_t master_seed, int workers) {
  if (static_cast<int>(profile.size()) != config.seats()) {
    throw std::invalid_argument("profile length must match the seat count");
  }
  if (workers <= 0) workers = DefaultWorkers();
  MatchStats total;
  total.num_seats = config.seats();
  const auto count = static_cast<std::int64_t>(n);

#pragma omp parallel num_threads(workers)
  {
    MatchStats partial;
    partial.num_seats = config.seats();
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      partial.Add(PlayGame(config, profile,
                           DeriveGameSeed(master_seed,
                                          static_cast<std::uint64_t>(i))));
    }
#pragma omp critical
    total.Merge(partial);
  }
  return total;
}

std::vector<Profile> AllProfiles(int seats) {
  int count = 1;
  for (int s = 0; s < seats; ++s) count *= 3;
  std::vector<Profile> out;
  out.reserve(count);
  for (int rank = 0; rank < count; ++rank) {
    Profile p(seats);
    int r = rank;
    for (int s = seats - 1; s >= 0; --s) {
      p[s] = kAllStrategies[r % 3];
      r /= 3;
    }
    out.push_back(std::move(p));
  }
  return out;
}

int ProfileRank(const Profile& profile) {
  int rank = 0;
  for (StrategyKind k : profile) rank = rank * 3 + static_cast<int>(k);
  return rank;
}

PayoffTable Sweep(const GameConfig& config, std::uint64_t n,
                  std::uint64_t master_seed, int workers) {
  PayoffTable table{config, n, master_seed, {}};
  for (Profile& p : AllProfiles(config.seats())) {
    const auto seed =
        DeriveGameSeed(master_seed, static_cast<std::uint64_t>(ProfileRank(p)));
    MatchStats stats = Simulate(config, p, n, seed, workers);
    table.rows.push_back({std::move(p), stats});
  }
  return table;
}

}  // namespace ludo_lab
