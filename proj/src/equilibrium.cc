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

#include "ludo_lab/equilibrium.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ludo_lab/montecarlo.h"

namespace ludo_lab {
namespace {

int ProfileCount(int seats) {
  int n = 1;
  for (int s = 0; s < seats; ++s) n *= 3;
  return n;
}

// Ranks r (base-3 digits, seat 0 most significant) such that no seat's
// unilateral deviation raises its value by more than epsilon.
template <typename ValueFn>
std::vector<int> NashRanks(int seats, double epsilon, ValueFn value) {
  std::vector<int> out;
  const int count = ProfileCount(seats);
  for (int rank = 0; rank < count; ++rank) {
    bool stable = true;
    int place = count / 3;
    for (int seat = 0; seat < seats && stable; ++seat, place /= 3) {
      const int own = (rank / place) % 3;
      const double base = value(rank, seat);
      for (int alt = 0; alt < 3 && stable; ++alt) {
        if (alt == own) continue;
        const int deviated = rank + (alt - own) * place;
        if (value(deviated, seat) - base > epsilon) stable = false;
      }
    }
    if (stable) out.push_back(rank);
  }
  return out;
}

}  // namespace

WinTable::WinTable(int seats) : seats_(seats), cells_(ProfileCount(seats)) {
  if (seats < 1 || seats > kMaxSeats) {
    throw std::invalid_argument("unsupported seat count");
  }
}

void WinTable::Set(const Profile& profile, std::vector<double> win_pct) {
  if (static_cast<int>(profile.size()) != seats_ ||
      static_cast<int>(win_pct.size()) != seats_) {
    throw std::invalid_argument("profile size does not match the table");
  }
  cells_[ProfileRank(profile)] = std::move(win_pct);
}

bool WinTable::Has(const Profile& profile) const {
  return static_cast<int>(profile.size()) == seats_ &&
         cells_[ProfileRank(profile)].has_value();
}

const std::vector<double>& WinTable::Get(const Profile& profile) const {
  if (!Has(profile)) {
    throw std::invalid_argument("win table has no entry for profile (" +
                                FormatProfile(profile) + ")");
  }
  return *cells_[ProfileRank(profile)];
}

std::optional<Profile> WinTable::FirstMissing() const {
  const auto all = AllProfiles(seats_);
  for (std::size_t r = 0; r < cells_.size(); ++r) {
    if (!cells_[r]) return all[r];
  }
  return std::nullopt;
}

double StdError(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("standard error needs n >= 1");
  return 100.0 * std::sqrt(0.25 / static_cast<double>(n));
}

EquilibriumReport EpsilonNe(const WinTable& table, double epsilon) {
  if (auto missing = table.FirstMissing()) {
    throw std::invalid_argument("win table is missing profile (" +
                                FormatProfile(*missing) + ")");
  }
  const auto all = AllProfiles(table.seats());
  EquilibriumReport report;
  report.epsilon = epsilon;
  for (int rank : NashRanks(table.seats(), epsilon, [&](int r, int seat) {
         return table.Get(all[r])[seat];
       })) {
    report.profiles.push_back(all[rank]);
  }
  return report;
}

std::vector<std::pair<int, int>> PureNeBimatrix(const Bimatrix& payoffs) {
  std::vector<std::pair<int, int>> out;
  for (int rank : NashRanks(2, 0.0, [&](int r, int seat) {
         const auto& cell = payoffs[r / 3][r % 3];
         return seat == 0 ? cell.first : cell.second;
       })) {
    out.emplace_back(rank / 3, rank % 3);
  }
  return out;
}

}  // namespace ludo_lab
