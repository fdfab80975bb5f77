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

#ifndef LUDO_LAB_EQUILIBRIUM_H_
#define LUDO_LAB_EQUILIBRIUM_H_

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ludo_lab/strategies.h"

namespace ludo_lab {

// Win percentage of every seat under every strategy profile.
class WinTable {
 public:
  explicit WinTable(int seats);

  int seats() const { return seats_; }
  void Set(const Profile& profile, std::vector<double> win_pct);
  bool Has(const Profile& profile) const;
  // Throws std::invalid_argument naming the profile if it was never set.
  const std::vector<double>& Get(const Profile& profile) const;
  // First profile (lexicographic) without values, if any.
  std::optional<Profile> FirstMissing() const;

 private:
  int seats_;
  std::vector<std::optional<std::vector<double>>> cells_;
};

struct EquilibriumReport {
  double epsilon = 0.0;
  std::vector<Profile> profiles;  // lexicographic
};

// Worst-case binomial standard error of a win percentage over n games.
double StdError(std::uint64_t n);

// Profiles where no seat gains strictly more than `epsilon` percentage
// points by switching strategy alone. Throws std::invalid_argument if the
// table is incomplete.
EquilibriumReport EpsilonNe(const WinTable& table, double epsilon);

// Row/column value pairs of a two-seat, three-strategy game.
using Bimatrix = std::array<std::array<std::pair<double, double>, 3>, 3>;

// Pure-strategy Nash equilibria as (row, column) strategy indices.
std::vector<std::pair<int, int>> PureNeBimatrix(const Bimatrix& payoffs);

}  // namespace ludo_lab

#endif  // LUDO_LAB_EQUILIBRIUM_H_
