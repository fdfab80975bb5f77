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

#ifndef LUDO_LAB_ANALYTICS_H_
#define LUDO_LAB_ANALYTICS_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "ludo_lab/equilibrium.h"

namespace ludo_lab {

// Expected-path strategies: promotion priority, safe progress, and a mix.
enum class AnalyticStrategy { kPP, kS, kM };

inline constexpr std::array<AnalyticStrategy, 3> kAllAnalyticStrategies = {
    AnalyticStrategy::kPP, AnalyticStrategy::kS, AnalyticStrategy::kM};

std::string_view AnalyticName(AnalyticStrategy s);
std::optional<AnalyticStrategy> ParseAnalytic(std::string_view name);

inline constexpr double kDieMean = 3.5;
// Mean of a spoiled third six's replacement roll, (1+..+5)/6.
inline constexpr double kSpoiledDieMean = 2.5;

// Expected movement points over m pool picks: one extra move per six and
// a spoiled roll per double six. Throws std::invalid_argument if m < 0.
double ExpectedTotalPoints(double m);

// Printed expected-path points for the 16-turn two-seat game, indexed by
// AnalyticStrategy (row player first).
Bimatrix ExpectedPayoffTable2p();

struct Rederivation2p {
  std::pair<double, double> derived;
  std::pair<double, double> printed;
  // Set when either seat differs from the printed value by more than
  // kRederiveTolerance.
  bool discrepancy = false;
};

inline constexpr double kRederiveTolerance = 0.5;

// Re-evaluates the case-weighted sums behind each printed cell.
Rederivation2p RederivePayoff2p(AnalyticStrategy row, AnalyticStrategy col);

// 1 / 0 / 0.5 outcome pairs from comparing the printed points.
Bimatrix WinTable2p();

struct SeatPayoff4p {
  double value = 0.0;
  // Printed value, where it disagrees with the formula.
  std::optional<double> printed;
  bool discrepancy = false;
};

inline constexpr double kExpectedPoints4p = 83.06;
inline constexpr double kAllPpPrinted4p = 132.56;
inline constexpr double kInteractingPpBase = 50.85;
inline constexpr double kInteractingSBase = 67.75;

// Seat correction applied to a PP seat whose successor plays S.
double SeatCorrection4p(int seat);

// Per-seat expected points for a four-seat PP/S profile. A PP seat whose
// cyclic successor plays S forms an interacting pair with it; all other
// seats get the isolated value. Throws std::invalid_argument for M or a
// profile that is not four seats long.
std::array<SeatPayoff4p, 4> ExpectedPayoffs4p(
    std::span<const AnalyticStrategy> profile);

}  // namespace ludo_lab

#endif  // LUDO_LAB_ANALYTICS_H_
