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

#include "ludo_lab/analytics.h"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ludo_lab {
namespace {

constexpr int kPP = 0;
constexpr int kS = 1;
constexpr int kM = 2;

// Expected movement over the 16-turn two-seat game, as printed.
constexpr double kE = 99.67;

int Idx(AnalyticStrategy s) { return static_cast<int>(s); }

// Case sums for each unordered pairing, first value for the lower index.
std::pair<double, double> DerivedCell(int a, int b) {
  if (a == kPP && b == kPP) return {kE + 56 + 3.5, kE + 56 + 3.5};
  if (a == kS && b == kS) return {kE, kE};
  if (a == kPP && b == kS) {
    const double pp = 0.25 * (kE + 56 + 7) + 0.5 * (37 + 12.5 + 3.5) +
                      0.25 * (12 + 12);
    const double s = 50 + 0.25 * (12 + 12) + 0.5 * (37 + 3.5) +
                     0.25 * (50 + 7);
    return {pp, s};
  }
  if (a == kPP && b == kM) {
    const double pp = 0.75 * (kE + 56) + 0.25 * 12;
    const double m = 25 + 30 + 56 + 0.75 * (10 + 3.5) + 0.25 * 19;
    return {pp, m};
  }
  if (a == kS && b == kM) {
    const double s = 50 + 0.75 * (50 + 3.5) + 0.25 * 12;
    const double m = 25 + 0.75 * (12.5 + 25) + 0.25 * (30 + 56 + 19 + 3.5);
    return {s, m};
  }
  // M against M.
  const double m = 0.25 * (56 + 56 + 19) + 0.25 * (12.5 + 12.5) +
                   0.25 * (56 + 56 + 9.5) + 0.25 * (12.5 + 25);
  return {m, m};
}

double IsolatedValue(AnalyticStrategy s) {
  return s == AnalyticStrategy::kPP ? kExpectedPoints4p + 56 + 3.5
                                    : kExpectedPoints4p;
}

}  // namespace

std::string_view AnalyticName(AnalyticStrategy s) {
  switch (s) {
    case AnalyticStrategy::kPP: return "PP";
    case AnalyticStrategy::kS: return "S";
    case AnalyticStrategy::kM: return "M";
  }
  return "";
}

std::optional<AnalyticStrategy> ParseAnalytic(std::string_view name) {
  std::string upper;
  for (char c : name) {
    upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  for (AnalyticStrategy s : kAllAnalyticStrategies) {
    if (AnalyticName(s) == upper) return s;
  }
  return std::nullopt;
}

double ExpectedTotalPoints(double m) {
  if (m < 0) throw std::invalid_argument("move count must be non-negative");
  return (m + m / 6) * kDieMean + (m / 36) * kSpoiledDieMean;
}

Bimatrix ExpectedPayoffTable2p() {
  Bimatrix t{};
  auto set = [&t](int r, int c, double a, double b) {
    t[r][c] = {a, b};
    t[c][r] = {b, a};
  };
  set(kPP, kPP, 159.17, 159.17);
  set(kPP, kS, 73, 90.5);
  set(kPP, kM, 120, 126);
  set(kS, kS, 99.67, 99.67);
  set(kS, kM, 93, 80.25);
  set(kM, kM, 103, 103);
  return t;
}

Rederivation2p RederivePayoff2p(AnalyticStrategy row, AnalyticStrategy col) {
  const int r = Idx(row);
  const int c = Idx(col);
  Rederivation2p out;
  if (r <= c) {
    out.derived = DerivedCell(r, c);
  } else {
    const auto d = DerivedCell(c, r);
    out.derived = {d.second, d.first};
  }
  out.printed = ExpectedPayoffTable2p()[r][c];
  out.discrepancy =
      std::abs(out.derived.first - out.printed.first) > kRederiveTolerance ||
      std::abs(out.derived.second - out.printed.second) > kRederiveTolerance;
  return out;
}

Bimatrix WinTable2p() {
  const Bimatrix points = ExpectedPayoffTable2p();
  Bimatrix t{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const auto [a, b] = points[r][c];
      t[r][c] = a > b ? std::pair{1.0, 0.0}
                      : a < b ? std::pair{0.0, 1.0} : std::pair{0.5, 0.5};
    }
  }
  return t;
}

double SeatCorrection4p(int seat) {
  static constexpr std::array<double, 4> kFactor = {0.4, 0.2, 0.0, 0.8};
  if (seat < 0 || seat >= 4) throw std::out_of_range("seat out of range");
  return kFactor[seat] * kDieMean;
}

std::array<SeatPayoff4p, 4> ExpectedPayoffs4p(
    std::span<const AnalyticStrategy> profile) {
  if (profile.size() != 4) {
    throw std::invalid_argument("four-seat profile expected");
  }
  for (AnalyticStrategy s : profile) {
    if (s == AnalyticStrategy::kM) {
      throw std::invalid_argument("M has no four-seat expected-path value");
    }
  }
  std::array<SeatPayoff4p, 4> out;
  bool all_pp = true;
  for (int i = 0; i < 4; ++i) {
    out[i].value = IsolatedValue(profile[i]);
    all_pp = all_pp && profile[i] == AnalyticStrategy::kPP;
  }
  for (int i = 0; i < 4; ++i) {
    const int next = (i + 1) % 4;
    if (profile[i] == AnalyticStrategy::kPP &&
        profile[next] == AnalyticStrategy::kS) {
      const double x = SeatCorrection4p(i);
      out[i].value = kInteractingPpBase + x;
      out[next].value = kInteractingSBase - x;
    }
  }
  if (all_pp) {
    for (SeatPayoff4p& seat : out) {
      seat.printed = kAllPpPrinted4p;
      seat.discrepancy = true;
    }
  }
  return out;
}

}  // namespace ludo_lab
