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

#ifndef LUDO_LAB_TABLE_IO_H_
#define LUDO_LAB_TABLE_IO_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ludo_lab/equilibrium.h"
#include "ludo_lab/montecarlo.h"
#include "ludo_lab/strategies.h"

namespace ludo_lab {

// Per-profile summary as printed: percentages and point statistics rounded
// to two decimals. Empty cells (a printed table that omits a column) are
// nullopt.
struct ResultRow {
  int sl_no = 0;
  Profile profile;
  std::uint64_t games = 0;
  std::vector<std::optional<double>> win_pct;
  std::optional<double> draw_pct;
  std::vector<std::optional<double>> mean;
  std::vector<std::optional<double>> sd;
};

struct ResultTable {
  int seats = 2;
  std::vector<ResultRow> rows;
  // Run manifest carried in a "# manifest {...}" comment line, if present.
  std::optional<nlohmann::json> manifest;
};

class TableFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double RoundTo2(double x);
// Fixed two-decimal rendering used in every emitted table.
std::string Format2(double x);

ResultTable ToResultTable(const PayoffTable& table);

// Two-seat schema:
//   strategy_p1,strategy_p2,games,win_pct_p1,win_pct_p2,draw_pct,
//   mean_p1,sd_p1,mean_p2,sd_p2
// Four-seat schema:
//   sl_no,s1,s2,s3,s4,games,win_pct_1..4,draw_pct,mean_1,sd_1,...,sd_4
std::string CsvHeader(int seats);
std::string WriteCsv(const ResultTable& table);
nlohmann::json ToJson(const ResultTable& table);

// Parses either schema. Lines starting with '#' are comments. Throws
// TableFormatError on malformed input.
ResultTable ParseCsv(std::string_view text);

// Win percentages per profile. In a two-seat table with no draw column, a
// missing second-seat win percentage is taken as 100 minus the first.
WinTable ToWinTable(const ResultTable& table);

// Games per profile shared by every row; throws TableFormatError if rows
// disagree.
std::uint64_t GamesPerProfile(const ResultTable& table);

}  // namespace ludo_lab

#endif  // LUDO_LAB_TABLE_IO_H_
