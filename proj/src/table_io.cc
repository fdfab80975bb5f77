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

#include "ludo_lab/table_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>

namespace ludo_lab {
namespace {

std::string SeatSuffix(int seats, int seat) {
  return seats == 2 ? "_p" + std::to_string(seat + 1)
                    : "_" + std::to_string(seat + 1);
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = line.find(',');
    out.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<double> ParseCell(std::string_view cell, int line_no) {
  cell = Trim(cell);
  if (cell.empty()) return std::nullopt;
  double v = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw TableFormatError("line " + std::to_string(line_no) +
                           ": not a number: '" + std::string(cell) + "'");
  }
  return v;
}

std::uint64_t ParseCount(std::string_view cell, int line_no) {
  cell = Trim(cell);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw TableFormatError("line " + std::to_string(line_no) +
                           ": not a count: '" + std::string(cell) + "'");
  }
  return v;
}

void AppendCell(std::string& out, const std::optional<double>& v) {
  out += ',';
  if (v) out += Format2(*v);
}

}  // namespace

double RoundTo2(double x) { return std::round(x * 100.0) / 100.0; }

std::string Format2(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

ResultTable ToResultTable(const PayoffTable& table) {
  ResultTable out;
  out.seats = table.config.seats();
  int sl = 1;
  for (const PayoffRow& row : table.rows) {
    ResultRow r;
    r.sl_no = sl++;
    r.profile = row.profile;
    r.games = row.stats.games;
    for (int s = 0; s < out.seats; ++s) {
      r.win_pct.push_back(RoundTo2(row.stats.WinPct(s)));
      r.mean.push_back(RoundTo2(row.stats.Mean(s)));
      r.sd.push_back(RoundTo2(row.stats.Sd(s)));
    }
    r.draw_pct = RoundTo2(row.stats.DrawPct());
    out.rows.push_back(std::move(r));
  }
  return out;
}

std::string CsvHeader(int seats) {
  std::string h;
  if (seats == 2) {
    h = "strategy_p1,strategy_p2";
  } else {
    h = "sl_no";
    for (int s = 0; s < seats; ++s) h += ",s" + std::to_string(s + 1);
  }
  h += ",games";
  for (int s = 0; s < seats; ++s) h += ",win_pct" + SeatSuffix(seats, s);
  h += ",draw_pct";
  for (int s = 0; s < seats; ++s) {
    h += ",mean" + SeatSuffix(seats, s) + ",sd" + SeatSuffix(seats, s);
  }
  return h;
}

std::string WriteCsv(const ResultTable& table) {
  std::string out;
  if (table.manifest) out += "# manifest " + table.manifest->dump() + "\n";
  out += CsvHeader(table.seats) + "\n";
  for (const ResultRow& r : table.rows) {
    std::string line;
    if (table.seats != 2) line = std::to_string(r.sl_no) + ",";
    line += FormatProfile(r.profile);
    line += "," + std::to_string(r.games);
    for (const auto& w : r.win_pct) AppendCell(line, w);
    AppendCell(line, r.draw_pct);
    for (int s = 0; s < table.seats; ++s) {
      AppendCell(line, r.mean[s]);
      AppendCell(line, r.sd[s]);
    }
    out += line + "\n";
  }
  return out;
}

nlohmann::json ToJson(const ResultTable& table) {
  auto opt = [](const std::optional<double>& v) -> nlohmann::json {
    return v ? nlohmann::json(RoundTo2(*v)) : nlohmann::json(nullptr);
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const ResultRow& r : table.rows) {
    nlohmann::json j;
    if (table.seats == 2) {
      j["strategy_p1"] = StrategyName(r.profile[0]);
      j["strategy_p2"] = StrategyName(r.profile[1]);
    } else {
      j["sl_no"] = r.sl_no;
      for (int s = 0; s < table.seats; ++s) {
        j["s" + std::to_string(s + 1)] = StrategyName(r.profile[s]);
      }
    }
    j["games"] = r.games;
    for (int s = 0; s < table.seats; ++s) {
      const std::string suffix = SeatSuffix(table.seats, s);
      j["win_pct" + suffix] = opt(r.win_pct[s]);
      j["mean" + suffix] = opt(r.mean[s]);
      j["sd" + suffix] = opt(r.sd[s]);
    }
    j["draw_pct"] = opt(r.draw_pct);
    rows.push_back(std::move(j));
  }
  nlohmann::json out;
  if (table.manifest) out["manifest"] = *table.manifest;
  out["rows"] = std::move(rows);
  return out;
}

ResultTable ParseCsv(std::string_view text) {
  ResultTable table;
  std::map<std::string, std::size_t> column;
  bool have_header = false;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = Trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kTag = "# manifest ";
      if (line.substr(0, kTag.size()) == kTag) {
        auto j = nlohmann::json::parse(line.substr(kTag.size()), nullptr,
                                       /*allow_exceptions=*/false);
        if (!j.is_discarded()) table.manifest = std::move(j);
      }
      continue;
    }
    const auto fields = SplitFields(line);
    if (!have_header) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        column[std::string(Trim(fields[i]))] = i;
      }
      if (column.count("strategy_p1")) {
        table.seats = 2;
      } else if (column.count("sl_no")) {
        table.seats = 4;
      } else {
        throw TableFormatError("unrecognised table header");
      }
      const std::string expected = CsvHeader(table.seats);
      for (std::string_view name : SplitFields(expected)) {
        if (!column.count(std::string(name))) {
          throw TableFormatError("missing column '" + std::string(name) + "'");
        }
      }
      have_header = true;
      continue;
    }
    if (fields.size() != column.size()) {
      throw TableFormatError("line " + std::to_string(line_no) +
                             ": expected " + std::to_string(column.size()) +
                             " fields");
    }
    auto at = [&](const std::string& name) { return fields[column.at(name)]; };
    ResultRow r;
    r.sl_no = static_cast<int>(table.rows.size()) + 1;
    for (int s = 0; s < table.seats; ++s) {
      const std::string name =
          table.seats == 2 ? "strategy" + SeatSuffix(2, s) : "s" + std::to_string(s + 1);
      const auto kind = ParseStrategy(at(name));
      if (!kind) {
        throw TableFormatError("line " + std::to_string(line_no) +
                               ": unknown strategy '" + std::string(at(name)) + "'");
      }
      r.profile.push_back(*kind);
    }
    if (table.seats != 2) {
      r.sl_no = static_cast<int>(ParseCount(at("sl_no"), line_no));
    }
    r.games = ParseCount(at("games"), line_no);
    for (int s = 0; s < table.seats; ++s) {
      const std::string suffix = SeatSuffix(table.seats, s);
      r.win_pct.push_back(ParseCell(at("win_pct" + suffix), line_no));
      r.mean.push_back(ParseCell(at("mean" + suffix), line_no));
      r.sd.push_back(ParseCell(at("sd" + suffix), line_no));
    }
    r.draw_pct = ParseCell(at("draw_pct"), line_no);
    table.rows.push_back(std::move(r));
  }
  if (!have_header) throw TableFormatError("empty table");
  return table;
}

WinTable ToWinTable(const ResultTable& table) {
  WinTable out(table.seats);
  for (const ResultRow& r : table.rows) {
    std::vector<double> w(table.seats);
    for (int s = 0; s < table.seats; ++s) {
      if (r.win_pct[s]) {
        w[s] = *r.win_pct[s];
      } else if (table.seats == 2 && !r.draw_pct && r.win_pct[1 - s]) {
        w[s] = 100.0 - *r.win_pct[1 - s];
      } else {
        throw TableFormatError("row " + std::to_string(r.sl_no) +
                               " has no win percentage for seat " +
                               std::to_string(s + 1));
      }
    }
    out.Set(r.profile, std::move(w));
  }
  return out;
}

std::uint64_t GamesPerProfile(const ResultTable& table) {
  if (table.rows.empty()) throw TableFormatError("table has no rows");
  const std::uint64_t n = table.rows.front().games;
  for (const ResultRow& r : table.rows) {
    if (r.games != n) {
      throw TableFormatError("rows disagree on the number of games");
    }
  }
  return n;
}

}  // namespace ludo_lab
