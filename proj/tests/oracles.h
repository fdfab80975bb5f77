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

// Independent reference computations shared by the test binaries.

#ifndef LUDO_LAB_TESTS_ORACLES_H_
#define LUDO_LAB_TESTS_ORACLES_H_

#include <algorithm>
#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "ludo_lab/rng.h"

namespace ludo_lab::testing {

// Replays a fixed list of faces, then repeats `fill`.
class ScriptedDice final : public DiceSource {
 public:
  explicit ScriptedDice(std::vector<int> faces, int fill = 1)
      : faces_(std::move(faces)), fill_(fill) {}
  int Roll() override {
    return next_ < faces_.size() ? faces_[next_++] : fill_;
  }
  std::size_t used() const { return next_; }

 private:
  std::vector<int> faces_;
  std::size_t next_ = 0;
  int fill_;
};

// One two-seat turn where every extra-move die shows 1. No capture can
// happen in a single turn: seat 0 reaches at most pos 14 (cells 0..14) and
// seat 1 at most pos 7 (cells 26..33).
//
// Naive vs naive: picks go seat 0, seat 1, seat 0 in pool order, each moving
// token 0; a six adds a one-step extra move.
inline std::pair<int, int> MiniGameNaive(const std::array<int, 3>& d) {
  auto bonus = [](int v) { return v == 6 ? 1 : 0; };
  return {d[0] + bonus(d[0]) + d[2] + bonus(d[2]), d[1] + bonus(d[1])};
}

// Aggressive vs aggressive: with no capture or home-column landing in reach,
// each pick is the highest die left. Seat 0 gets the largest and smallest,
// seat 1 the middle.
inline std::pair<int, int> MiniGameAggressive(std::array<int, 3> d) {
  std::sort(d.begin(), d.end());
  auto bonus = [](int v) { return v == 6 ? 1 : 0; };
  return {d[2] + bonus(d[2]) + d[0] + bonus(d[0]), d[1] + bonus(d[1])};
}

}  // namespace ludo_lab::testing

#endif  // LUDO_LAB_TESTS_ORACLES_H_
