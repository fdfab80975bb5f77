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

#ifndef LUDO_LAB_RNG_H_
#define LUDO_LAB_RNG_H_

#include <cstdint>

namespace ludo_lab {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// splitmix64 output finalizer.
constexpr std::uint64_t Avalanche(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t Next() {
    state_ += kGoldenGamma;
    return Avalanche(state_);
  }

 private:
  std::uint64_t state_;
};

// Maps a uniform 64-bit word onto 1..6 via the high half of x * 6.
constexpr int DieFromU64(std::uint64_t x) {
  return 1 + static_cast<int>((static_cast<unsigned __int128>(x) * 6) >> 64);
}

// Source of die faces. Pool dice and extra-move dice are drawn from the same
// source in the order the game consumes them.
class DiceSource {
 public:
  virtual ~DiceSource() = default;
  virtual int Roll() = 0;
};

class RngDice final : public DiceSource {
 public:
  explicit RngDice(std::uint64_t seed) : rng_(seed) {}
  int Roll() override { return DieFromU64(rng_.Next()); }

 private:
  SplitMix64 rng_;
};

}  // namespace ludo_lab

#endif  // LUDO_LAB_RNG_H_
