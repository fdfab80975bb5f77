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

// Published equilibrium sets for the embedded tables, keyed by fixture and
// epsilon rung (0, one standard error, two standard errors).

#ifndef LUDO_LAB_TESTS_EXPECTED_EQUILIBRIA_H_
#define LUDO_LAB_TESTS_EXPECTED_EQUILIBRIA_H_

#include <array>
#include <string>
#include <vector>

#include "ludo_lab/fixtures.h"

namespace ludo_lab::testing {

struct ExpectedNe {
  FixtureId fixture;
  std::array<std::vector<std::string>, 3> by_rung;
};

inline const std::vector<ExpectedNe>& ExpectedEquilibria() {
  static const std::vector<ExpectedNe> k = {
      {FixtureId::k2p16, {{{"RP,RP"}, {"RP,A", "RP,RP"}, {"RP,A", "RP,RP"}}}},
      {FixtureId::k2p20, {{{"A,A"}, {"A,A"}, {"A,A"}}}},
      {FixtureId::k2p24, {{{"A,A"}, {"A,A"}, {"A,A"}}}},
      {FixtureId::k4p16,
       {{{"RP,RP,RP,A", "RP,A,RP,RP"},
         {"RP,RP,RP,A", "RP,RP,A,RP", "RP,A,RP,RP"},
         {"RP,A,A,RP", "RP,A,RP,A", "RP,A,RP,RP", "A,RP,RP,A", "RP,RP,A,A",
          "RP,RP,A,RP", "RP,RP,RP,A", "RP,RP,RP,RP"}}}},
      {FixtureId::k4p12,
       {{{"RP,RP,RP,A"},
         {"RP,RP,RP,A", "RP,RP,RP,RP"},
         {"RP,RP,RP,A", "A,RP,RP,RP", "RP,RP,RP,RP"}}}},
      {FixtureId::k4p8,
       {{{"RP,RP,RP,A"},
         {"RP,RP,RP,A", "RP,RP,RP,RP"},
         {"RP,RP,RP,A", "RP,RP,RP,RP"}}}},
  };
  return k;
}

}  // namespace ludo_lab::testing

#endif  // LUDO_LAB_TESTS_EXPECTED_EQUILIBRIA_H_
