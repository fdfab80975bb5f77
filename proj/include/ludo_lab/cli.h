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

#ifndef LUDO_LAB_CLI_H_
#define LUDO_LAB_CLI_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ludo_lab {

inline constexpr std::string_view kVersion = "0.1.0";

// Exit codes of Run.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ludo_lab

#endif  // LUDO_LAB_CLI_H_
