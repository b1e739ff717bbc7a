// Copyright 2026 The Authors.
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

#ifndef OMCERT_CLI_H_
#define OMCERT_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace omcert {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;          // success, or the verdict is "yes"
inline constexpr int kExitVerdictNo = 1;   // e.g. non-Euclidean, invalid
inline constexpr int kExitInputError = 2;  // unreadable or malformed input
inline constexpr int kExitInternal = 3;

struct CommandOutcome {
  int exit_code = kExitOk;
  std::string report;
  std::optional<std::string> artifact_path;
};

// Runs one subcommand; `args` excludes the program name. The report is also
// written to `out`, diagnostics to `err`.
CommandOutcome RunCommand(const std::vector<std::string>& args,
                          std::ostream& out, std::ostream& err);

}  // namespace omcert

#endif  // OMCERT_CLI_H_
