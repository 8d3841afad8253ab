// Copyright 2026 The readk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef READK_TOOLS_CLI_H_
#define READK_TOOLS_CLI_H_

#include <iosfwd>
#include <span>
#include <string>

namespace readk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

// Runs one readk command. `args` holds the full argument vector including
// the program name. Results go to `out` as JSON lines (or an aligned table
// with --pretty); diagnostics go to `err` as a single line.
//
// Exit codes: 0 success, 1 an audited inequality failed, 2 usage or
// validation error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace readk::cli

#endif  // READK_TOOLS_CLI_H_
