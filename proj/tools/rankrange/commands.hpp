// Copyright 2026 The rankrange Authors
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

#ifndef RANKRANGE_TOOLS_COMMANDS_HPP_
#define RANKRANGE_TOOLS_COMMANDS_HPP_

#include <iosfwd>

namespace rankrange::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFailedCheck = 2;

/// Parses argv, runs one subcommand and writes its JSON report.
/// Errors go to `err` as a single-line {"error": {...}} object.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rankrange::cli

#endif  // RANKRANGE_TOOLS_COMMANDS_HPP_
