// Copyright 2026 The qctp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qctp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitFidelityFailure = 4;

/// Runs the command line `args` (without the program name). Reports go to
/// --out when given, otherwise to `out`; diagnostics go to `err`.
int run_cli(std::vector<std::string> args, std::ostream &out, std::ostream &err);

}  // namespace qctp::cli
