// Copyright 2026 The perioband Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace perioband::cli {

/// Process exit codes. Stable across releases.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitSingular = 2,
  kExitFormat = 3,
  kExitZeroPivot = 4,
  kExitInternal = 5,
};

/// Runs one command line (without the program name). Results go to `out`
/// (or to the -o file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace perioband::cli
