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

#ifndef MATROID_TOOLS_CLI_H_
#define MATROID_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace matroid::cli {

// Process exit codes.
enum ExitCode {
  kExitOk = 0,
  kExitViolation = 1,
  kExitMalformed = 2,
  kExitBadWeights = 3,
  kExitMismatch = 4,
  kExitResourceGuard = 5,
};

// Runs the command line `args` (without the program name). Reports go to
// `out` as JSON, or as a table when `tty` is set and --json is absent.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, bool tty = false);

}  // namespace matroid::cli

#endif  // MATROID_TOOLS_CLI_H_
