// Copyright 2026 The mbgate Authors
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

#ifndef MBGATE_CLI_HPP
#define MBGATE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mbgate {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kExitPass = 0,
    kExitFailure = 1,
    kExitUsage = 2,
};

/// Runs the tool on `args` (program name excluded).  Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace mbgate

#endif
