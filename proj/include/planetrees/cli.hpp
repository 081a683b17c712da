// Copyright 2026 The planetrees Authors
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

#ifndef PLANETREES_CLI_HPP_
#define PLANETREES_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace planetrees {

// Process exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitParseError = 2,
  kExitInfeasible = 3,
  kExitResourceLimit = 4,
};

// verify-all refuses bounds above this many vertices.
inline constexpr std::size_t kMaxVerifyAllVertices = 14;

// Runs the tool on `args` (without the program name). Results go to `out`,
// diagnostics to `err`; the return value is an ExitStatus.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace planetrees

#endif  // PLANETREES_CLI_HPP_
