// Copyright 2026 The Graphstar Authors
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

#ifndef GRAPHSTAR_TOOLS_CLI_HPP_
#define GRAPHSTAR_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace graphstar::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInfeasible = 3 };

// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphstar::cli

#endif  // GRAPHSTAR_TOOLS_CLI_HPP_
