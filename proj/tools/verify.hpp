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

// Verification suites behind `graphstar verify <suite>`.

#ifndef GRAPHSTAR_TOOLS_VERIFY_HPP_
#define GRAPHSTAR_TOOLS_VERIFY_HPP_

#include <string>
#include <vector>

#include "graphstar/algebra.hpp"
#include "graphstar/graph.hpp"

namespace graphstar::cli {

struct Check {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct SuiteOptions {
  std::string data_path;  // appendix table
  unsigned seed = 20261019;
};

// Suite names: appendix duality prelie moyal jacobi assoc antipode trees.
const std::vector<std::string>& SuiteNames();
std::vector<Check> RunSuite(const std::string& suite, const SuiteOptions& options);

// Graph arguments: literal text "m=..", a catalog name, "padR:<name>",
// "padL:<name>", or literal text in braces.
CanonicalGraph ResolveGraph(const std::string& token);

// Signed term list as used by the appendix table.
GraphVector ParseExpectedVector(const std::string& text);
TensorVector ParseExpectedTensor(const std::string& text);

}  // namespace graphstar::cli

#endif  // GRAPHSTAR_TOOLS_VERIFY_HPP_
