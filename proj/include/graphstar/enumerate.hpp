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

#ifndef GRAPHSTAR_ENUMERATE_HPP_
#define GRAPHSTAR_ENUMERATE_HPP_

#include <string>
#include <vector>

#include "graphstar/graph.hpp"

namespace graphstar {

enum class Restriction { kFull, kForest, kZeroInDegree };

// "full", "forest", "constant" (alias "zero-in-degree").
Restriction ParseRestriction(const std::string& name);
std::string RestrictionName(Restriction r);
bool PassesRestriction(const CanonicalGraph& g, Restriction r);

// Every isomorphism class with n internal vertices on m boundary points,
// sorted by canonical encoding. Requires m in {1,2,3}. Results are memoized.
std::vector<CanonicalGraph> EnumerateClass(int n, int m, Restriction r);

// The parallel enumeration without the cache.
std::vector<CanonicalGraph> EnumerateClassUncached(int n, int m, Restriction r);
// Same output from a plain loop.
std::vector<CanonicalGraph> EnumerateClassSerial(int n, int m, Restriction r);

}  // namespace graphstar

#endif  // GRAPHSTAR_ENUMERATE_HPP_
