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

// Named graphs. Subscripted names follow the usual notation: b_n^L is the
// left Bernoulli chain, t/c are the order-2 graphs on three boundary points.

#ifndef GRAPHSTAR_CATALOG_HPP_
#define GRAPHSTAR_CATALOG_HPP_

#include <string>

#include "graphstar/graph.hpp"

namespace graphstar::catalog {

CanonicalGraph B0();      // m = 2, n = 0
CanonicalGraph Bullet();  // m = 1, n = 0
CanonicalGraph B1();
CanonicalGraph BnL(int n);
CanonicalGraph BnR(int n);
CanonicalGraph B1Squared();

CanonicalGraph B1L();
CanonicalGraph B1M();
CanonicalGraph B1R();
CanonicalGraph T2L();
CanonicalGraph T2R();
CanonicalGraph C2();
CanonicalGraph C2L();
CanonicalGraph C2R();
CanonicalGraph GammaN(int n);

// b_1^2 padded on the right / left, and the square of the middle wedge.
CanonicalGraph B1SquaredL();
CanonicalGraph B1SquaredR();
CanonicalGraph B1SquaredM();

// Looks up any of the names above ("b0", "b1", "b2L", "b3R", "t2L", "Gamma3",
// "b1sqL", ...). Throws std::invalid_argument for unknown names.
CanonicalGraph ByName(const std::string& name);

}  // namespace graphstar::catalog

#endif  // GRAPHSTAR_CATALOG_HPP_
