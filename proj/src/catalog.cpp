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

#include "graphstar/catalog.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace graphstar::catalog {
namespace {

using T = Target;

CanonicalGraph Chain(int n, int m, Leg last, bool left) {
  if (n < 1) throw std::invalid_argument("chain length must be at least 1");
  std::vector<Leg> legs;
  for (int k = 1; k < n; ++k) {
    legs.push_back(left ? Leg{T::B(1), T::V(k + 1)} : Leg{T::V(k + 1), T::B(2)});
  }
  legs.push_back(last);
  return MakeGraph(m, std::move(legs));
}

}  // namespace

CanonicalGraph B0() { return UnitGraph(2); }
CanonicalGraph Bullet() { return UnitGraph(1); }
CanonicalGraph B1() { return MakeGraph(2, {{T::B(1), T::B(2)}}); }
CanonicalGraph BnL(int n) { return Chain(n, 2, {T::B(1), T::B(2)}, true); }
CanonicalGraph BnR(int n) { return Chain(n, 2, {T::B(1), T::B(2)}, false); }
CanonicalGraph B1Squared() { return MakeGraph(2, {{T::B(1), T::B(2)}, {T::B(1), T::B(2)}}); }

CanonicalGraph B1L() { return MakeGraph(3, {{T::B(1), T::B(2)}}); }
CanonicalGraph B1M() { return MakeGraph(3, {{T::B(1), T::B(3)}}); }
CanonicalGraph B1R() { return MakeGraph(3, {{T::B(2), T::B(3)}}); }
CanonicalGraph T2L() { return MakeGraph(3, {{T::B(1), T::V(2)}, {T::B(2), T::B(3)}}); }
CanonicalGraph T2R() { return MakeGraph(3, {{T::V(2), T::B(3)}, {T::B(1), T::B(2)}}); }
CanonicalGraph C2() { return MakeGraph(3, {{T::B(2), T::V(2)}, {T::B(1), T::B(3)}}); }
CanonicalGraph C2L() { return MakeGraph(3, {{T::B(1), T::B(2)}, {T::B(1), T::B(3)}}); }
CanonicalGraph C2R() { return MakeGraph(3, {{T::B(1), T::B(3)}, {T::B(2), T::B(3)}}); }
CanonicalGraph GammaN(int n) { return Chain(n, 3, {T::B(2), T::B(3)}, true); }

CanonicalGraph B1SquaredL() { return Pad(B1Squared(), PadSide::kRight); }
CanonicalGraph B1SquaredR() { return Pad(B1Squared(), PadSide::kLeft); }
CanonicalGraph B1SquaredM() { return MakeGraph(3, {{T::B(1), T::B(3)}, {T::B(1), T::B(3)}}); }

CanonicalGraph ByName(const std::string& name) {
  static const std::map<std::string, CanonicalGraph (*)()> fixed = {
      {"b0", B0},   {"bullet", Bullet}, {"b1", B1},        {"b1sq", B1Squared}, {"b1L", B1L},
      {"b1M", B1M}, {"b1R", B1R},       {"t2L", T2L},      {"t2R", T2R},        {"c2", C2},
      {"c2L", C2L}, {"c2R", C2R},       {"b1sqL", B1SquaredL}, {"b1sqR", B1SquaredR},
      {"b1sqM", B1SquaredM}};
  if (auto it = fixed.find(name); it != fixed.end()) return it->second();
  auto indexed = [&](const std::string& prefix, const std::string& suffix) -> int {
    if (name.size() <= prefix.size() + suffix.size()) return 0;
    if (name.compare(0, prefix.size(), prefix) != 0) return 0;
    if (name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) return 0;
    const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 2) return 0;
    return std::stoi(digits);
  };
  if (int n = indexed("b", "L"); n > 0) return BnL(n);
  if (int n = indexed("b", "R"); n > 0) return BnR(n);
  if (int n = indexed("Gamma", ""); n > 0) return GammaN(n);
  throw std::invalid_argument("unknown catalog graph '" + name + "'");
}

}  // namespace graphstar::catalog
