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

#include "graphstar/graph.hpp"

#include <algorithm>
#include <numeric>

namespace graphstar {
namespace {

Leg SortedLeg(Leg leg) {
  if (leg[1] < leg[0]) std::swap(leg[0], leg[1]);
  return leg;
}

// Applies new_index[old] (0-based) to internal targets and to the vertex
// order; pairs come out sorted.
std::vector<Leg> Relabel(const std::vector<Leg>& legs, const std::vector<int>& new_index) {
  std::vector<Leg> out(legs.size());
  for (size_t v = 0; v < legs.size(); ++v) {
    Leg leg = legs[v];
    for (Target& t : leg) {
      if (t.is_internal()) t.index = new_index[static_cast<size_t>(t.index - 1)] + 1;
    }
    out[static_cast<size_t>(new_index[v])] = SortedLeg(leg);
  }
  return out;
}

}  // namespace

std::string ToString(Target t) {
  return (t.is_boundary() ? "B" : "V") + std::to_string(t.index);
}

bool LegsHaveCircuit(const std::vector<Leg>& legs) {
  const int n = static_cast<int>(legs.size());
  // Kahn's algorithm over internal-to-internal edges.
  std::vector<int> out_internal(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> parents(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (const Target& t : legs[static_cast<size_t>(v)]) {
      if (t.is_internal() && t.index >= 1 && t.index <= n) {
        ++out_internal[static_cast<size_t>(v)];
        parents[static_cast<size_t>(t.index - 1)].push_back(v);
      }
    }
  }
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    if (out_internal[static_cast<size_t>(v)] == 0) stack.push_back(v);
  }
  int removed = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++removed;
    for (int p : parents[static_cast<size_t>(v)]) {
      if (--out_internal[static_cast<size_t>(p)] == 0) stack.push_back(p);
    }
  }
  return removed != n;
}

void ValidateLegs(int m, const std::vector<Leg>& legs) {
  if (m < 1) throw GraphError("boundary arity must be at least 1, got " + std::to_string(m));
  const int n = static_cast<int>(legs.size());
  for (int k = 1; k <= n; ++k) {
    const Leg& leg = legs[static_cast<size_t>(k - 1)];
    for (const Target& t : leg) {
      const int limit = t.is_boundary() ? m : n;
      if (t.index < 1 || t.index > limit) {
        throw GraphError("target " + ToString(t) + " of v" + std::to_string(k) + " is out of range");
      }
      if (t == Target::V(k)) {
        throw GraphError("self-edge at v" + std::to_string(k));
      }
    }
    if (leg[0] == leg[1]) {
      throw GraphError("parallel edges at v" + std::to_string(k) + " (both legs on " +
                       ToString(leg[0]) + ")");
    }
  }
  if (LegsHaveCircuit(legs)) throw GraphError("directed circuit among internal vertices");
}

AdmissibleGraph::AdmissibleGraph(int m, std::vector<Leg> legs) : m_(m), legs_(std::move(legs)) {
  ValidateLegs(m_, legs_);
}

AdmissibleGraph AdmissibleGraph::Unchecked(int m, std::vector<Leg> legs) {
  AdmissibleGraph g;
  g.m_ = m;
  g.legs_ = std::move(legs);
  return g;
}

std::vector<int> AdmissibleGraph::BoundaryInDegrees() const {
  std::vector<int> deg(static_cast<size_t>(m_), 0);
  for (const Leg& leg : legs_) {
    for (const Target& t : leg) {
      if (t.is_boundary()) ++deg[static_cast<size_t>(t.index - 1)];
    }
  }
  return deg;
}

std::vector<int> AdmissibleGraph::InternalInDegrees() const {
  std::vector<int> deg(legs_.size(), 0);
  for (const Leg& leg : legs_) {
    for (const Target& t : leg) {
      if (t.is_internal()) ++deg[static_cast<size_t>(t.index - 1)];
    }
  }
  return deg;
}

std::strong_ordering operator<=>(const CanonicalGraph& a, const CanonicalGraph& b) {
  if (auto c = a.m() <=> b.m(); c != 0) return c;
  if (auto c = a.n() <=> b.n(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.legs().begin(), a.legs().end(),
                                                b.legs().begin(), b.legs().end());
}

CanonicalGraph Canonicalize(const AdmissibleGraph& g) {
  ValidateLegs(g.m(), g.legs());
  const size_t n = static_cast<size_t>(g.n());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Leg> best = Relabel(g.legs(), perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<Leg> candidate = Relabel(g.legs(), perm);
    if (candidate < best) best = std::move(candidate);
  }
  return CanonicalGraph(AdmissibleGraph::Unchecked(g.m(), std::move(best)));
}

CanonicalGraph UnitGraph(int m) { return Canonicalize(AdmissibleGraph(m, {})); }

std::int64_t AutomorphismCount(const CanonicalGraph& g) {
  const size_t n = static_cast<size_t>(g.n());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    if (Relabel(g.legs(), perm) == g.legs()) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

CanonicalGraph Transpose(const CanonicalGraph& g) {
  std::vector<Leg> legs = g.legs();
  for (Leg& leg : legs) {
    for (Target& t : leg) {
      if (t.is_boundary()) t.index = g.m() + 1 - t.index;
    }
  }
  return Canonicalize(AdmissibleGraph::Unchecked(g.m(), std::move(legs)));
}

bool IsForest(const CanonicalGraph& g) {
  const std::vector<int> deg = g.graph().InternalInDegrees();
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 1; });
}

bool IsZeroInDegree(const CanonicalGraph& g) {
  const std::vector<int> deg = g.graph().InternalInDegrees();
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0; });
}

std::vector<CanonicalGraph> PrimeFactorize(const CanonicalGraph& g) {
  const int n = g.n();
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  for (int v = 0; v < n; ++v) {
    for (const Target& t : g.legs()[static_cast<size_t>(v)]) {
      if (t.is_internal()) parent[static_cast<size_t>(find(v))] = find(t.index - 1);
    }
  }
  std::vector<CanonicalGraph> factors;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v0 = 0; v0 < n; ++v0) {
    const int rep = find(v0);
    if (seen[static_cast<size_t>(rep)]) continue;
    seen[static_cast<size_t>(rep)] = true;
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (find(v) == rep) members.push_back(v);
    }
    std::vector<int> local(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < members.size(); ++i) local[static_cast<size_t>(members[i])] = static_cast<int>(i);
    std::vector<Leg> legs;
    for (int v : members) {
      Leg leg = g.legs()[static_cast<size_t>(v)];
      for (Target& t : leg) {
        if (t.is_internal()) t.index = local[static_cast<size_t>(t.index - 1)] + 1;
      }
      legs.push_back(leg);
    }
    factors.push_back(Canonicalize(AdmissibleGraph::Unchecked(g.m(), std::move(legs))));
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

bool IsPrime(const CanonicalGraph& g) { return g.n() >= 1 && PrimeFactorize(g).size() == 1; }

std::optional<CanonicalGraph> BoundaryProduct(const CanonicalGraph& a, const CanonicalGraph& b) {
  if (a.m() != b.m()) return std::nullopt;
  std::vector<Leg> legs = a.legs();
  for (Leg leg : b.legs()) {
    for (Target& t : leg) {
      if (t.is_internal()) t.index += a.n();
    }
    legs.push_back(leg);
  }
  return Canonicalize(AdmissibleGraph::Unchecked(a.m(), std::move(legs)));
}

Heights ComputeHeights(const CanonicalGraph& g) {
  if (g.m() != 2) throw ArityError("heights need m = 2, got m = " + std::to_string(g.m()));
  const std::vector<int> deg = g.graph().BoundaryInDegrees();
  return {deg[0], deg[1], deg[1] - deg[0]};
}

CanonicalGraph Pad(const CanonicalGraph& g, PadSide side) {
  if (g.m() != 2) throw ArityError("pad needs m = 2, got m = " + std::to_string(g.m()));
  std::vector<Leg> legs = g.legs();
  if (side == PadSide::kLeft) {
    for (Leg& leg : legs) {
      for (Target& t : leg) {
        if (t.is_boundary()) t.index += 1;
      }
    }
  }
  return Canonicalize(AdmissibleGraph::Unchecked(3, std::move(legs)));
}

}  // namespace graphstar
