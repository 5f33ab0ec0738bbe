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

// Admissible graphs: m ordered boundary vertices with no outgoing edges, and
// n internal vertices carrying exactly two outgoing edges ("legs") each.
// Graphs are acyclic and never contain self-edges or parallel edges.
//
// AdmissibleGraph keeps the legs exactly as given (the order inside a leg
// pair is significant for evaluation). CanonicalGraph is the isomorphism
// class representative: the leg list is lexicographically minimal over all
// relabelings of the internal vertices, with each pair sorted boundary-first.

#ifndef GRAPHSTAR_GRAPH_HPP_
#define GRAPHSTAR_GRAPH_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphstar {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation receives a graph of the wrong boundary arity.
class ArityError : public GraphError {
 public:
  using GraphError::GraphError;
};

struct Target {
  enum class Kind : std::uint8_t { kBoundary = 0, kInternal = 1 };

  Kind kind = Kind::kBoundary;
  int index = 1;  // 1-based

  static constexpr Target B(int i) { return {Kind::kBoundary, i}; }
  static constexpr Target V(int k) { return {Kind::kInternal, k}; }

  constexpr bool is_boundary() const { return kind == Kind::kBoundary; }
  constexpr bool is_internal() const { return kind == Kind::kInternal; }

  friend constexpr auto operator<=>(const Target&, const Target&) = default;
};

using Leg = std::array<Target, 2>;

// Checks every structural invariant; throws GraphError naming the first
// violation found.
void ValidateLegs(int m, const std::vector<Leg>& legs);

// True if the internal vertices contain a directed cycle (self-edges count).
bool LegsHaveCircuit(const std::vector<Leg>& legs);

class AdmissibleGraph {
 public:
  // Validating constructor.
  AdmissibleGraph(int m, std::vector<Leg> legs);

  // Skips validation; for internal constructions that preserve the invariants.
  static AdmissibleGraph Unchecked(int m, std::vector<Leg> legs);

  int m() const { return m_; }
  int n() const { return static_cast<int>(legs_.size()); }
  const std::vector<Leg>& legs() const { return legs_; }
  // 1-based internal vertex index.
  const Leg& leg(int k) const { return legs_.at(static_cast<size_t>(k - 1)); }

  // In-degree of every boundary vertex (index 0 is B1).
  std::vector<int> BoundaryInDegrees() const;
  // In-degree of every internal vertex (index 0 is V1).
  std::vector<int> InternalInDegrees() const;

  friend bool operator==(const AdmissibleGraph&, const AdmissibleGraph&) = default;

 private:
  AdmissibleGraph() = default;

  int m_ = 2;
  std::vector<Leg> legs_;
};

class CanonicalGraph {
 public:
  int m() const { return graph_.m(); }
  int n() const { return graph_.n(); }
  const std::vector<Leg>& legs() const { return graph_.legs(); }
  const Leg& leg(int k) const { return graph_.leg(k); }
  const AdmissibleGraph& graph() const { return graph_; }

  friend bool operator==(const CanonicalGraph& a, const CanonicalGraph& b) {
    return a.graph_ == b.graph_;
  }
  friend std::strong_ordering operator<=>(const CanonicalGraph& a, const CanonicalGraph& b);

 private:
  friend CanonicalGraph Canonicalize(const AdmissibleGraph& g);
  explicit CanonicalGraph(AdmissibleGraph g) : graph_(std::move(g)) {}

  AdmissibleGraph graph_;
};

CanonicalGraph Canonicalize(const AdmissibleGraph& g);
inline CanonicalGraph MakeGraph(int m, std::vector<Leg> legs) {
  return Canonicalize(AdmissibleGraph(m, std::move(legs)));
}

// The graph with m boundary vertices and no internal vertices.
CanonicalGraph UnitGraph(int m);

// Internal-vertex permutations fixing the leg structure (boundary fixed).
std::int64_t AutomorphismCount(const CanonicalGraph& g);

// Reverses the boundary order.
CanonicalGraph Transpose(const CanonicalGraph& g);

bool IsForest(const CanonicalGraph& g);
bool IsZeroInDegree(const CanonicalGraph& g);

// Factors over the boundary product: connected components of the internal
// structure, each carrying the full boundary. Sorted; empty for unit graphs.
std::vector<CanonicalGraph> PrimeFactorize(const CanonicalGraph& g);
bool IsPrime(const CanonicalGraph& g);

// Disjoint union over the shared boundary; nullopt on arity mismatch.
std::optional<CanonicalGraph> BoundaryProduct(const CanonicalGraph& a, const CanonicalGraph& b);

struct Heights {
  int left = 0;
  int right = 0;
  int height = 0;  // right - left
  friend bool operator==(const Heights&, const Heights&) = default;
};

// Boundary in-degrees of an m = 2 graph; throws ArityError otherwise.
Heights ComputeHeights(const CanonicalGraph& g);

enum class PadSide { kLeft, kRight };

// Embeds an m = 2 graph into m = 3: kRight uses points (1,2) leaving 3 bare,
// kLeft uses points (2,3) leaving 1 bare.
CanonicalGraph Pad(const CanonicalGraph& g, PadSide side);

std::string ToString(Target t);

}  // namespace graphstar

#endif  // GRAPHSTAR_GRAPH_HPP_
