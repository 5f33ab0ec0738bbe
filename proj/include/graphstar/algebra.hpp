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

// Linear combinations of graphs and the operations between them: boundary
// product, insertion and the pre-Lie composition, bracket, the reduced
// coproduct over normal subgraphs, merger, the global symmetry T and the
// exp/log series under the boundary product.

#ifndef GRAPHSTAR_ALGEBRA_HPP_
#define GRAPHSTAR_ALGEBRA_HPP_

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "graphstar/graph.hpp"
#include "graphstar/rational.hpp"
#include "json.hpp"

namespace graphstar {

// Finite rational combination of canonical graphs of one boundary arity.
class GraphVector {
 public:
  using Map = std::map<CanonicalGraph, Rational>;

  GraphVector() = default;
  GraphVector(const CanonicalGraph& g) { Add(g, 1); }  // NOLINT: basis embedding

  // Throws ArityError when g's arity differs from the stored graphs.
  void Add(const CanonicalGraph& g, const Rational& c);
  Rational Coefficient(const CanonicalGraph& g) const;

  bool IsZero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  std::optional<int> arity() const;
  const Map& terms() const { return terms_; }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  // Component of internal degree exactly n.
  GraphVector Degree(int n) const;
  // Components of internal degree at most n.
  GraphVector Truncate(int n) const;

  GraphVector& operator+=(const GraphVector& other);
  GraphVector& operator-=(const GraphVector& other);
  GraphVector& operator*=(const Rational& c);
  friend GraphVector operator+(GraphVector a, const GraphVector& b) { return a += b; }
  friend GraphVector operator-(GraphVector a, const GraphVector& b) { return a -= b; }
  friend GraphVector operator-(GraphVector a) { return a *= -1; }
  friend GraphVector operator*(const Rational& c, GraphVector a) { return a *= c; }
  friend bool operator==(const GraphVector&, const GraphVector&) = default;

 private:
  Map terms_;
};

// Combination of ordered pairs (left = quotient, right = subgraph).
class TensorVector {
 public:
  using Key = std::pair<CanonicalGraph, CanonicalGraph>;
  using Map = std::map<Key, Rational>;

  void Add(const CanonicalGraph& left, const CanonicalGraph& right, const Rational& c);
  Rational Coefficient(const CanonicalGraph& left, const CanonicalGraph& right) const;

  bool IsZero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  TensorVector& operator+=(const TensorVector& other);
  TensorVector& operator*=(const Rational& c);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a) { return a *= -1; }
  friend bool operator==(const TensorVector&, const TensorVector&) = default;

 private:
  Map terms_;
};

// Convenience builders for tests and the CLI.
GraphVector Vec(std::initializer_list<std::pair<CanonicalGraph, Rational>> terms);
TensorVector Tensor(std::initializer_list<std::tuple<CanonicalGraph, CanonicalGraph, Rational>> terms);

// --- products ---------------------------------------------------------------

// Bilinear; basis graphs of different arity multiply to zero.
GraphVector BoundaryProduct(const GraphVector& a, const GraphVector& b);

// A graph with stored leg order plus a coefficient; the unit of oriented
// (leg-order preserving) insertion.
struct OrientedTerm {
  AdmissibleGraph graph;
  Rational coeff;
};

// Summands of g1 o_i g2, one per landing function of the edges entering
// boundary point i, with each leg kept in its stored slot. Unsigned.
std::vector<OrientedTerm> InsertOriented(const AdmissibleGraph& g1, int i, const AdmissibleGraph& g2);

// Labeled insertion: every landing function counts once.
GraphVector InsertAtLabeled(const CanonicalGraph& g1, int i, const CanonicalGraph& g2);
// Unlabeled insertion: a summand G counts (#landings onto G)|Aut G|/(|Aut g1||Aut g2|).
GraphVector InsertAt(const CanonicalGraph& g1, int i, const CanonicalGraph& g2);

// Pre-Lie composition: sum over i of (-1)^{(i-1)(m'-1)} g1 o_i g2.
GraphVector Compose(const GraphVector& v1, const GraphVector& v2);
GraphVector ComposeLabeled(const GraphVector& v1, const GraphVector& v2);

// v1 o v2 - (-1)^{(m-1)(m'-1)} v2 o v1. Each argument must have one arity.
GraphVector Bracket(const GraphVector& v1, const GraphVector& v2);

// (g1 o g2) o g3 - g1 o (g2 o g3).
GraphVector Associator(const GraphVector& g1, const GraphVector& g2, const GraphVector& g3);

// d = [b_0, .]
GraphVector Delta(const GraphVector& v);

// --- normal subgraphs and coproducts -----------------------------------------

struct NormalSubgraphWitness {
  int run_start = 1;  // first boundary point of the run (1-based)
  int run_length = 1;
  std::vector<int> internal;  // 1-based internal vertices of the subgraph
  CanonicalGraph subgraph;
  CanonicalGraph quotient;
  int sign = 1;  // (-1)^{run_start - 1}
};

// All non-trivial witnesses with the given run length, in a fixed order
// (run start, then subset bitmask).
std::vector<NormalSubgraphWitness> NormalSubgraphs(const CanonicalGraph& g, int run_length);

// Collapses boundary points [start, start+length) together with the given
// internal vertices; nullopt when a parallel edge would appear.
std::optional<CanonicalGraph> Quotient(const CanonicalGraph& g, int start, int length,
                                       const std::vector<int>& internal);

// Reduced coproduct of an m = 3 graph (ArityError otherwise).
TensorVector CoproductReduced(const CanonicalGraph& g);
TensorVector CoproductReduced(const GraphVector& v);
// Reduced coproduct of any arity m >= 2: witnesses with run length m - 1.
// Agrees with CoproductReduced on m = 3 and vanishes identically on m = 2.
TensorVector CoproductGeneric(const CanonicalGraph& g);
// Restriction to witnesses whose subgraph is prime or a unit graph. Requires
// a prime m = 3 input.
TensorVector CoproductPrime(const CanonicalGraph& g);

Rational Pairing(const TensorVector& tv, const CanonicalGraph& g1, const CanonicalGraph& g2);
bool DualityCheck(const CanonicalGraph& g1, const CanonicalGraph& g2, const CanonicalGraph& big);

// g/b_0^L - g/b_0^R for m = 3; inadmissible quotients drop out.
GraphVector Merger(const CanonicalGraph& g);
// side 1 collapses (1,2), side 2 collapses (2,3); result (g/b_0^side) (x) b_0.
TensorVector BoundaryReduce(const CanonicalGraph& g, int side);

// T(g) = -g^t, linearly; on tensors factor-wise.
GraphVector ApplyT(const GraphVector& v);
TensorVector ApplyTTensor(const TensorVector& tv);

// Power series under the boundary product, truncated at internal degree
// max_order. exp needs no degree-0 part; log needs coefficient 1 on the unit.
GraphVector ExpProduct(const GraphVector& v, int max_order);
GraphVector LogProduct(const GraphVector& v, int max_order);

// JSON helpers: [{"graph":...,"coeff":"p/q"}] and [{"left","right","coeff"}].
nlohmann::json ToJson(const GraphVector& v);
nlohmann::json ToJson(const TensorVector& tv);
GraphVector GraphVectorFromJson(const nlohmann::json& j);

// Human-readable: "+1 [m=2;n=1;v1:B1,B2]" lines.
std::string ToText(const GraphVector& v);
std::string ToText(const TensorVector& tv);

}  // namespace graphstar

#endif  // GRAPHSTAR_ALGEBRA_HPP_
