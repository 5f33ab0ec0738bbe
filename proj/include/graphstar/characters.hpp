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

// Weight systems on m = 2 graphs, the order-by-order solve of W(D_b G) = 0,
// the Moyal and Hausdorff elements, and the antipode.

#ifndef GRAPHSTAR_CHARACTERS_HPP_
#define GRAPHSTAR_CHARACTERS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphstar/algebra.hpp"
#include "graphstar/enumerate.hpp"
#include "graphstar/graph.hpp"
#include "graphstar/rational.hpp"
#include "json.hpp"

namespace graphstar {

class WeightSystem {
 public:
  WeightSystem() = default;
  WeightSystem(Restriction restriction, bool multiplicative, bool symmetric)
      : restriction_(restriction), multiplicative_(multiplicative), symmetric_(symmetric) {}

  Restriction restriction() const { return restriction_; }
  bool multiplicative() const { return multiplicative_; }
  bool symmetric() const { return symmetric_; }
  int max_order() const { return max_order_; }
  void set_max_order(int n) { max_order_ = n; }
  const Rational& unit_weight() const { return unit_weight_; }
  void set_unit_weight(Rational w) { unit_weight_ = std::move(w); }

  // Stores W(g). With the multiplicative flag only prime graphs are stored.
  void Set(const CanonicalGraph& g, const Rational& w);
  // The stored value for g itself (or its transpose when symmetric).
  std::optional<Rational> Stored(const CanonicalGraph& g) const;
  const std::map<CanonicalGraph, Rational>& stored() const { return values_; }

  // W(g): 0 outside the restriction, the unit weight for n = 0, products
  // over prime factors when multiplicative. Throws std::out_of_range above
  // max_order or for a missing entry.
  Rational operator()(const CanonicalGraph& g) const;

 private:
  Restriction restriction_ = Restriction::kFull;
  bool multiplicative_ = true;
  bool symmetric_ = true;
  int max_order_ = 0;
  Rational unit_weight_ = 1;
  std::map<CanonicalGraph, Rational> values_;
};

Rational Evaluate(const WeightSystem& w, const GraphVector& v);
// Product of the factor weights, summed linearly.
Rational Evaluate(const WeightSystem& w, const TensorVector& tv);

// sum_j coeffs[j] x_j + constant
struct AffineForm {
  std::map<int, Rational> coeffs;
  Rational constant = 0;
};

struct Constraint {
  CanonicalGraph source;  // the m = 3 graph producing the equation
  AffineForm form;        // the equation reads form = 0
  bool redundant = false; // source is transpose-symmetric under the symmetric flag
};

struct ConstraintSystem {
  int order = 0;
  std::vector<CanonicalGraph> unknowns;  // one representative per variable
  std::vector<Constraint> equations;
};

// Prime weights fixed up front, keyed by graph. Default: W(b_0) = W(b_1) = 1.
using Normalization = std::map<CanonicalGraph, Rational>;
Normalization DefaultNormalization();

// Equations W(D_b G) = 0 for G in the order-n m = 3 class. `known` carries
// all lower orders; order-n prime weights not pinned by `pins` are unknowns.
ConstraintSystem AssembleConstraints(int order, const WeightSystem& known, const Normalization& pins,
                                     bool drop_redundant = false);
ConstraintSystem AssembleConstraintsSerial(int order, const WeightSystem& known, const Normalization& pins,
                                           bool drop_redundant = false);

enum class SolveStatus { kUnique, kAffine, kInfeasible };

struct OrderReport {
  int order = 0;
  SolveStatus status = SolveStatus::kUnique;
  int dimension = 0;  // free parameters when kAffine
  int equations = 0;
  int unknowns = 0;
  std::string StatusText() const;  // "unique", "dim=d" or "infeasible"
};

struct SolveResult {
  WeightSystem weights;
  std::vector<OrderReport> report;
  bool feasible() const;
};

// Solves orders 1..max_order in turn. Free parameters are set to 0. Stops at
// the first infeasible order; weights then cover the orders below it.
SolveResult SolveWeights(int max_order, Restriction restriction, const Normalization& pins = DefaultNormalization(),
                         bool drop_redundant = false);

// sum over the restricted m = 2 classes of (W(G)/|Aut G|) G, degrees 0..max_order.
GraphVector MoyalElement(const WeightSystem& w, int max_order);
GraphVector HausdorffElement(const GraphVector& z, int max_order);

// |Aut G| / n!
Rational SymmetryFactor(const CanonicalGraph& g);

struct AntipodeValue {
  GraphVector graph;
  TensorVector tensor;
  friend bool operator==(const AntipodeValue&, const AntipodeValue&) = default;
};

// S(G) = -G - sum sign S(G/g) (x) g over reduced-coproduct witnesses.
AntipodeValue Antipode(const CanonicalGraph& g);
// S = sum_k x^{*k} with x = (unit o counit) - id, via iterated coproducts.
AntipodeValue AntipodeGeometric(const CanonicalGraph& g);

struct UnitarityResult {
  bool ok = true;
  std::optional<CanonicalGraph> failure;
};
// W(S(G)) = -W(G) for every G in the m = 3 classes of degree 1..order under
// W's restriction: the graph part of S(G) is -G and W kills the tensor part.
UnitarityResult UnitarityCheck(const WeightSystem& w, int order);

struct BernoulliDeterminacy {
  bool determined = false;
  std::vector<CanonicalGraph> parameters;  // b_n^L, n >= 2
  // Each non-parameter prime unknown as an affine form in the parameters
  // (parameter j is column j of `parameters`).
  std::vector<std::pair<CanonicalGraph, AffineForm>> expressions;
  // Relations among the parameters themselves (each form = 0).
  std::vector<AffineForm> parameter_relations;
};
// Joint forest-class system over orders 2..max_order with W(b_0) = W(b_1) = 1
// and the Bernoulli weights b_n^L (n >= 2) left free: eliminates every other
// prime unknown and reports whether each is an affine function of them.
BernoulliDeterminacy BernoulliDeterminacyCheck(int max_order);

nlohmann::json WeightsToJson(const SolveResult& result);
// Loads a table written by WeightsToJson; the result is a plain lookup table.
WeightSystem WeightsFromJson(const nlohmann::json& j);

}  // namespace graphstar

#endif  // GRAPHSTAR_CHARACTERS_HPP_
