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

// The state sum turning a graph and an antisymmetric 2-tensor into a
// multidifferential operator, and the star product built from it.
//
// Conventions: vertex k contributes alpha^{I(e1) I(e2)} where (e1, e2) are
// its legs in stored order (canonical graphs store boundary targets first).
// The bracket is {f,g} = sum_{i,j} alpha^{ij} d_i f d_j g over all ordered
// pairs, so b_1 evaluates to exactly that.

#ifndef GRAPHSTAR_EVALUATOR_HPP_
#define GRAPHSTAR_EVALUATOR_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graphstar/characters.hpp"
#include "graphstar/graph.hpp"
#include "graphstar/polynomial.hpp"
#include "json.hpp"

namespace graphstar {

class EvaluationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Bivector {
 public:
  explicit Bivector(int dim) : dim_(dim) {
    if (dim < 1) throw EvaluationError("bivector dimension must be positive");
  }

  int dim() const { return dim_; }
  // alpha^{ij}, 1-based; antisymmetric by construction.
  Polynomial At(int i, int j) const;
  void Set(int i, int j, const Polynomial& p);

  bool IsConstant() const;
  // Every entry homogeneous of degree 1 (or zero).
  bool IsLinear() const;

  // Linear Poisson structure of a Lie algebra: alpha^{ij} = sum_k c_{ij}^k x_k.
  static Bivector So3();
  // [e1, e2] = e2, i.e. alpha^{12} = x2.
  static Bivector Affine2();
  // d = 2, alpha^{12} = 1.
  static Bivector Constant2();

 private:
  int dim_;
  std::map<std::pair<int, int>, Polynomial> upper_;  // i < j
};

// {"dim":d,"entries":{"i,j":"<polynomial>"}} with i < j.
Bivector BivectorFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const Bivector& alpha);

// U_G(alpha^n)(f_1..f_m). Parallel over index maps; the serial variant walks
// the same sum recursively on one thread.
Polynomial StateSum(const AdmissibleGraph& g, const Bivector& alpha, const std::vector<Polynomial>& fs);
Polynomial StateSumSerial(const AdmissibleGraph& g, const Bivector& alpha, const std::vector<Polynomial>& fs);
inline Polynomial StateSum(const CanonicalGraph& g, const Bivector& alpha, const std::vector<Polynomial>& fs) {
  return StateSum(g.graph(), alpha, fs);
}

// U_{g1}(f_1, .., U_{g2}(f_i, .., f_{i+m'-1}), ..): operator composition.
Polynomial GerstenhaberInsert(const AdmissibleGraph& g1, int i, const AdmissibleGraph& g2, const Bivector& alpha,
                              const std::vector<Polynomial>& fs);

// sum_{k <= order} eps^k sum_{|G| = k} (W(G)/|Aut G|) U_G(f, g) over W's class.
PolySeries StarProduct(const Polynomial& f, const Polynomial& g, const Bivector& alpha, const WeightSystem& w,
                       int order);
// Bilinear extension to series, truncated at `order`.
PolySeries StarProduct(const PolySeries& f, const PolySeries& g, const Bivector& alpha, const WeightSystem& w,
                       int order);

// exp(eps alpha)(f (x) g) for constant alpha, computed directly.
PolySeries MoyalOracle(const Polynomial& f, const Polynomial& g, const Bivector& alpha, int order);

// (f * g) * h - f * (g * h)
PolySeries AssociativityDefect(const Polynomial& f, const Polynomial& g, const Polynomial& h, const Bivector& alpha,
                               const WeightSystem& w, int order);

enum class JacobiMode { kAlternation, kSpan };

// The sign in U(t_2^R) - U(t_2^L) - sigma U(c_2) = 0 with t_2^{L/R} taken in
// the leg order they inherit from b_1 o_i b_1. Fixed by direct computation.
inline constexpr int kJacobiSpanSign = -1;

// t_2^{L/R} with the leg order produced by inserting b_1 into b_1.
AdmissibleGraph OrientedT2L();
AdmissibleGraph OrientedT2R();

// kAlternation: sum over permutations of sign * U_{c_2}(permuted f, g, h).
// kSpan: U(t_2^R) - U(t_2^L) - sigma U(c_2) with the given sigma.
Polynomial JacobiDefect(const Bivector& alpha, const Polynomial& f, const Polynomial& g, const Polynomial& h,
                        JacobiMode mode, int sigma = kJacobiSpanSign);

}  // namespace graphstar

#endif  // GRAPHSTAR_EVALUATOR_HPP_
