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

// The Hausdorff series log(exp x exp y) in the truncated free associative
// algebra on x < y, rewritten in the Lyndon bracket basis.

#ifndef GRAPHSTAR_BCH_HPP_
#define GRAPHSTAR_BCH_HPP_

#include <map>
#include <string>
#include <vector>

#include "graphstar/characters.hpp"
#include "graphstar/evaluator.hpp"
#include "graphstar/rational.hpp"

namespace graphstar {

// Words over {'x','y'}; the empty word is the unit. Products drop words
// longer than the truncation degree.
class FreeElement {
 public:
  explicit FreeElement(int degree) : degree_(degree) {}
  static FreeElement Letter(char c, int degree);
  static FreeElement Unit(int degree);

  int degree() const { return degree_; }
  const std::map<std::string, Rational>& terms() const { return terms_; }
  void Add(const std::string& word, const Rational& c);
  Rational Coefficient(const std::string& word) const;
  // Homogeneous part of the given word length.
  FreeElement Component(int length) const;

  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator*=(const Rational& c);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, FreeElement b) { return a += b *= Rational(-1); }
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend bool operator==(const FreeElement&, const FreeElement&) = default;

 private:
  int degree_;
  std::map<std::string, Rational> terms_;
};

// [a, b] = ab - ba
FreeElement Commutator(const FreeElement& a, const FreeElement& b);
// exp needs no constant term; log needs constant term 1.
FreeElement Exp(const FreeElement& a);
FreeElement Log(const FreeElement& a);

// Lyndon words of the given length over x < y, ascending.
std::vector<std::string> LyndonWords(int length);
// Standard bracketing, e.g. "xxy" -> "[x,[x,y]]", "xyy" -> "[[x,y],y]".
std::string StandardBracketing(const std::string& lyndon);
FreeElement ExpandBracketing(const std::string& lyndon, int degree);

struct LieTerm {
  std::string bracket;
  Rational coeff;
  friend bool operator==(const LieTerm&, const LieTerm&) = default;
};

// Degree-`length` component of log(e^x e^y) in the Lyndon basis (nonzero
// coefficients only). Requires length <= 5.
std::vector<LieTerm> BchComponent(int length);

// Informational: x1^n * x2 under the given star product next to the oracle's
// Lyndon coefficients, degree by degree.
std::string BchReport(const WeightSystem& w, const Bivector& alpha, int order);

}  // namespace graphstar

#endif  // GRAPHSTAR_BCH_HPP_
