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

// Sparse multivariate polynomials over the rationals in x1, x2, ... and
// truncated power series in eps with polynomial coefficients.
//
// Text form: terms joined by + or -, each a product of factors separated
// by '*', a factor being an integer, a fraction p/q, or x<i>[^k]:
//   "x1^2*x2 - 3/2*x1 + 4"

#ifndef GRAPHSTAR_POLYNOMIAL_HPP_
#define GRAPHSTAR_POLYNOMIAL_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "graphstar/rational.hpp"

namespace graphstar {

// Exponent vector; index 0 is x1. Trailing zeros are trimmed.
using Monomial = std::vector<int>;

class Polynomial {
 public:
  using Map = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants embed implicitly
  static Polynomial Variable(int i);  // x_i, 1-based
  static Polynomial Term(Monomial exponents, const Rational& c);

  bool IsZero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int Degree() const;
  // Highest variable index that occurs (0 for constants).
  int MaxVariable() const;
  const Map& terms() const { return terms_; }
  Rational Coefficient(const Monomial& exponents) const;

  // d/dx_i, 1-based.
  Polynomial Derivative(int i) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void AddTerm(Monomial exponents, const Rational& c);
  Map terms_;
};

// Throws std::invalid_argument with the offending position.
Polynomial ParsePolynomial(std::string_view text);
// Graded order, highest degree first; "0" for zero.
std::string ToString(const Polynomial& p);

// All monomials in x1..x_dim of total degree between lo and hi.
std::vector<Polynomial> Monomials(int dim, int lo, int hi);

// sum_{k <= order} eps^k c_k, truncated at `order`.
class PolySeries {
 public:
  explicit PolySeries(int order = 0) : coeffs_(static_cast<size_t>(order) + 1) {}
  PolySeries(const Polynomial& p, int order) : PolySeries(order) { coeffs_[0] = p; }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Polynomial& operator[](int k) const { return coeffs_.at(static_cast<size_t>(k)); }
  Polynomial& operator[](int k) { return coeffs_.at(static_cast<size_t>(k)); }
  bool IsZero() const;

  PolySeries& operator+=(const PolySeries& o);
  PolySeries& operator-=(const PolySeries& o);
  friend PolySeries operator-(PolySeries a, const PolySeries& b) { return a -= b; }
  friend bool operator==(const PolySeries&, const PolySeries&) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

// "x1^2*x2^2 + eps*(4*x1*x2) + eps^2*(2)"
std::string ToString(const PolySeries& s);

}  // namespace graphstar

#endif  // GRAPHSTAR_POLYNOMIAL_HPP_
