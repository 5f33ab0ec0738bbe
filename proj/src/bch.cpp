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

#include "graphstar/bch.hpp"

#include <sstream>
#include <stdexcept>

#include "graphstar/linsolve.hpp"

namespace graphstar {

FreeElement FreeElement::Letter(char c, int degree) {
  FreeElement e(degree);
  e.Add(std::string(1, c), 1);
  return e;
}

FreeElement FreeElement::Unit(int degree) {
  FreeElement e(degree);
  e.Add("", 1);
  return e;
}

void FreeElement::Add(const std::string& word, const Rational& c) {
  if (c == 0 || static_cast<int>(word.size()) > degree_) return;
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational FreeElement::Coefficient(const std::string& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Rational(0) : it->second;
}

FreeElement FreeElement::Component(int length) const {
  FreeElement out(degree_);
  for (const auto& [w, c] : terms_) {
    if (static_cast<int>(w.size()) == length) out.Add(w, c);
  }
  return out;
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) Add(w, c);
  return *this;
}

FreeElement& FreeElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [w, coeff] : terms_) coeff *= c;
  }
  return *this;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement out(std::min(a.degree_, b.degree_));
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.Add(wa + wb, ca * cb);
  }
  return out;
}

FreeElement Commutator(const FreeElement& a, const FreeElement& b) { return a * b - b * a; }

FreeElement Exp(const FreeElement& a) {
  if (a.Coefficient("") != 0) throw std::invalid_argument("exp needs an element without constant term");
  FreeElement result = FreeElement::Unit(a.degree());
  FreeElement power = FreeElement::Unit(a.degree());
  for (int k = 1; k <= a.degree(); ++k) {
    power = power * a;
    power *= Rational(1, k);
    result += power;
  }
  return result;
}

FreeElement Log(const FreeElement& a) {
  if (a.Coefficient("") != 1) throw std::invalid_argument("log needs constant term 1");
  const FreeElement u = a - FreeElement::Unit(a.degree());
  FreeElement result(a.degree());
  FreeElement power = FreeElement::Unit(a.degree());
  for (int k = 1; k <= a.degree(); ++k) {
    power = power * u;
    FreeElement term = power;
    term *= Rational(k % 2 == 1 ? 1 : -1, k);
    result += term;
  }
  return result;
}

namespace {

bool IsLyndon(const std::string& w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i) {
    if (!(w < w.substr(i))) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> LyndonWords(int length) {
  std::vector<std::string> out;
  for (unsigned bits = 0; bits < (1u << length); ++bits) {
    std::string w;
    for (int i = length - 1; i >= 0; --i) w += (bits >> i & 1u) ? 'y' : 'x';
    if (IsLyndon(w)) out.push_back(w);
  }
  return out;
}

namespace {

// Split w = uv with v the longest proper Lyndon suffix.
std::pair<std::string, std::string> StandardFactorization(const std::string& w) {
  for (size_t i = 1; i < w.size(); ++i) {
    if (IsLyndon(w.substr(i))) return {w.substr(0, i), w.substr(i)};
  }
  throw std::logic_error("word of length 1 has no standard factorization");
}

}  // namespace

std::string StandardBracketing(const std::string& lyndon) {
  if (lyndon.size() == 1) return lyndon;
  const auto [u, v] = StandardFactorization(lyndon);
  return "[" + StandardBracketing(u) + "," + StandardBracketing(v) + "]";
}

FreeElement ExpandBracketing(const std::string& lyndon, int degree) {
  if (lyndon.size() == 1) return FreeElement::Letter(lyndon[0], degree);
  const auto [u, v] = StandardFactorization(lyndon);
  return Commutator(ExpandBracketing(u, degree), ExpandBracketing(v, degree));
}

std::vector<LieTerm> BchComponent(int length) {
  if (length < 1 || length > 5) throw std::invalid_argument("BCH component supported for degrees 1..5");
  const FreeElement h =
      Log(Exp(FreeElement::Letter('x', length)) * Exp(FreeElement::Letter('y', length))).Component(length);
  const std::vector<std::string> basis = LyndonWords(length);
  // Columns: Lyndon basis; rows: all words of this length.
  std::vector<FreeElement> expanded;
  for (const std::string& w : basis) expanded.push_back(ExpandBracketing(w, length));
  LinearSystem sys;
  sys.cols = static_cast<int>(basis.size());
  for (unsigned bits = 0; bits < (1u << length); ++bits) {
    std::string word;
    for (int i = length - 1; i >= 0; --i) word += (bits >> i & 1u) ? 'y' : 'x';
    std::vector<Rational> row;
    for (const FreeElement& e : expanded) row.push_back(e.Coefficient(word));
    sys.AddRow(std::move(row), h.Coefficient(word));
  }
  const LinearSolution sol = SolveExact(sys);
  if (!sol.feasible || sol.nullity != 0) throw std::logic_error("Hausdorff component is not a Lie element");
  std::vector<LieTerm> out;
  for (size_t j = 0; j < basis.size(); ++j) {
    if (sol.x[j] != 0) out.push_back({StandardBracketing(basis[j]), sol.x[j]});
  }
  return out;
}

std::string BchReport(const WeightSystem& w, const Bivector& alpha, int order) {
  std::ostringstream out;
  out << "Hausdorff series (Lyndon basis) against x1^n * x2\n";
  for (int k = 1; k <= order; ++k) {
    out << "degree " << k << ":";
    for (const LieTerm& t : BchComponent(k)) out << " " << FormatRational(t.coeff) << "*" << t.bracket;
    out << "\n";
  }
  const Polynomial x1 = Polynomial::Variable(1);
  const Polynomial x2 = Polynomial::Variable(2);
  Polynomial power(Rational(1));
  for (int n = 1; n <= order; ++n) {
    power *= x1;
    out << "x1^" << n << " * x2 = " << ToString(StarProduct(power, x2, alpha, w, order)) << "\n";
  }
  return out.str();
}

}  // namespace graphstar
