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

#include "graphstar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace graphstar {
namespace {

void Trim(Monomial& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

int TotalDegree(const Monomial& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

Monomial MultiplyMonomials(const Monomial& a, const Monomial& b) {
  Monomial out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

std::string MonomialText(const Monomial& e) {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

class PolyScanner {
 public:
  explicit PolyScanner(std::string_view text) : text_(text) {}

  Polynomial Parse() {
    Polynomial result;
    SkipSpace();
    if (AtEnd()) Fail("empty polynomial");
    bool first = true;
    while (!AtEnd()) {
      Rational sign = 1;
      if (Peek() == '+' || Peek() == '-') {
        if (Peek() == '-') sign = -1;
        ++pos_;
        SkipSpace();
      } else if (!first) {
        Fail("expected '+' or '-'");
      }
      result += sign * Term();
      first = false;
      SkipSpace();
    }
    return result;
  }

 private:
  Polynomial Term() {
    Polynomial term(Rational(1));
    while (true) {
      SkipSpace();
      term *= Factor();
      SkipSpace();
      if (AtEnd() || Peek() != '*') break;
      ++pos_;
    }
    return term;
  }

  Polynomial Factor() {
    if (AtEnd()) Fail("expected a factor");
    if (Peek() == 'x') {
      ++pos_;
      const int index = Integer();
      if (index < 1) Fail("variable index must be at least 1");
      int power = 1;
      SkipSpace();
      if (!AtEnd() && Peek() == '^') {
        ++pos_;
        SkipSpace();
        power = Integer();
      }
      Monomial e(static_cast<size_t>(index), 0);
      e.back() = power;
      return Polynomial::Term(e, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(Peek()))) {
      const size_t start = pos_;
      while (!AtEnd() && (std::isdigit(static_cast<unsigned char>(Peek())) || Peek() == '/')) ++pos_;
      try {
        return Polynomial(ParseRational(text_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument&) {
        pos_ = start;
        Fail("malformed number");
      }
    }
    Fail(std::string("unexpected character '") + Peek() + "'");
    return {};
  }

  int Integer() {
    const size_t start = pos_;
    while (!AtEnd() && std::isdigit(static_cast<unsigned char>(Peek()))) ++pos_;
    if (start == pos_ || pos_ - start > 6) {
      pos_ = start;
      Fail("expected a small integer");
    }
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(Peek()))) ++pos_;
  }
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }
  [[noreturn]] void Fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error: " + what + " at position " + std::to_string(pos_));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::Variable(int i) {
  if (i < 1) throw std::invalid_argument("variable index must be at least 1");
  Monomial e(static_cast<size_t>(i), 0);
  e.back() = 1;
  return Term(e, 1);
}

Polynomial Polynomial::Term(Monomial exponents, const Rational& c) {
  Polynomial p;
  p.AddTerm(std::move(exponents), c);
  return p;
}

void Polynomial::AddTerm(Monomial exponents, const Rational& c) {
  if (c == 0) return;
  Trim(exponents);
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::Degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, TotalDegree(e));
  return d;
}

int Polynomial::MaxVariable() const {
  size_t v = 0;
  for (const auto& [e, c] : terms_) v = std::max(v, e.size());
  return static_cast<int>(v);
}

Rational Polynomial::Coefficient(const Monomial& exponents) const {
  Monomial e = exponents;
  Trim(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::Derivative(int i) const {
  Polynomial out;
  const size_t k = static_cast<size_t>(i - 1);
  for (const auto& [e, c] : terms_) {
    if (k >= e.size() || e[k] == 0) continue;
    Monomial d = e;
    const int power = d[k]--;
    out.AddTerm(std::move(d), c * power);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) AddTerm(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) AddTerm(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  Polynomial out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) out.AddTerm(MultiplyMonomials(ea, eb), ca * cb);
  }
  *this = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, coeff] : terms_) coeff *= c;
  }
  return *this;
}

Polynomial ParsePolynomial(std::string_view text) { return PolyScanner(text).Parse(); }

std::string ToString(const Polynomial& p) {
  if (p.IsZero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  // Pad for a uniform comparison, highest total degree first, then the
  // exponent vectors in descending lexicographic order.
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = TotalDegree(a.first);
    const int db = TotalDegree(b.first);
    if (da != db) return da > db;
    Monomial ea = a.first;
    Monomial eb = b.first;
    ea.resize(std::max(ea.size(), eb.size()), 0);
    eb.resize(ea.size(), 0);
    return ea > eb;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    const std::string mono = MonomialText(e);
    const Rational mag = abs(c);
    std::string body;
    if (mono.empty()) {
      body = FormatRational(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = FormatRational(mag) + "*" + mono;
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + body;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

std::vector<Polynomial> Monomials(int dim, int lo, int hi) {
  std::vector<Polynomial> out;
  Monomial e(static_cast<size_t>(dim), 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == dim) {
      const int deg = TotalDegree(e);
      if (deg >= lo && deg <= hi) out.push_back(Polynomial::Term(e, 1));
      return;
    }
    for (int p = 0; p <= remaining; ++p) {
      e[static_cast<size_t>(var)] = p;
      rec(var + 1, remaining - p);
    }
    e[static_cast<size_t>(var)] = 0;
  };
  rec(0, hi);
  return out;
}

bool PolySeries::IsZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& p) { return p.IsZero(); });
}

PolySeries& PolySeries::operator+=(const PolySeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series truncation orders differ");
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

PolySeries& PolySeries::operator-=(const PolySeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series truncation orders differ");
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

std::string ToString(const PolySeries& s) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k) {
    if (s[k].IsZero()) continue;
    std::string term;
    if (k == 0) {
      term = ToString(s[k]);
    } else {
      term = (k == 1 ? std::string("eps") : "eps^" + std::to_string(k)) + "*(" + ToString(s[k]) + ")";
    }
    out += out.empty() ? term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace graphstar
