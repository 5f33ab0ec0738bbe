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

#include "graphstar/evaluator.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "graphstar/catalog.hpp"
#include "graphstar/parallel.hpp"

namespace graphstar {

// --- Bivector ---------------------------------------------------------------------

Polynomial Bivector::At(int i, int j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_) throw EvaluationError("bivector index out of range");
  if (i == j) return {};
  const bool flip = i > j;
  auto it = upper_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == upper_.end()) return {};
  return flip ? -it->second : it->second;
}

void Bivector::Set(int i, int j, const Polynomial& p) {
  if (i < 1 || j < 1 || i > dim_ || j > dim_) throw EvaluationError("bivector index out of range");
  if (i == j) {
    if (!p.IsZero()) throw EvaluationError("diagonal bivector entries must vanish");
    return;
  }
  if (p.MaxVariable() > dim_) throw EvaluationError("bivector entry uses a variable beyond the dimension");
  const auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
  const Polynomial value = i < j ? p : -p;
  if (value.IsZero()) {
    upper_.erase(key);
  } else {
    upper_[key] = value;
  }
}

bool Bivector::IsConstant() const {
  return std::all_of(upper_.begin(), upper_.end(), [](const auto& kv) { return kv.second.Degree() <= 0; });
}

bool Bivector::IsLinear() const {
  for (const auto& [key, p] : upper_) {
    for (const auto& [e, c] : p.terms()) {
      int deg = 0;
      for (int v : e) deg += v;
      if (deg != 1) return false;
    }
  }
  return true;
}

Bivector Bivector::So3() {
  Bivector a(3);
  a.Set(1, 2, Polynomial::Variable(3));
  a.Set(2, 3, Polynomial::Variable(1));
  a.Set(3, 1, Polynomial::Variable(2));
  return a;
}

Bivector Bivector::Affine2() {
  Bivector a(2);
  a.Set(1, 2, Polynomial::Variable(2));
  return a;
}

Bivector Bivector::Constant2() {
  Bivector a(2);
  a.Set(1, 2, Polynomial(Rational(1)));
  return a;
}

Bivector BivectorFromJson(const nlohmann::json& j) {
  Bivector a(j.at("dim").get<int>());
  for (const auto& [key, value] : j.at("entries").items()) {
    const size_t comma = key.find(',');
    if (comma == std::string::npos) throw EvaluationError("bivector key '" + key + "' must read \"i,j\"");
    int i = 0;
    int k = 0;
    try {
      i = std::stoi(key.substr(0, comma));
      k = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
      throw EvaluationError("bivector key '" + key + "' must read \"i,j\"");
    }
    if (i >= k) throw EvaluationError("bivector key '" + key + "' needs i < j");
    a.Set(i, k, ParsePolynomial(value.get<std::string>()));
  }
  return a;
}

nlohmann::json ToJson(const Bivector& alpha) {
  nlohmann::json entries = nlohmann::json::object();
  for (int i = 1; i <= alpha.dim(); ++i) {
    for (int j = i + 1; j <= alpha.dim(); ++j) {
      const Polynomial p = alpha.At(i, j);
      if (!p.IsZero()) entries[std::to_string(i) + "," + std::to_string(j)] = ToString(p);
    }
  }
  return {{"dim", alpha.dim()}, {"entries", entries}};
}

// --- state sum ----------------------------------------------------------------------

namespace {

// Edge e = 2(k-1) + s is slot s of internal vertex k.
struct EdgeLayout {
  int n = 0;
  int m = 0;
  std::vector<std::array<int, 2>> slot;             // edge ids per vertex
  std::vector<std::vector<int>> into_internal;      // per vertex
  std::vector<std::vector<int>> into_boundary;      // per boundary point
};

EdgeLayout Layout(const AdmissibleGraph& g) {
  EdgeLayout L;
  L.n = g.n();
  L.m = g.m();
  L.slot.resize(static_cast<size_t>(L.n));
  L.into_internal.resize(static_cast<size_t>(L.n));
  L.into_boundary.resize(static_cast<size_t>(L.m));
  for (int k = 0; k < L.n; ++k) {
    for (int s = 0; s < 2; ++s) {
      const int e = 2 * k + s;
      L.slot[static_cast<size_t>(k)][static_cast<size_t>(s)] = e;
      const Target& t = g.legs()[static_cast<size_t>(k)][static_cast<size_t>(s)];
      auto& bucket = t.is_internal() ? L.into_internal[static_cast<size_t>(t.index - 1)]
                                     : L.into_boundary[static_cast<size_t>(t.index - 1)];
      bucket.push_back(e);
    }
  }
  return L;
}

Polynomial Differentiate(Polynomial p, const std::vector<int>& edges, const std::vector<int>& index) {
  for (int e : edges) {
    if (p.IsZero()) break;
    p = p.Derivative(index[static_cast<size_t>(e)]);
  }
  return p;
}

// One summand of the state sum for a full index assignment.
Polynomial Summand(const EdgeLayout& L, const Bivector& alpha, const std::vector<Polynomial>& fs,
                   const std::vector<int>& index) {
  Polynomial term(Rational(1));
  for (int k = 0; k < L.n; ++k) {
    const auto& s = L.slot[static_cast<size_t>(k)];
    Polynomial a = alpha.At(index[static_cast<size_t>(s[0])], index[static_cast<size_t>(s[1])]);
    a = Differentiate(std::move(a), L.into_internal[static_cast<size_t>(k)], index);
    if (a.IsZero()) return {};
    term *= a;
  }
  for (int j = 0; j < L.m; ++j) {
    Polynomial f = Differentiate(fs[static_cast<size_t>(j)], L.into_boundary[static_cast<size_t>(j)], index);
    if (f.IsZero()) return {};
    term *= f;
  }
  return term;
}

void CheckArity(const AdmissibleGraph& g, const std::vector<Polynomial>& fs, const Bivector& alpha) {
  if (static_cast<int>(fs.size()) != g.m()) {
    throw ArityError("state sum needs " + std::to_string(g.m()) + " arguments, got " + std::to_string(fs.size()));
  }
  for (const Polynomial& f : fs) {
    if (f.MaxVariable() > alpha.dim()) throw EvaluationError("argument uses a variable beyond the bivector dimension");
  }
}

}  // namespace

Polynomial StateSum(const AdmissibleGraph& g, const Bivector& alpha, const std::vector<Polynomial>& fs) {
  CheckArity(g, fs, alpha);
  const EdgeLayout L = Layout(g);
  const int edges = 2 * L.n;
  const int d = alpha.dim();
  long long total = 1;
  for (int e = 0; e < edges; ++e) total *= d;
  Polynomial sum;
#pragma omp parallel num_threads(ThreadCount())
  {
    Polynomial local;
    std::vector<int> index(static_cast<size_t>(edges));
#pragma omp for schedule(static) nowait
    for (long long code = 0; code < total; ++code) {
      long long rest = code;
      for (int e = edges - 1; e >= 0; --e) {
        index[static_cast<size_t>(e)] = static_cast<int>(rest % d) + 1;
        rest /= d;
      }
      local += Summand(L, alpha, fs, index);
    }
#pragma omp critical(graphstar_state_sum_merge)
    sum += local;
  }
  return sum;
}

Polynomial StateSumSerial(const AdmissibleGraph& g, const Bivector& alpha, const std::vector<Polynomial>& fs) {
  CheckArity(g, fs, alpha);
  const EdgeLayout L = Layout(g);
  const int edges = 2 * L.n;
  std::vector<int> index(static_cast<size_t>(edges), 1);
  Polynomial sum;
  std::function<void(int)> assign = [&](int e) {
    if (e == edges) {
      sum += Summand(L, alpha, fs, index);
      return;
    }
    for (int i = 1; i <= alpha.dim(); ++i) {
      index[static_cast<size_t>(e)] = i;
      assign(e + 1);
    }
  };
  assign(0);
  return sum;
}

Polynomial GerstenhaberInsert(const AdmissibleGraph& g1, int i, const AdmissibleGraph& g2, const Bivector& alpha,
                              const std::vector<Polynomial>& fs) {
  const int m1 = g1.m();
  const int m2 = g2.m();
  if (static_cast<int>(fs.size()) != m1 + m2 - 1) throw ArityError("composition needs m + m' - 1 arguments");
  if (i < 1 || i > m1) throw std::out_of_range("insertion index out of range");
  const std::vector<Polynomial> inner(fs.begin() + (i - 1), fs.begin() + (i - 1 + m2));
  std::vector<Polynomial> outer(fs.begin(), fs.begin() + (i - 1));
  outer.push_back(StateSum(g2, alpha, inner));
  outer.insert(outer.end(), fs.begin() + (i - 1 + m2), fs.end());
  return StateSum(g1, alpha, outer);
}

// --- star products ------------------------------------------------------------------

PolySeries StarProduct(const Polynomial& f, const Polynomial& g, const Bivector& alpha, const WeightSystem& w,
                       int order) {
  if (w.max_order() < order) {
    throw std::out_of_range("weights solved to order " + std::to_string(w.max_order()) + ", star product needs " +
                            std::to_string(order));
  }
  PolySeries out(order);
  for (int k = 0; k <= order; ++k) {
    for (const CanonicalGraph& graph : EnumerateClass(k, 2, w.restriction())) {
      const Rational c = w(graph) / Rational(AutomorphismCount(graph));
      if (c == 0) continue;
      out[k] += c * StateSum(graph, alpha, {f, g});
    }
  }
  return out;
}

PolySeries StarProduct(const PolySeries& f, const PolySeries& g, const Bivector& alpha, const WeightSystem& w,
                       int order) {
  PolySeries out(order);
  for (int a = 0; a <= std::min(order, f.order()); ++a) {
    if (f[a].IsZero()) continue;
    for (int b = 0; a + b <= order && b <= g.order(); ++b) {
      if (g[b].IsZero()) continue;
      const PolySeries part = StarProduct(f[a], g[b], alpha, w, order - a - b);
      for (int k = 0; k <= part.order(); ++k) out[a + b + k] += part[k];
    }
  }
  return out;
}

PolySeries MoyalOracle(const Polynomial& f, const Polynomial& g, const Bivector& alpha, int order) {
  if (!alpha.IsConstant()) throw EvaluationError("Moyal oracle needs a constant bivector");
  const int d = alpha.dim();
  PolySeries out(order);
  Rational factorial = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) factorial *= k;
    std::vector<int> left(static_cast<size_t>(k));
    std::vector<int> right(static_cast<size_t>(k));
    Polynomial total;
    std::function<void(int, Polynomial, Polynomial, Rational)> rec = [&](int t, Polynomial df, Polynomial dg,
                                                                        Rational coeff) {
      if (coeff == 0 || df.IsZero() || dg.IsZero()) return;
      if (t == k) {
        total += coeff * (df * dg);
        return;
      }
      for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
          const Polynomial a = alpha.At(i, j);
          if (a.IsZero()) continue;
          rec(t + 1, df.Derivative(i), dg.Derivative(j), coeff * a.Coefficient({}));
        }
      }
    };
    rec(0, f, g, Rational(1));
    out[k] = Rational(1) / factorial * total;
  }
  return out;
}

PolySeries AssociativityDefect(const Polynomial& f, const Polynomial& g, const Polynomial& h, const Bivector& alpha,
                               const WeightSystem& w, int order) {
  const PolySeries fs(f, order);
  const PolySeries gs(g, order);
  const PolySeries hs(h, order);
  const PolySeries left = StarProduct(StarProduct(fs, gs, alpha, w, order), hs, alpha, w, order);
  const PolySeries right = StarProduct(fs, StarProduct(gs, hs, alpha, w, order), alpha, w, order);
  return left - right;
}

// --- Jacobi -----------------------------------------------------------------------------

AdmissibleGraph OrientedT2L() {
  return AdmissibleGraph(3, {{Target::B(1), Target::V(2)}, {Target::B(2), Target::B(3)}});
}

AdmissibleGraph OrientedT2R() {
  return AdmissibleGraph(3, {{Target::V(2), Target::B(3)}, {Target::B(1), Target::B(2)}});
}

Polynomial JacobiDefect(const Bivector& alpha, const Polynomial& f, const Polynomial& g, const Polynomial& h,
                        JacobiMode mode, int sigma) {
  const CanonicalGraph c2 = catalog::C2();
  if (mode == JacobiMode::kAlternation) {
    std::array<int, 3> perm{0, 1, 2};
    const std::array<Polynomial, 3> args{f, g, h};
    Polynomial total;
    do {
      int inversions = 0;
      for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) inversions += perm[static_cast<size_t>(a)] > perm[static_cast<size_t>(b)];
      }
      const Polynomial u = StateSum(c2, alpha, {args[static_cast<size_t>(perm[0])], args[static_cast<size_t>(perm[1])],
                                                args[static_cast<size_t>(perm[2])]});
      total += Rational(inversions % 2 == 0 ? 1 : -1) * u;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
  }
  return StateSum(OrientedT2R(), alpha, {f, g, h}) - StateSum(OrientedT2L(), alpha, {f, g, h}) -
         Rational(sigma) * StateSum(c2, alpha, {f, g, h});
}

}  // namespace graphstar
