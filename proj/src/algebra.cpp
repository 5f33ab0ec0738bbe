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

#include "graphstar/algebra.hpp"

#include <stdexcept>

#include "graphstar/graph_io.hpp"

namespace graphstar {
namespace {

int ArityOf(const GraphVector& v, const char* what) {
  const auto m = v.arity();
  if (!m) throw ArityError(std::string(what) + ": zero vector has no arity");
  return *m;
}

Rational SignPower(long exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

// --- GraphVector --------------------------------------------------------------

void GraphVector::Add(const CanonicalGraph& g, const Rational& c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.begin()->first.m() != g.m()) {
    throw ArityError("graph vector mixes arities " + std::to_string(terms_.begin()->first.m()) + " and " +
                     std::to_string(g.m()));
  }
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational GraphVector::Coefficient(const CanonicalGraph& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GraphVector::arity() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.m();
}

GraphVector GraphVector::Degree(int n) const {
  GraphVector out;
  for (const auto& [g, c] : terms_) {
    if (g.n() == n) out.Add(g, c);
  }
  return out;
}

GraphVector GraphVector::Truncate(int n) const {
  GraphVector out;
  for (const auto& [g, c] : terms_) {
    if (g.n() <= n) out.Add(g, c);
  }
  return out;
}

GraphVector& GraphVector::operator+=(const GraphVector& other) {
  for (const auto& [g, c] : other.terms_) Add(g, c);
  return *this;
}

GraphVector& GraphVector::operator-=(const GraphVector& other) {
  for (const auto& [g, c] : other.terms_) Add(g, -c);
  return *this;
}

GraphVector& GraphVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, coeff] : terms_) coeff *= c;
  return *this;
}

// --- TensorVector -------------------------------------------------------------

void TensorVector::Add(const CanonicalGraph& left, const CanonicalGraph& right, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TensorVector::Coefficient(const CanonicalGraph& left, const CanonicalGraph& right) const {
  auto it = terms_.find(Key{left, right});
  return it == terms_.end() ? Rational(0) : it->second;
}

TensorVector& TensorVector::operator+=(const TensorVector& other) {
  for (const auto& [key, c] : other.terms_) Add(key.first, key.second, c);
  return *this;
}

TensorVector& TensorVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= c;
  return *this;
}

GraphVector Vec(std::initializer_list<std::pair<CanonicalGraph, Rational>> terms) {
  GraphVector v;
  for (const auto& [g, c] : terms) v.Add(g, c);
  return v;
}

TensorVector Tensor(std::initializer_list<std::tuple<CanonicalGraph, CanonicalGraph, Rational>> terms) {
  TensorVector tv;
  for (const auto& [a, b, c] : terms) tv.Add(a, b, c);
  return tv;
}

// --- products -----------------------------------------------------------------

GraphVector BoundaryProduct(const GraphVector& a, const GraphVector& b) {
  GraphVector out;
  for (const auto& [ga, ca] : a) {
    for (const auto& [gb, cb] : b) {
      if (auto prod = graphstar::BoundaryProduct(ga, gb)) out.Add(*prod, ca * cb);
    }
  }
  return out;
}

std::vector<OrientedTerm> InsertOriented(const AdmissibleGraph& g1, int i, const AdmissibleGraph& g2) {
  const int m1 = g1.m();
  const int m2 = g2.m();
  const int n1 = g1.n();
  const int n2 = g2.n();
  if (i < 1 || i > m1) {
    throw std::out_of_range("insertion index " + std::to_string(i) + " outside 1.." + std::to_string(m1));
  }
  std::vector<Leg> base;
  std::vector<std::pair<int, int>> incoming;  // (vertex, slot) of edges into B(i)
  for (int k = 0; k < n1; ++k) {
    Leg leg = g1.legs()[static_cast<size_t>(k)];
    for (int s = 0; s < 2; ++s) {
      Target& t = leg[static_cast<size_t>(s)];
      if (!t.is_boundary()) continue;
      if (t.index == i) {
        incoming.emplace_back(k, s);
      } else if (t.index > i) {
        t.index += m2 - 1;
      }
    }
    base.push_back(leg);
  }
  for (Leg leg : g2.legs()) {
    for (Target& t : leg) t = t.is_boundary() ? Target::B(t.index + i - 1) : Target::V(t.index + n1);
    base.push_back(leg);
  }
  std::vector<Target> landings;
  for (int k = 1; k <= n2; ++k) landings.push_back(Target::V(n1 + k));
  for (int k = 1; k <= m2; ++k) landings.push_back(Target::B(i + k - 1));

  std::vector<OrientedTerm> out;
  const size_t e = incoming.size();
  std::vector<size_t> choice(e, 0);
  if (landings.empty() && e > 0) return out;
  while (true) {
    std::vector<Leg> legs = base;
    for (size_t q = 0; q < e; ++q) {
      legs[static_cast<size_t>(incoming[q].first)][static_cast<size_t>(incoming[q].second)] = landings[choice[q]];
    }
    out.push_back({AdmissibleGraph(m1 + m2 - 1, std::move(legs)), Rational(1)});
    size_t q = 0;
    while (q < e && ++choice[q] == landings.size()) choice[q++] = 0;
    if (q == e) break;
  }
  return out;
}

GraphVector InsertAtLabeled(const CanonicalGraph& g1, int i, const CanonicalGraph& g2) {
  GraphVector out;
  for (const OrientedTerm& term : InsertOriented(g1.graph(), i, g2.graph())) out.Add(Canonicalize(term.graph), term.coeff);
  return out;
}

GraphVector InsertAt(const CanonicalGraph& g1, int i, const CanonicalGraph& g2) {
  const Rational scale(1, AutomorphismCount(g1) * AutomorphismCount(g2));
  GraphVector out;
  for (const auto& [g, count] : InsertAtLabeled(g1, i, g2)) out.Add(g, count * Rational(AutomorphismCount(g)) * scale);
  return out;
}

namespace {

template <typename Insert>
GraphVector ComposeWith(const GraphVector& v1, const GraphVector& v2, Insert insert) {
  GraphVector out;
  for (const auto& [g1, c1] : v1) {
    for (const auto& [g2, c2] : v2) {
      for (int i = 1; i <= g1.m(); ++i) {
        const Rational sign = SignPower(static_cast<long>(i - 1) * (g2.m() - 1));
        GraphVector term = insert(g1, i, g2);
        term *= sign * c1 * c2;
        out += term;
      }
    }
  }
  return out;
}

}  // namespace

GraphVector Compose(const GraphVector& v1, const GraphVector& v2) { return ComposeWith(v1, v2, InsertAt); }

GraphVector ComposeLabeled(const GraphVector& v1, const GraphVector& v2) {
  return ComposeWith(v1, v2, InsertAtLabeled);
}

GraphVector Bracket(const GraphVector& v1, const GraphVector& v2) {
  if (v1.IsZero() || v2.IsZero()) return {};
  const int m = ArityOf(v1, "bracket");
  const int mp = ArityOf(v2, "bracket");
  GraphVector out = Compose(v1, v2);
  GraphVector back = Compose(v2, v1);
  back *= SignPower(static_cast<long>(m - 1) * (mp - 1));
  out -= back;
  return out;
}

GraphVector Associator(const GraphVector& g1, const GraphVector& g2, const GraphVector& g3) {
  return Compose(Compose(g1, g2), g3) - Compose(g1, Compose(g2, g3));
}

GraphVector Delta(const GraphVector& v) { return Bracket(GraphVector(UnitGraph(2)), v); }

// --- normal subgraphs -----------------------------------------------------------

std::optional<CanonicalGraph> Quotient(const CanonicalGraph& g, int start, int length,
                                       const std::vector<int>& internal) {
  const int n = g.n();
  const int last = start + length - 1;
  if (start < 1 || length < 1 || last > g.m()) throw std::out_of_range("quotient run outside the boundary");
  std::vector<int> new_index(static_cast<size_t>(n) + 1, 0);  // 0 = collapsed
  std::vector<bool> collapsed(static_cast<size_t>(n) + 1, false);
  for (int v : internal) collapsed[static_cast<size_t>(v)] = true;
  int next = 0;
  for (int v = 1; v <= n; ++v) {
    if (!collapsed[static_cast<size_t>(v)]) new_index[static_cast<size_t>(v)] = ++next;
  }
  std::vector<Leg> legs;
  for (int v = 1; v <= n; ++v) {
    if (collapsed[static_cast<size_t>(v)]) continue;
    Leg leg = g.leg(v);
    for (Target& t : leg) {
      if (t.is_internal()) {
        t = collapsed[static_cast<size_t>(t.index)] ? Target::B(start)
                                                    : Target::V(new_index[static_cast<size_t>(t.index)]);
      } else if (t.index >= start && t.index <= last) {
        t = Target::B(start);
      } else if (t.index > last) {
        t = Target::B(t.index - length + 1);
      }
    }
    if (leg[0] == leg[1]) return std::nullopt;
    legs.push_back(leg);
  }
  return Canonicalize(AdmissibleGraph::Unchecked(g.m() - length + 1, std::move(legs)));
}

namespace {

CanonicalGraph InducedSubgraph(const CanonicalGraph& g, int start, int length, const std::vector<int>& internal) {
  std::vector<int> local(static_cast<size_t>(g.n()) + 1, 0);
  for (size_t q = 0; q < internal.size(); ++q) local[static_cast<size_t>(internal[q])] = static_cast<int>(q) + 1;
  std::vector<Leg> legs;
  for (int v : internal) {
    Leg leg = g.leg(v);
    for (Target& t : leg) {
      t = t.is_internal() ? Target::V(local[static_cast<size_t>(t.index)]) : Target::B(t.index - start + 1);
    }
    legs.push_back(leg);
  }
  return Canonicalize(AdmissibleGraph::Unchecked(length, std::move(legs)));
}

}  // namespace

std::vector<NormalSubgraphWitness> NormalSubgraphs(const CanonicalGraph& g, int run_length) {
  const int m = g.m();
  const int n = g.n();
  if (run_length < 1 || run_length > m) throw std::out_of_range("run length outside 1..m");
  if (n > 20) throw std::length_error("too many internal vertices for subset scan");
  std::vector<NormalSubgraphWitness> out;
  const unsigned full = (1u << n) - 1;
  for (int start = 1; start + run_length - 1 <= m; ++start) {
    const int last = start + run_length - 1;
    for (unsigned mask = 0; mask <= full; ++mask) {
      if (run_length == m && mask == full) continue;  // the whole graph
      if (run_length == 1 && mask == 0) continue;     // a bare point
      std::vector<int> members;
      bool closed = true;
      for (int v = 1; v <= n && closed; ++v) {
        if (!(mask >> (v - 1) & 1u)) continue;
        members.push_back(v);
        for (const Target& t : g.leg(v)) {
          const bool inside = t.is_internal() ? (mask >> (t.index - 1) & 1u) != 0
                                              : (t.index >= start && t.index <= last);
          if (!inside) closed = false;
        }
      }
      if (!closed) continue;
      auto quotient = Quotient(g, start, run_length, members);
      if (!quotient) continue;
      out.push_back({start, run_length, members, InducedSubgraph(g, start, run_length, members), *quotient,
                     (start - 1) % 2 == 0 ? 1 : -1});
    }
  }
  return out;
}

TensorVector CoproductGeneric(const CanonicalGraph& g) {
  if (g.m() < 2) throw ArityError("coproduct needs m >= 2");
  TensorVector tv;
  for (const auto& w : NormalSubgraphs(g, g.m() - 1)) tv.Add(w.quotient, w.subgraph, w.sign);
  return tv;
}

TensorVector CoproductReduced(const CanonicalGraph& g) {
  if (g.m() != 3) throw ArityError("reduced coproduct needs m = 3, got m = " + std::to_string(g.m()));
  return CoproductGeneric(g);
}

TensorVector CoproductReduced(const GraphVector& v) {
  TensorVector out;
  for (const auto& [g, c] : v) {
    TensorVector term = CoproductReduced(g);
    term *= c;
    out += term;
  }
  return out;
}

TensorVector CoproductPrime(const CanonicalGraph& g) {
  if (g.m() != 3) throw ArityError("prime coproduct needs m = 3, got m = " + std::to_string(g.m()));
  if (!IsPrime(g)) throw std::invalid_argument("prime coproduct needs a prime graph");
  TensorVector tv;
  for (const auto& w : NormalSubgraphs(g, 2)) {
    if (w.subgraph.n() == 0 || IsPrime(w.subgraph)) tv.Add(w.quotient, w.subgraph, w.sign);
  }
  return tv;
}

Rational Pairing(const TensorVector& tv, const CanonicalGraph& g1, const CanonicalGraph& g2) {
  return tv.Coefficient(g1, g2);
}

bool DualityCheck(const CanonicalGraph& g1, const CanonicalGraph& g2, const CanonicalGraph& big) {
  return Compose(GraphVector(g1), GraphVector(g2)).Coefficient(big) == Pairing(CoproductReduced(big), g1, g2);
}

GraphVector Merger(const CanonicalGraph& g) {
  if (g.m() != 3) throw ArityError("merger needs m = 3, got m = " + std::to_string(g.m()));
  GraphVector out;
  if (auto left = Quotient(g, 1, 2, {})) out.Add(*left, 1);
  if (auto right = Quotient(g, 2, 2, {})) out.Add(*right, -1);
  return out;
}

TensorVector BoundaryReduce(const CanonicalGraph& g, int side) {
  if (g.m() != 3) throw ArityError("boundary reduction needs m = 3, got m = " + std::to_string(g.m()));
  if (side != 1 && side != 2) throw std::out_of_range("boundary reduction side must be 1 or 2");
  TensorVector tv;
  if (auto q = Quotient(g, side, 2, {})) tv.Add(*q, UnitGraph(2), 1);
  return tv;
}

GraphVector ApplyT(const GraphVector& v) {
  GraphVector out;
  for (const auto& [g, c] : v) out.Add(Transpose(g), -c);
  return out;
}

TensorVector ApplyTTensor(const TensorVector& tv) {
  TensorVector out;
  for (const auto& [key, c] : tv) out.Add(Transpose(key.first), Transpose(key.second), c);
  return out;
}

GraphVector ExpProduct(const GraphVector& v, int max_order) {
  const int m = v.arity().value_or(2);
  if (!v.Degree(0).IsZero()) throw std::invalid_argument("exp_product: argument has a degree-0 component");
  GraphVector result(UnitGraph(m));
  GraphVector power(UnitGraph(m));
  for (int k = 1; k <= max_order; ++k) {
    power = BoundaryProduct(power, v).Truncate(max_order);
    power *= Rational(1, k);
    if (power.IsZero()) break;
    result += power;
  }
  return result;
}

GraphVector LogProduct(const GraphVector& v, int max_order) {
  const int m = ArityOf(v, "log_product");
  const CanonicalGraph unit = UnitGraph(m);
  if (v.Coefficient(unit) != 1) throw std::invalid_argument("log_product: coefficient of the unit must be 1");
  const GraphVector u = v - GraphVector(unit);
  GraphVector result;
  GraphVector power(unit);
  for (int k = 1; k <= max_order; ++k) {
    power = BoundaryProduct(power, u).Truncate(max_order);
    if (power.IsZero()) break;
    result += Rational(k % 2 == 1 ? 1 : -1, k) * power;
  }
  return result;
}

// --- serialization ------------------------------------------------------------------

nlohmann::json ToJson(const GraphVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [g, c] : v) out.push_back({{"graph", GraphToJson(g)}, {"coeff", FormatRational(c)}});
  return out;
}

nlohmann::json ToJson(const TensorVector& tv) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, c] : tv) {
    out.push_back({{"left", GraphToJson(key.first)}, {"right", GraphToJson(key.second)}, {"coeff", FormatRational(c)}});
  }
  return out;
}

GraphVector GraphVectorFromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw GraphError("graph vector JSON must be an array");
  GraphVector v;
  for (const auto& term : j) {
    v.Add(Canonicalize(GraphFromJson(term.at("graph"))), ParseRational(term.at("coeff").get<std::string>()));
  }
  return v;
}

std::string ToText(const GraphVector& v) {
  if (v.IsZero()) return "0\n";
  std::string out;
  for (const auto& [g, c] : v) out += (c > 0 ? "+" : "") + FormatRational(c) + "  " + SerializeGraph(g) + "\n";
  return out;
}

std::string ToText(const TensorVector& tv) {
  if (tv.IsZero()) return "0\n";
  std::string out;
  for (const auto& [key, c] : tv) {
    out += (c > 0 ? "+" : "") + FormatRational(c) + "  " + SerializeGraph(key.first) + "  (x)  " +
           SerializeGraph(key.second) + "\n";
  }
  return out;
}

}  // namespace graphstar
