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

#include "graphstar/characters.hpp"

#include <set>
#include <stdexcept>

#include "graphstar/catalog.hpp"
#include "graphstar/graph_io.hpp"
#include "graphstar/linsolve.hpp"
#include "graphstar/parallel.hpp"

namespace graphstar {

// --- WeightSystem ---------------------------------------------------------------

void WeightSystem::Set(const CanonicalGraph& g, const Rational& w) {
  if (g.m() != 2) throw ArityError("weights live on m = 2 graphs");
  if (g.n() == 0) {
    unit_weight_ = w;
    return;
  }
  if (multiplicative_ && !IsPrime(g)) {
    throw std::invalid_argument("multiplicative weight system stores primes only: " + SerializeGraph(g));
  }
  values_[g] = w;
}

std::optional<Rational> WeightSystem::Stored(const CanonicalGraph& g) const {
  if (auto it = values_.find(g); it != values_.end()) return it->second;
  if (symmetric_) {
    if (auto it = values_.find(Transpose(g)); it != values_.end()) return it->second;
  }
  return std::nullopt;
}

Rational WeightSystem::operator()(const CanonicalGraph& g) const {
  if (g.m() != 2) throw ArityError("weights live on m = 2 graphs, got m = " + std::to_string(g.m()));
  if (g.n() > max_order_) {
    throw std::out_of_range("weight requested at order " + std::to_string(g.n()) + " beyond solved order " +
                            std::to_string(max_order_));
  }
  if (!PassesRestriction(g, restriction_)) return 0;
  if (g.n() == 0) return unit_weight_;
  auto lookup = [this](const CanonicalGraph& h) {
    auto value = Stored(h);
    if (!value) throw std::out_of_range("no weight stored for " + SerializeGraph(h));
    return *value;
  };
  if (!multiplicative_) return lookup(g);
  Rational product = 1;
  for (const CanonicalGraph& p : PrimeFactorize(g)) product *= lookup(p);
  return product;
}

Rational Evaluate(const WeightSystem& w, const GraphVector& v) {
  Rational total = 0;
  for (const auto& [g, c] : v) total += c * w(g);
  return total;
}

Rational Evaluate(const WeightSystem& w, const TensorVector& tv) {
  Rational total = 0;
  for (const auto& [key, c] : tv) total += c * w(key.first) * w(key.second);
  return total;
}

Normalization DefaultNormalization() { return {{catalog::B0(), Rational(1)}, {catalog::B1(), Rational(1)}}; }

// --- affine weight forms ------------------------------------------------------

namespace {

// Maps prime graphs to unknown columns and evaluates weights as affine forms
// in those unknowns.
class FormContext {
 public:
  FormContext(const WeightSystem& known, const Normalization& pins) : known_(known), pins_(pins) {}

  CanonicalGraph Representative(const CanonicalGraph& p) const {
    if (!known_.symmetric()) return p;
    CanonicalGraph t = Transpose(p);
    return t < p ? t : p;
  }

  std::optional<Rational> Pinned(const CanonicalGraph& p) const {
    if (auto it = pins_.find(p); it != pins_.end()) return it->second;
    if (known_.symmetric()) {
      if (auto it = pins_.find(Transpose(p)); it != pins_.end()) return it->second;
    }
    return std::nullopt;
  }

  // Registers p as an unknown unless pinned; returns false if pinned or known.
  bool AddUnknown(const CanonicalGraph& p) {
    if (Pinned(p)) return false;
    const CanonicalGraph rep = Representative(p);
    if (columns_.count(rep)) return false;
    columns_.emplace(rep, static_cast<int>(unknowns_.size()));
    unknowns_.push_back(rep);
    return true;
  }

  const std::vector<CanonicalGraph>& unknowns() const { return unknowns_; }

  AffineForm Weight(const CanonicalGraph& g) const {
    AffineForm form;
    if (!PassesRestriction(g, known_.restriction())) return form;
    if (g.n() == 0) {
      auto pinned = Pinned(g);
      form.constant = pinned ? *pinned : known_.unit_weight();
      return form;
    }
    form.constant = 1;
    for (const CanonicalGraph& p : PrimeFactorize(g)) form = Multiply(form, Factor(p));
    return form;
  }

 private:
  AffineForm Factor(const CanonicalGraph& p) const {
    AffineForm f;
    if (auto pinned = Pinned(p)) {
      f.constant = *pinned;
    } else if (auto it = columns_.find(Representative(p)); it != columns_.end()) {
      f.coeffs[it->second] = 1;
    } else {
      f.constant = known_(p);
    }
    return f;
  }

  static AffineForm Multiply(const AffineForm& a, const AffineForm& b) {
    if (!a.coeffs.empty() && !b.coeffs.empty()) {
      throw std::logic_error("constraint is not linear in the unknown weights");
    }
    AffineForm out;
    out.constant = a.constant * b.constant;
    for (const auto& [j, c] : a.coeffs) out.coeffs[j] += c * b.constant;
    for (const auto& [j, c] : b.coeffs) out.coeffs[j] += c * a.constant;
    std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  const WeightSystem& known_;
  const Normalization& pins_;
  std::map<CanonicalGraph, int> columns_;
  std::vector<CanonicalGraph> unknowns_;
};

void Accumulate(AffineForm& into, const AffineForm& term, const Rational& scale) {
  into.constant += scale * term.constant;
  for (const auto& [j, c] : term.coeffs) {
    into.coeffs[j] += scale * c;
    if (into.coeffs[j] == 0) into.coeffs.erase(j);
  }
}

Constraint MakeConstraint(const CanonicalGraph& big, const FormContext& ctx, bool symmetric) {
  Constraint eq{big, {}, symmetric && Transpose(big) == big};
  for (const auto& [key, c] : CoproductReduced(big)) {
    AffineForm left = ctx.Weight(key.first);
    AffineForm right = ctx.Weight(key.second);
    if (!left.coeffs.empty() && !right.coeffs.empty()) throw std::logic_error("quadratic constraint term");
    AffineForm product;
    product.constant = left.constant * right.constant;
    for (const auto& [j, v] : left.coeffs) product.coeffs[j] = v * right.constant;
    for (const auto& [j, v] : right.coeffs) product.coeffs[j] = v * left.constant;
    Accumulate(eq.form, product, c);
  }
  return eq;
}

ConstraintSystem Assemble(int order, const WeightSystem& known, const Normalization& pins, bool drop_redundant,
                          int threads) {
  const Restriction r = known.restriction();
  FormContext ctx(known, pins);
  for (const CanonicalGraph& g : EnumerateClass(order, 2, r)) {
    if (IsPrime(g)) ctx.AddUnknown(g);
  }
  const std::vector<CanonicalGraph> sources = EnumerateClass(order, 3, r);
  std::vector<std::optional<Constraint>> eqs(sources.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (size_t q = 0; q < sources.size(); ++q) eqs[q] = MakeConstraint(sources[q], ctx, known.symmetric());
  ConstraintSystem sys;
  sys.order = order;
  sys.unknowns = ctx.unknowns();
  for (auto& eq : eqs) {
    if (drop_redundant && eq->redundant) continue;
    sys.equations.push_back(std::move(*eq));
  }
  return sys;
}

LinearSystem ToLinear(const std::vector<Constraint>& eqs, int cols) {
  LinearSystem ls;
  ls.cols = cols;
  for (const Constraint& eq : eqs) {
    std::vector<Rational> row(static_cast<size_t>(cols), Rational(0));
    for (const auto& [j, c] : eq.form.coeffs) row[static_cast<size_t>(j)] = c;
    ls.AddRow(std::move(row), -eq.form.constant);
  }
  return ls;
}

}  // namespace

ConstraintSystem AssembleConstraints(int order, const WeightSystem& known, const Normalization& pins,
                                     bool drop_redundant) {
  return Assemble(order, known, pins, drop_redundant, ThreadCount());
}

ConstraintSystem AssembleConstraintsSerial(int order, const WeightSystem& known, const Normalization& pins,
                                           bool drop_redundant) {
  return Assemble(order, known, pins, drop_redundant, 1);
}

// --- solver -----------------------------------------------------------------------

std::string OrderReport::StatusText() const {
  switch (status) {
    case SolveStatus::kUnique: return "unique";
    case SolveStatus::kAffine: return "dim=" + std::to_string(dimension);
    case SolveStatus::kInfeasible: return "infeasible";
  }
  return "infeasible";
}

bool SolveResult::feasible() const {
  for (const OrderReport& r : report) {
    if (r.status == SolveStatus::kInfeasible) return false;
  }
  return true;
}

SolveResult SolveWeights(int max_order, Restriction restriction, const Normalization& pins, bool drop_redundant) {
  SolveResult result{WeightSystem(restriction, true, true), {}};
  WeightSystem& w = result.weights;
  for (const auto& [g, value] : pins) {
    if (g.n() > max_order) continue;
    if (g.n() > 0 && !IsPrime(g)) throw std::invalid_argument("only prime weights can be pinned: " + SerializeGraph(g));
    w.Set(g, value);
  }
  for (int order = 1; order <= max_order; ++order) {
    ConstraintSystem sys = AssembleConstraints(order, w, pins, drop_redundant);
    const int cols = static_cast<int>(sys.unknowns.size());
    LinearSolution sol = SolveExact(ToLinear(sys.equations, cols));
    OrderReport rep{order, SolveStatus::kUnique, 0, static_cast<int>(sys.equations.size()), cols};
    if (!sol.feasible) {
      rep.status = SolveStatus::kInfeasible;
      result.report.push_back(rep);
      break;
    }
    if (sol.nullity > 0) {
      rep.status = SolveStatus::kAffine;
      rep.dimension = sol.nullity;
    }
    for (int j = 0; j < cols; ++j) w.Set(sys.unknowns[static_cast<size_t>(j)], sol.x[static_cast<size_t>(j)]);
    w.set_max_order(order);
    result.report.push_back(rep);
  }
  return result;
}

// --- Moyal / Hausdorff ----------------------------------------------------------------

GraphVector MoyalElement(const WeightSystem& w, int max_order) {
  GraphVector z;
  for (int n = 0; n <= max_order; ++n) {
    for (const CanonicalGraph& g : EnumerateClass(n, 2, w.restriction())) {
      z.Add(g, w(g) / Rational(AutomorphismCount(g)));
    }
  }
  return z;
}

GraphVector HausdorffElement(const GraphVector& z, int max_order) { return LogProduct(z, max_order); }

Rational SymmetryFactor(const CanonicalGraph& g) { return Rational(AutomorphismCount(g)) / Factorial(g.n()); }

// --- antipode ---------------------------------------------------------------------------

AntipodeValue Antipode(const CanonicalGraph& g) {
  AntipodeValue s;
  s.graph.Add(g, -1);
  if (g.n() == 0 || g.m() < 2) return s;
  for (const auto& w : NormalSubgraphs(g, g.m() - 1)) {
    AntipodeValue inner = Antipode(w.quotient);
    if (!inner.tensor.IsZero()) throw std::logic_error("antipode recursion deeper than one level");
    for (const auto& [q, c] : inner.graph) s.tensor.Add(q, w.subgraph, -w.sign * c);
  }
  return s;
}

AntipodeValue AntipodeGeometric(const CanonicalGraph& g) {
  using Word = std::vector<CanonicalGraph>;
  std::map<Word, Rational> level{{Word{g}, Rational(1)}};
  std::map<Word, Rational> total;
  Rational sign = -1;
  if (g.n() == 0 || g.m() < 2) level.clear();
  while (!level.empty()) {
    std::map<Word, Rational> next;
    for (const auto& [word, c] : level) {
      total[word] += sign * c;
      if (word.front().m() < 2) continue;
      for (const auto& [key, d] : CoproductGeneric(word.front())) {
        Word longer{key.first, key.second};
        longer.insert(longer.end(), word.begin() + 1, word.end());
        next[longer] += c * d;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    level = std::move(next);
    sign = -sign;
  }
  AntipodeValue s;
  if (g.n() == 0 || g.m() < 2) {
    s.graph.Add(g, -1);
    return s;
  }
  for (const auto& [word, c] : total) {
    if (word.size() == 1) {
      s.graph.Add(word[0], c);
    } else if (word.size() == 2) {
      s.tensor.Add(word[0], word[1], c);
    } else if (c != 0) {
      throw std::logic_error("antipode series produced a word of length > 2");
    }
  }
  return s;
}

UnitarityResult UnitarityCheck(const WeightSystem& w, int order) {
  for (int n = 1; n <= order; ++n) {
    for (const CanonicalGraph& g : EnumerateClass(n, 3, w.restriction())) {
      const AntipodeValue s = Antipode(g);
      if (s.graph != -GraphVector(g) || Evaluate(w, s.tensor) != 0) return {false, g};
    }
  }
  return {};
}

// --- Bernoulli determinacy --------------------------------------------------------------

BernoulliDeterminacy BernoulliDeterminacyCheck(int max_order) {
  if (max_order < 2 || max_order > 3) throw std::invalid_argument("Bernoulli determinacy is linear only for orders 2..3");
  WeightSystem known(Restriction::kForest, true, true);
  known.Set(catalog::B1(), 1);
  known.set_max_order(1);
  const Normalization pins = DefaultNormalization();
  FormContext ctx(known, pins);
  std::set<CanonicalGraph> bernoulli;
  for (int n = 2; n <= max_order; ++n) bernoulli.insert(ctx.Representative(catalog::BnL(n)));
  for (int n = 2; n <= max_order; ++n) {
    for (const CanonicalGraph& g : EnumerateClass(n, 2, Restriction::kForest)) {
      if (IsPrime(g) && !bernoulli.count(ctx.Representative(g))) ctx.AddUnknown(g);
    }
  }
  const int free_start = static_cast<int>(ctx.unknowns().size());
  for (int n = 2; n <= max_order; ++n) ctx.AddUnknown(catalog::BnL(n));
  const std::vector<CanonicalGraph> unknowns = ctx.unknowns();
  std::vector<Constraint> eqs;
  for (int n = 2; n <= max_order; ++n) {
    for (const CanonicalGraph& big : EnumerateClass(n, 3, Restriction::kForest)) {
      eqs.push_back(MakeConstraint(big, ctx, true));
    }
  }
  const int cols = static_cast<int>(unknowns.size());
  LinearSolution sol = SolveExact(ToLinear(eqs, cols), free_start);
  BernoulliDeterminacy out;
  out.parameters.assign(unknowns.begin() + free_start, unknowns.end());
  if (!sol.feasible) return out;
  out.determined = sol.rank == free_start;
  auto parameter_part = [&](const std::vector<Rational>& row, const Rational& sign) {
    AffineForm form;
    for (int j = free_start; j < cols; ++j) {
      const Rational& v = row[static_cast<size_t>(j)];
      if (v != 0) form.coeffs[j - free_start] = sign * v;
    }
    return form;
  };
  for (size_t r = 0; r < sol.reduced.size(); ++r) {
    const auto& row = sol.reduced[r];
    if (r < sol.pivot_columns.size()) {
      AffineForm form = parameter_part(row, -1);
      form.constant = row[static_cast<size_t>(cols)];
      out.expressions.emplace_back(unknowns[static_cast<size_t>(sol.pivot_columns[r])], std::move(form));
    }
  }
  // Residual rows only involve parameters; reduce them to a basis.
  LinearSystem rel;
  rel.cols = cols - free_start;
  for (size_t r = sol.pivot_columns.size(); r < sol.reduced.size(); ++r) {
    const auto& row = sol.reduced[r];
    rel.AddRow({row.begin() + free_start, row.end() - 1}, row.back());
  }
  const LinearSolution basis = SolveExact(rel);
  if (!basis.feasible) out.determined = false;
  for (const auto& row : basis.reduced) {
    AffineForm form;
    for (int j = 0; j < rel.cols; ++j) {
      if (row[static_cast<size_t>(j)] != 0) form.coeffs[j] = row[static_cast<size_t>(j)];
    }
    form.constant = -row.back();
    out.parameter_relations.push_back(std::move(form));
  }
  return out;
}

// --- JSON ---------------------------------------------------------------------------------

nlohmann::json WeightsToJson(const SolveResult& result) {
  const WeightSystem& w = result.weights;
  nlohmann::json values = nlohmann::json::array();
  for (int n = 0; n <= w.max_order(); ++n) {
    for (const CanonicalGraph& g : EnumerateClass(n, 2, w.restriction())) {
      values.push_back({{"graph", GraphToJson(g)}, {"weight", FormatRational(w(g))}});
    }
  }
  nlohmann::json report = nlohmann::json::array();
  for (const OrderReport& r : result.report) report.push_back({{"order", r.order}, {"status", r.StatusText()}});
  return {{"restriction", RestrictionName(w.restriction())},
          {"orders", w.max_order()},
          {"values", values},
          {"report", report}};
}

WeightSystem WeightsFromJson(const nlohmann::json& j) {
  WeightSystem w(ParseRestriction(j.at("restriction").get<std::string>()), false, false);
  w.set_max_order(j.at("orders").get<int>());
  for (const auto& entry : j.at("values")) {
    w.Set(Canonicalize(GraphFromJson(entry.at("graph"))), ParseRational(entry.at("weight").get<std::string>()));
  }
  return w;
}

}  // namespace graphstar
