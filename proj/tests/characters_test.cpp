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

#include <gtest/gtest.h>

#include "graphstar/catalog.hpp"
#include "graphstar/characters.hpp"
#include "graphstar/enumerate.hpp"
#include "graphstar/graph_io.hpp"
#include "graphstar/linsolve.hpp"

namespace graphstar {
namespace {

using namespace catalog;

std::vector<Rational> Row(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

TEST(LinsolveTest, UniqueSolution) {
  LinearSystem s{2, {}, {}};
  s.AddRow(Row({1, 1}), 3);
  s.AddRow(Row({1, -1}), 1);
  const LinearSolution sol = SolveExact(s);
  ASSERT_TRUE(sol.feasible);
  EXPECT_EQ(sol.rank, 2);
  EXPECT_EQ(sol.x, Row({2, 1}));
}

TEST(LinsolveTest, AffineAndInfeasible) {
  LinearSystem s{3, {}, {}};
  s.AddRow(Row({1, 2, 0}), 4);
  s.AddRow(Row({2, 4, 0}), 8);
  LinearSolution sol = SolveExact(s);
  ASSERT_TRUE(sol.feasible);
  EXPECT_EQ(sol.nullity, 2);
  EXPECT_EQ(sol.x, Row({4, 0, 0}));
  s.AddRow(Row({3, 6, 0}), 1);
  EXPECT_FALSE(SolveExact(s).feasible);
}

TEST(LinsolveTest, PivotLimitLeavesParameters) {
  LinearSystem s{2, {}, {}};
  s.AddRow(Row({1, -1}), 0);
  s.AddRow(Row({0, 1}), 5);
  const LinearSolution sol = SolveExact(s, 1);
  ASSERT_TRUE(sol.feasible);
  EXPECT_EQ(sol.pivot_columns, std::vector<int>{0});
  ASSERT_EQ(sol.reduced.size(), 2u);
  EXPECT_EQ(sol.reduced[1], Row({0, 1, 5}));
}

TEST(WeightSystemTest, MultiplicativeSymmetricLookup) {
  WeightSystem w(Restriction::kFull, true, true);
  w.set_max_order(2);
  w.Set(B1(), 3);
  w.Set(BnL(2), Rational(1, 2));
  EXPECT_EQ(w(B0()), 1);
  EXPECT_EQ(w(B1Squared()), 9);
  EXPECT_EQ(w(BnR(2)), Rational(1, 2));
  EXPECT_THROW(w.Set(B1Squared(), 1), std::invalid_argument);
  EXPECT_THROW(w(BnL(3)), std::out_of_range);
  WeightSystem forest(Restriction::kZeroInDegree, true, true);
  forest.set_max_order(2);
  forest.Set(B1(), 1);
  EXPECT_EQ(forest(BnL(2)), 0);
}

TEST(SolverTest, FullOrderTwoIsUniqueWithUnitWeights) {
  const SolveResult r = SolveWeights(2, Restriction::kFull);
  ASSERT_TRUE(r.feasible());
  ASSERT_EQ(r.report.size(), 2u);
  EXPECT_EQ(r.report[1].StatusText(), "unique");
  EXPECT_EQ(r.weights(BnL(2)), 1);
  EXPECT_EQ(r.weights(BnR(2)), 1);
  EXPECT_EQ(r.weights(B1Squared()), 1);
}

TEST(SolverTest, GoldenValues) {
  const SolveResult full = SolveWeights(3, Restriction::kFull);
  ASSERT_TRUE(full.feasible());
  for (const auto& g : EnumerateClass(3, 2, Restriction::kFull)) EXPECT_EQ(full.weights(g), 1) << SerializeGraph(g);
  const SolveResult forest = SolveWeights(4, Restriction::kForest);
  ASSERT_TRUE(forest.feasible());
  for (const auto& rep : forest.report) EXPECT_EQ(rep.StatusText(), "unique");
  for (const auto& g : EnumerateClass(4, 2, Restriction::kForest)) EXPECT_EQ(forest.weights(g), 1);
  // The Y-shaped tree: one vertex with both legs on internal vertices.
  const CanonicalGraph y = Canonicalize(ParseGraph("m=2;n=3;v1:V2,V3;v2:B1,B2;v3:B1,B2"));
  EXPECT_EQ(forest.weights(y), 1);
}

TEST(SolverTest, SolvedWeightsKillEveryCoproduct) {
  for (Restriction r : {Restriction::kFull, Restriction::kForest, Restriction::kZeroInDegree}) {
    const SolveResult s = SolveWeights(3, r);
    ASSERT_TRUE(s.feasible());
    for (int n = 1; n <= 3; ++n) {
      for (const auto& g : EnumerateClass(n, 3, r)) {
        EXPECT_EQ(Evaluate(s.weights, CoproductReduced(g)), 0) << RestrictionName(r) << " " << SerializeGraph(g);
      }
    }
  }
}

TEST(SolverTest, ConstantClassIsExponential) {
  const SolveResult s = SolveWeights(4, Restriction::kZeroInDegree);
  ASSERT_TRUE(s.feasible());
  for (int n = 0; n <= 4; ++n) {
    for (const auto& g : EnumerateClass(n, 2, Restriction::kZeroInDegree)) EXPECT_EQ(s.weights(g), 1);
  }
  EXPECT_EQ(MoyalElement(s.weights, 4), ExpProduct(GraphVector(B1()), 4));
}

TEST(SolverTest, RedundantEquationsCanBeDropped) {
  const WeightSystem known = SolveWeights(1, Restriction::kForest).weights;
  const ConstraintSystem all = AssembleConstraints(2, known, DefaultNormalization());
  const ConstraintSystem kept = AssembleConstraints(2, known, DefaultNormalization(), true);
  EXPECT_LT(kept.equations.size(), all.equations.size());
  EXPECT_EQ(SolveWeights(3, Restriction::kForest, DefaultNormalization(), true).weights.stored(),
            SolveWeights(3, Restriction::kForest).weights.stored());
}

TEST(SolverTest, ParallelAssemblyMatchesSerial) {
  const WeightSystem known = SolveWeights(2, Restriction::kFull).weights;
  const ConstraintSystem par = AssembleConstraints(3, known, DefaultNormalization());
  const ConstraintSystem ser = AssembleConstraintsSerial(3, known, DefaultNormalization());
  ASSERT_EQ(par.equations.size(), ser.equations.size());
  EXPECT_EQ(par.unknowns, ser.unknowns);
  for (size_t i = 0; i < par.equations.size(); ++i) {
    EXPECT_EQ(par.equations[i].source, ser.equations[i].source);
    EXPECT_EQ(par.equations[i].form.coeffs, ser.equations[i].form.coeffs);
    EXPECT_EQ(par.equations[i].form.constant, ser.equations[i].form.constant);
  }
}

TEST(SolverTest, PinningScalesTheSolution) {
  Normalization pins = DefaultNormalization();
  pins[B1()] = 2;
  const SolveResult s = SolveWeights(3, Restriction::kForest, pins);
  ASSERT_TRUE(s.feasible());
  for (int n = 1; n <= 3; ++n) {
    for (const auto& g : EnumerateClass(n, 3, Restriction::kForest)) EXPECT_EQ(Evaluate(s.weights, CoproductReduced(g)), 0);
  }
}

TEST(SolverTest, JsonRoundTrip) {
  const SolveResult s = SolveWeights(3, Restriction::kForest);
  const WeightSystem loaded = WeightsFromJson(WeightsToJson(s));
  EXPECT_EQ(loaded.max_order(), 3);
  for (int n = 0; n <= 3; ++n) {
    for (const auto& g : EnumerateClass(n, 2, Restriction::kForest)) EXPECT_EQ(loaded(g), s.weights(g));
  }
}

TEST(BernoulliTest, ForestWeightsAreDeterminedByBernoulliWeights) {
  const BernoulliDeterminacy d = BernoulliDeterminacyCheck(3);
  EXPECT_TRUE(d.determined);
  ASSERT_EQ(d.parameters.size(), 2u);
  EXPECT_EQ(d.parameters[0], BnL(2));
  EXPECT_EQ(d.parameters[1], BnL(3));
  const WeightSystem w = SolveWeights(3, Restriction::kForest).weights;
  auto eval = [&](const AffineForm& f) {
    Rational v = f.constant;
    for (const auto& [j, c] : f.coeffs) v += c * w(d.parameters[static_cast<size_t>(j)]);
    return v;
  };
  ASSERT_FALSE(d.expressions.empty());
  for (const auto& [g, form] : d.expressions) EXPECT_EQ(eval(form), w(g)) << SerializeGraph(g);
  for (const auto& rel : d.parameter_relations) EXPECT_EQ(eval(rel), 0);
  EXPECT_THROW(BernoulliDeterminacyCheck(1), std::invalid_argument);
}

TEST(AntipodeTest, KnownValues) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(Antipode(BnL(n)), (AntipodeValue{-GraphVector(BnL(n)), {}}));
    EXPECT_EQ(Antipode(BnR(n)), (AntipodeValue{-GraphVector(BnR(n)), {}}));
  }
  EXPECT_EQ(Antipode(T2L()), (AntipodeValue{-GraphVector(T2L()), Tensor({{B1(), B1(), -1}, {BnL(2), B0(), 1}})}));
  EXPECT_EQ(Antipode(C2L()),
            (AntipodeValue{-GraphVector(C2L()), Tensor({{B1(), B1(), 1}, {B1Squared(), B0(), -1}})}));
}

TEST(AntipodeTest, RecursiveAndGeometricFormsAgree) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& g : EnumerateClass(n, 3, Restriction::kFull)) {
      EXPECT_EQ(Antipode(g), AntipodeGeometric(g)) << SerializeGraph(g);
    }
  }
}

TEST(AntipodeTest, SolvedWeightsAreUnitary) {
  for (Restriction r : {Restriction::kFull, Restriction::kForest}) {
    const UnitarityResult u = UnitarityCheck(SolveWeights(3, r).weights, 3);
    EXPECT_TRUE(u.ok);
  }
}

TEST(AntipodeTest, WrongWeightsBreakUnitarity) {
  WeightSystem w(Restriction::kFull, true, true);
  w.set_max_order(2);
  w.Set(B1(), 1);
  w.Set(BnL(2), 2);
  const UnitarityResult u = UnitarityCheck(w, 2);
  EXPECT_FALSE(u.ok);
  ASSERT_TRUE(u.failure.has_value());
  EXPECT_EQ(u.failure->n(), 2);
}

TEST(CharacterTest, SymmetryFactors) {
  EXPECT_EQ(SymmetryFactor(B1Squared()), 1);
  EXPECT_EQ(SymmetryFactor(BnL(2)), Rational(1, 2));
  EXPECT_EQ(SymmetryFactor(B0()), 1);
}

TEST(CharacterTest, HausdorffElementOfExponentialIsLinear) {
  const WeightSystem w = SolveWeights(4, Restriction::kZeroInDegree).weights;
  EXPECT_EQ(HausdorffElement(MoyalElement(w, 4), 4), GraphVector(B1()));
}

}  // namespace
}  // namespace graphstar
