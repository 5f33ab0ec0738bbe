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

#include <random>

#include "graphstar/algebra.hpp"
#include "graphstar/catalog.hpp"
#include "graphstar/characters.hpp"
#include "graphstar/enumerate.hpp"
#include "graphstar/evaluator.hpp"
#include "graphstar/graph_io.hpp"
#include "graphstar/parallel.hpp"

namespace graphstar {
namespace {

using namespace catalog;
using P = Polynomial;

P Poly(const char* text) { return ParsePolynomial(text); }

TEST(PolynomialTest, ParseAndFormat) {
  EXPECT_EQ(ToString(Poly("x1^2*x2 - 3/2*x1")), "x1^2*x2 - 3/2*x1");
  EXPECT_EQ(ToString(Poly("2 + x2 + x1")), "x1 + x2 + 2");
  EXPECT_EQ(ToString(Poly("x1 - x1")), "0");
  EXPECT_EQ(ToString(Poly("-x3^2")), "-x3^2");
  EXPECT_EQ(Poly("x1 + 1") * Poly("x1 - 1"), Poly("x1^2 - 1"));
  EXPECT_EQ(Poly("x1^2*x2").Derivative(1), Poly("2*x1*x2"));
  EXPECT_EQ(Poly("x1^2*x2").Degree(), 3);
  EXPECT_EQ(P().Degree(), -1);
  EXPECT_EQ(Poly("x3").MaxVariable(), 3);
  EXPECT_THROW(Poly("x0"), std::invalid_argument);
  EXPECT_THROW(Poly("x1 +"), std::invalid_argument);
  EXPECT_THROW(Poly("y1"), std::invalid_argument);
}

TEST(PolynomialTest, MonomialsAndSeries) {
  EXPECT_EQ(Monomials(2, 0, 2).size(), 6u);
  EXPECT_EQ(Monomials(3, 2, 2).size(), 6u);
  PolySeries s(2);
  s[0] = Poly("x1");
  s[2] = Poly("2");
  EXPECT_EQ(ToString(s), "x1 + eps^2*(2)");
  EXPECT_EQ(ToString(PolySeries(1)), "0");
  EXPECT_TRUE((s - s).IsZero());
}

TEST(BivectorTest, StandardStructures) {
  const Bivector so3 = Bivector::So3();
  EXPECT_EQ(so3.At(1, 2), Poly("x3"));
  EXPECT_EQ(so3.At(2, 1), Poly("-x3"));
  EXPECT_EQ(so3.At(1, 1), P());
  EXPECT_TRUE(so3.IsLinear());
  EXPECT_TRUE(Bivector::Constant2().IsConstant());
  EXPECT_FALSE(Bivector::Affine2().IsConstant());
  EXPECT_EQ(BivectorFromJson(ToJson(so3)).At(3, 1), so3.At(3, 1));
  EXPECT_THROW(Bivector(0), EvaluationError);
}

TEST(EvaluatorTest, BasicOperators) {
  const Bivector a = Bivector::Constant2();
  EXPECT_EQ(StateSum(B0(), a, {Poly("x1"), Poly("x2")}), Poly("x1*x2"));
  EXPECT_EQ(StateSum(B1(), a, {Poly("x1"), Poly("x2")}), Poly("1"));
  EXPECT_EQ(StateSum(B1(), a, {Poly("x2"), Poly("x1")}), Poly("-1"));
  EXPECT_THROW(StateSum(B1(), a, {Poly("x1")}), ArityError);
  EXPECT_THROW(StateSum(B1(), a, {Poly("x3"), Poly("x1")}), EvaluationError);
}

TEST(EvaluatorTest, ParallelStateSumMatchesSerial) {
  std::mt19937 rng(3);
  const auto mons = Monomials(3, 0, 3);
  std::uniform_int_distribution<size_t> pick(0, mons.size() - 1);
  const Bivector alpha = Bivector::So3();
  for (int n = 0; n <= 3; ++n) {
    for (const auto& g : EnumerateClass(n, 3, Restriction::kFull)) {
      const std::vector<P> fs{mons[pick(rng)] + mons[pick(rng)], mons[pick(rng)], mons[pick(rng)]};
      EXPECT_EQ(StateSum(g, alpha, fs), StateSumSerial(g.graph(), alpha, fs)) << SerializeGraph(g);
    }
  }
}

TEST(EvaluatorTest, ThreadCountDoesNotChangeResults) {
  const Bivector alpha = Bivector::So3();
  const std::vector<P> fs{Poly("x1^2*x2 + x3"), Poly("x2*x3^2"), Poly("x1*x3")};
  const CanonicalGraph g = GammaN(4);
  SetThreadCount(1);
  const P one = StateSum(g, alpha, fs);
  SetThreadCount(4);
  const P four = StateSum(g, alpha, fs);
  SetThreadCount(0);
  EXPECT_EQ(one, four);
}

// Constant alpha kills every graph with an edge into an internal vertex;
// linear alpha kills every graph with an internal in-degree above one.
TEST(EvaluatorTest, KernelOfConstantAndLinearStructures) {
  const auto mons = Monomials(2, 0, 3);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& g : EnumerateClass(n, 2, Restriction::kFull)) {
      for (const auto& f : mons) {
        for (const auto& h : mons) {
          if (!IsZeroInDegree(g)) EXPECT_TRUE(StateSum(g, Bivector::Constant2(), {f, h}).IsZero());
          if (!IsForest(g)) EXPECT_TRUE(StateSum(g, Bivector::Affine2(), {f, h}).IsZero());
        }
      }
    }
  }
}

TEST(EvaluatorTest, InsertionIsOperatorComposition) {
  const Bivector alpha = Bivector::So3();
  const std::vector<P> fs{Poly("x1^2*x2"), Poly("x2*x3 + x1"), Poly("x3^2*x1")};
  std::vector<AdmissibleGraph> pool;
  for (int n = 0; n <= 2; ++n) {
    for (const auto& g : EnumerateClass(n, 2, Restriction::kFull)) pool.push_back(g.graph());
  }
  pool.push_back(OrientedT2L());
  for (const auto& g1 : pool) {
    for (const auto& g2 : pool) {
      if (g1.m() + g2.m() - 1 != 3) continue;
      for (int i = 1; i <= g1.m(); ++i) {
        P summed;
        for (const auto& t : InsertOriented(g1, i, g2)) summed += t.coeff * StateSum(t.graph, alpha, fs);
        EXPECT_EQ(summed, GerstenhaberInsert(g1, i, g2, alpha, fs));
      }
    }
  }
}

TEST(StarProductTest, MoyalExample) {
  const WeightSystem w = SolveWeights(4, Restriction::kZeroInDegree).weights;
  const Bivector alpha = Bivector::Constant2();
  EXPECT_EQ(ToString(StarProduct(Poly("x1^2"), Poly("x2^2"), alpha, w, 2)), "x1^2*x2^2 + eps*(4*x1*x2) + eps^2*(2)");
  const auto mons = Monomials(2, 0, 3);
  for (const auto& f : mons) {
    for (const auto& g : mons) {
      if (f.Degree() + g.Degree() > 3) continue;
      EXPECT_EQ(StarProduct(f, g, alpha, w, 4), MoyalOracle(f, g, alpha, 4));
    }
  }
  EXPECT_THROW(StarProduct(Poly("x1"), Poly("x2"), alpha, w, 5), std::out_of_range);
}

TEST(StarProductTest, HandSetLinearWeightsAreAssociative) {
  WeightSystem w(Restriction::kFull, false, false);
  w.set_max_order(2);
  w.Set(B1(), 1);
  w.Set(B1Squared(), 1);
  w.Set(BnL(2), Rational(1, 3));
  w.Set(BnR(2), Rational(-1, 3));
  const auto mons = Monomials(2, 0, 2);
  for (const auto& f : mons) {
    for (const auto& g : mons) {
      for (const auto& h : mons) {
        EXPECT_TRUE(AssociativityDefect(f, g, h, Bivector::Affine2(), w, 2).IsZero());
      }
    }
  }
}

TEST(StarProductTest, ConstantStructureIsAssociative) {
  const WeightSystem w = SolveWeights(3, Restriction::kZeroInDegree).weights;
  const auto mons = Monomials(2, 0, 2);
  for (const auto& f : mons) {
    for (const auto& g : mons) {
      for (const auto& h : mons) EXPECT_TRUE(AssociativityDefect(f, g, h, Bivector::Constant2(), w, 3).IsZero());
    }
  }
}

TEST(JacobiTest, AlternationAndSpan) {
  for (const Bivector& alpha : {Bivector::So3(), Bivector::Affine2()}) {
    const auto mons = Monomials(alpha.dim(), 0, alpha.dim() == 3 ? 1 : 2);
    int span_wrong_sign = 0;
    for (const auto& f : mons) {
      for (const auto& g : mons) {
        for (const auto& h : mons) {
          EXPECT_TRUE(JacobiDefect(alpha, f, g, h, JacobiMode::kAlternation).IsZero());
          EXPECT_TRUE(JacobiDefect(alpha, f, g, h, JacobiMode::kSpan).IsZero());
          if (!JacobiDefect(alpha, f, g, h, JacobiMode::kSpan, -kJacobiSpanSign).IsZero()) ++span_wrong_sign;
        }
      }
    }
    EXPECT_GT(span_wrong_sign, 0);
  }
}

}  // namespace
}  // namespace graphstar
