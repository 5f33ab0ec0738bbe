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

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "graphstar/catalog.hpp"
#include "graphstar/enumerate.hpp"
#include "graphstar/graph.hpp"
#include "graphstar/graph_io.hpp"

namespace graphstar {
namespace {

using catalog::B0;
using catalog::B1;
using catalog::B1Squared;
using catalog::BnL;
using catalog::BnR;

// Oracle: every labeled leg assignment, filtered through validation.
std::set<CanonicalGraph> NaiveClass(int n, int m) {
  std::vector<Target> targets;
  for (int i = 1; i <= m; ++i) targets.push_back(Target::B(i));
  for (int k = 1; k <= n; ++k) targets.push_back(Target::V(k));
  std::set<CanonicalGraph> out;
  std::vector<Leg> legs(static_cast<size_t>(n));
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      try {
        out.insert(MakeGraph(m, legs));
      } catch (const GraphError&) {
      }
      return;
    }
    for (size_t a = 0; a < targets.size(); ++a) {
      for (size_t b = a + 1; b < targets.size(); ++b) {
        legs[static_cast<size_t>(k)] = {targets[a], targets[b]};
        rec(k + 1);
      }
    }
  };
  rec(0);
  return out;
}

AdmissibleGraph Relabel(const CanonicalGraph& g, std::mt19937& rng) {
  std::vector<int> perm(static_cast<size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Leg> legs(perm.size());
  for (int k = 1; k <= g.n(); ++k) {
    Leg leg = g.leg(k);
    for (Target& t : leg) {
      if (t.is_internal()) t.index = perm[static_cast<size_t>(t.index - 1)];
    }
    if (rng() % 2) std::swap(leg[0], leg[1]);
    legs[static_cast<size_t>(perm[static_cast<size_t>(k - 1)] - 1)] = leg;
  }
  return AdmissibleGraph(g.m(), legs);
}

TEST(GraphTest, ValidationRejectsBadGraphs) {
  EXPECT_THROW(ParseGraph("m=2;n=1;v1:B1,B1"), GraphError);
  EXPECT_THROW(ParseGraph("m=2;n=1;v1:B1,V1"), GraphError);
  EXPECT_THROW(ParseGraph("m=2;n=2;v1:B1,V2;v2:B1,V1"), GraphError);
  EXPECT_THROW(ParseGraph("m=2;n=1;v1:B1,B3"), GraphError);
  EXPECT_THROW(ParseGraph("m=2;n=1;v1:B1,V2"), GraphError);
  EXPECT_NO_THROW(ParseGraph("m=2;n=2;v1:B1,B2;v2:B1,V1"));
}

TEST(GraphTest, ParseErrorsCarryPositions) {
  try {
    ParseGraph("m=2;n=1;v1:B1;B2");
    FAIL() << "expected a parse error";
  } catch (const GraphParseError& e) {
    EXPECT_EQ(e.position(), 13u);
  }
  EXPECT_THROW(ParseGraph("m=2;n=2;v1:B1,B2"), GraphParseError);
  EXPECT_THROW(ParseGraph("m=2;n=1;v2:B1,B2"), GraphParseError);
  EXPECT_THROW(ParseGraph("m=2;n=1;v1:B1,B2 extra"), GraphParseError);
  EXPECT_THROW(ParseGraph("m=2;n=1;v1:X1,B2"), GraphParseError);
}

TEST(GraphTest, TextAndJsonRoundTrip) {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& g : EnumerateClass(n, 3, Restriction::kFull)) {
      EXPECT_EQ(Canonicalize(ParseGraph(SerializeGraph(g))), g);
      EXPECT_EQ(Canonicalize(GraphFromJson(GraphToJson(g))), g);
    }
  }
  EXPECT_EQ(SerializeGraph(Canonicalize(ParseGraph(" m = 2 ; n = 1 ; v1 : B2 , B1 "))), "m=2;n=1;v1:B1,B2");
}

TEST(GraphTest, CanonicalFormIsRelabelingInvariant) {
  std::mt19937 rng(7);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : EnumerateClass(n, 2, Restriction::kFull)) {
      for (int trial = 0; trial < 3; ++trial) EXPECT_EQ(Canonicalize(Relabel(g, rng)), g);
    }
  }
  for (const auto& g : EnumerateClass(3, 3, Restriction::kFull)) EXPECT_EQ(Canonicalize(Relabel(g, rng)), g);
}

TEST(GraphTest, EnumerationMatchesNaiveOracle) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= (m == 3 ? 3 : 4); ++n) {
      const std::set<CanonicalGraph> naive = NaiveClass(n, m);
      const auto listed = EnumerateClass(n, m, Restriction::kFull);
      EXPECT_EQ(std::set<CanonicalGraph>(listed.begin(), listed.end()), naive) << "n=" << n << " m=" << m;
      EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
    }
  }
}

TEST(GraphTest, ClassSizes) {
  const std::vector<size_t> full2{1, 1, 3, 13, 79};
  const std::vector<size_t> full3{1, 3, 15, 97, 807};
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(EnumerateClass(n, 2, Restriction::kFull).size(), full2[static_cast<size_t>(n)]);
    EXPECT_EQ(EnumerateClass(n, 3, Restriction::kFull).size(), full3[static_cast<size_t>(n)]);
  }
  EXPECT_EQ(EnumerateClass(3, 2, Restriction::kForest).size(), 8u);
  EXPECT_EQ(EnumerateClass(4, 2, Restriction::kForest).size(), 23u);
  EXPECT_EQ(EnumerateClass(3, 3, Restriction::kForest).size(), 70u);
  EXPECT_EQ(EnumerateClass(4, 3, Restriction::kForest).size(), 339u);
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(EnumerateClass(n, 2, Restriction::kZeroInDegree).size(), 1u);
}

TEST(GraphTest, SerialAndParallelEnumerationAgree) {
  for (int n = 0; n <= 3; ++n) {
    for (Restriction r : {Restriction::kFull, Restriction::kForest, Restriction::kZeroInDegree}) {
      EXPECT_EQ(EnumerateClassSerial(n, 3, r), EnumerateClassUncached(n, 3, r));
    }
  }
}

TEST(GraphTest, RestrictionNames) {
  EXPECT_EQ(ParseRestriction("constant"), Restriction::kZeroInDegree);
  EXPECT_EQ(ParseRestriction("zero-in-degree"), Restriction::kZeroInDegree);
  EXPECT_EQ(RestrictionName(ParseRestriction("forest")), "forest");
  EXPECT_THROW(ParseRestriction("linear"), std::invalid_argument);
  EXPECT_THROW(EnumerateClass(1, 4, Restriction::kFull), std::invalid_argument);
}

TEST(GraphTest, AutomorphismCounts) {
  EXPECT_EQ(AutomorphismCount(B0()), 1);
  EXPECT_EQ(AutomorphismCount(B1()), 1);
  EXPECT_EQ(AutomorphismCount(B1Squared()), 2);
  EXPECT_EQ(AutomorphismCount(BnL(3)), 1);
  EXPECT_EQ(AutomorphismCount(MakeGraph(2, {{Target::B(1), Target::B(2)},
                                            {Target::B(1), Target::B(2)},
                                            {Target::B(1), Target::B(2)}})),
            6);
}

// |Aut(p1^k1 ... pr^kr)| = prod k_i! |Aut p_i|^k_i
TEST(GraphTest, AutomorphismCountIsMultiplicative) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : EnumerateClass(n, 2, Restriction::kFull)) {
      const auto factors = PrimeFactorize(g);
      std::int64_t expected = 1;
      for (size_t i = 0; i < factors.size();) {
        size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) {
          expected *= AutomorphismCount(factors[j]) * static_cast<std::int64_t>(j - i + 1);
          ++j;
        }
        i = j;
      }
      EXPECT_EQ(AutomorphismCount(g), expected) << SerializeGraph(g);
    }
  }
}

TEST(GraphTest, PrimeFactorizationRebuildsGraph) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : EnumerateClass(n, 3, Restriction::kFull)) {
      const auto factors = PrimeFactorize(g);
      ASSERT_FALSE(factors.empty());
      CanonicalGraph product = factors[0];
      for (size_t i = 1; i < factors.size(); ++i) product = *BoundaryProduct(product, factors[i]);
      EXPECT_EQ(product, g);
      for (const auto& f : factors) EXPECT_TRUE(IsPrime(f));
    }
  }
  EXPECT_FALSE(IsPrime(B1Squared()));
  EXPECT_TRUE(IsPrime(BnL(3)));
  EXPECT_FALSE(BoundaryProduct(B1(), catalog::T2L()).has_value());
}

TEST(GraphTest, TransposeIsInvolution) {
  EXPECT_EQ(Transpose(BnL(2)), BnR(2));
  EXPECT_EQ(Transpose(catalog::T2L()), catalog::T2R());
  for (const auto& g : EnumerateClass(3, 3, Restriction::kFull)) EXPECT_EQ(Transpose(Transpose(g)), g);
}

TEST(GraphTest, Heights) {
  EXPECT_EQ(ComputeHeights(BnL(2)), (Heights{2, 1, -1}));
  EXPECT_EQ(ComputeHeights(BnR(2)), (Heights{1, 2, 1}));
  EXPECT_EQ(ComputeHeights(B1Squared()), (Heights{2, 2, 0}));
  EXPECT_THROW(ComputeHeights(catalog::T2L()), ArityError);
  // b_n^L minimizes the height in its class.
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : EnumerateClass(n, 2, Restriction::kFull)) {
      EXPECT_GE(ComputeHeights(g).height, ComputeHeights(BnL(n)).height);
    }
  }
}

TEST(GraphTest, ForestAndConstantPredicates) {
  EXPECT_TRUE(IsForest(BnL(3)));
  EXPECT_TRUE(IsZeroInDegree(B1Squared()));
  EXPECT_FALSE(IsZeroInDegree(BnL(2)));
  EXPECT_FALSE(IsForest(MakeGraph(2, {{Target::B(1), Target::B(2)},
                                      {Target::B(1), Target::V(1)},
                                      {Target::V(1), Target::V(2)}})));
}

TEST(GraphTest, CatalogNames) {
  EXPECT_EQ(catalog::ByName("b2L"), BnL(2));
  EXPECT_EQ(catalog::ByName("b1sq"), B1Squared());
  EXPECT_EQ(catalog::ByName("Gamma2"), catalog::T2L());
  EXPECT_EQ(catalog::ByName("b1sqR"), Pad(B1Squared(), PadSide::kLeft));
  EXPECT_THROW(catalog::ByName("b9Q"), std::invalid_argument);
  EXPECT_EQ(UnitGraph(3).n(), 0);
}

}  // namespace
}  // namespace graphstar
