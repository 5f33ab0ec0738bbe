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

// Binary rooted trees whose leaves carry L or R, forests of them, the
// Connes-Kreimer coproduct in cut form and in subgraph form, and the
// correspondence with forest graphs on two boundary points.
//
// Text: a node is "(A,B)" with A, B nodes or leaves L, R; "*" marks the
// place of a removed subtree in a trunk. Forests: "[t1,t2,...]".

#ifndef GRAPHSTAR_TREES_HPP_
#define GRAPHSTAR_TREES_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphstar/graph.hpp"

namespace graphstar {

enum class Leaf : char { kL = 'L', kR = 'R', kCut = '*' };

// A node: its leaf children and its subtree children, each kept sorted.
// Binary nodes have leaves.size() + subtrees.size() == 2.
struct RootedTree {
  std::vector<Leaf> leaves;
  std::vector<RootedTree> subtrees;

  int NodeCount() const;
  // Sorts children recursively.
  void Canonicalize();
};

bool operator==(const RootedTree& a, const RootedTree& b);
bool operator<(const RootedTree& a, const RootedTree& b);

RootedTree MakeNode(std::vector<Leaf> leaves, std::vector<RootedTree> subtrees);

// Sorted multiset of trees.
using Forest = std::vector<RootedTree>;
Forest MakeForest(std::vector<RootedTree> trees);

std::string ToString(const RootedTree& t);
std::string ToString(const Forest& f);
RootedTree ParseTree(std::string_view text);
Forest ParseForest(std::string_view text);

// (trunk, pruned) -> multiplicity
using TreeTensor = std::map<std::pair<Forest, Forest>, int>;

// Admissible edge cuts: no cut edge lies above another. The empty cut gives
// t (x) 1; the total cut gives 1 (x) t.
TreeTensor CoproductCuts(const RootedTree& t);
// Descendant-closed node subsets gamma: (t / gamma) (x) gamma.
TreeTensor CoproductSubgraphs(const RootedTree& t);

// Every distinct binary tree with exactly `nodes` nodes and leaves from {L,R}.
std::vector<RootedTree> AllTrees(int nodes);

// Forest graph (m = 2) -> forest of trees and back. Throws GraphError for a
// non-forest graph, a node with two equal leaves, or a cut marker.
Forest GraphToForest(const CanonicalGraph& g);
CanonicalGraph ForestToGraph(const Forest& f);

}  // namespace graphstar

#endif  // GRAPHSTAR_TREES_HPP_
