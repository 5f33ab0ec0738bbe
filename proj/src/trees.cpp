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

#include "graphstar/trees.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>

namespace graphstar {

// --- RootedTree -----------------------------------------------------------------

int RootedTree::NodeCount() const {
  int count = 1;
  for (const RootedTree& s : subtrees) count += s.NodeCount();
  return count;
}

void RootedTree::Canonicalize() {
  for (RootedTree& s : subtrees) s.Canonicalize();
  std::sort(leaves.begin(), leaves.end());
  std::sort(subtrees.begin(), subtrees.end());
}

bool operator==(const RootedTree& a, const RootedTree& b) {
  return a.leaves == b.leaves && a.subtrees == b.subtrees;
}

bool operator<(const RootedTree& a, const RootedTree& b) {
  if (a.leaves != b.leaves) return a.leaves < b.leaves;
  return std::lexicographical_compare(a.subtrees.begin(), a.subtrees.end(), b.subtrees.begin(), b.subtrees.end());
}

RootedTree MakeNode(std::vector<Leaf> leaves, std::vector<RootedTree> subtrees) {
  RootedTree t{std::move(leaves), std::move(subtrees)};
  t.Canonicalize();
  return t;
}

Forest MakeForest(std::vector<RootedTree> trees) {
  for (RootedTree& t : trees) t.Canonicalize();
  std::sort(trees.begin(), trees.end());
  return trees;
}

// --- text -------------------------------------------------------------------------

std::string ToString(const RootedTree& t) {
  std::string out = "(";
  bool first = true;
  for (Leaf l : t.leaves) {
    out += first ? "" : ",";
    out += static_cast<char>(l);
    first = false;
  }
  for (const RootedTree& s : t.subtrees) {
    out += first ? "" : ",";
    out += ToString(s);
    first = false;
  }
  return out + ")";
}

std::string ToString(const Forest& f) {
  std::string out = "[";
  for (size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + ToString(f[i]);
  return out + "]";
}

namespace {

class TreeScanner {
 public:
  explicit TreeScanner(std::string_view text) : text_(text) {}

  RootedTree Node() {
    Expect('(');
    RootedTree t;
    Child(t);
    while (Peek() == ',') {
      ++pos_;
      Child(t);
    }
    Expect(')');
    t.Canonicalize();
    return t;
  }

  Forest ParseForest() {
    Expect('[');
    std::vector<RootedTree> trees;
    if (Peek() != ']') {
      trees.push_back(Node());
      while (Peek() == ',') {
        ++pos_;
        trees.push_back(Node());
      }
    }
    Expect(']');
    return MakeForest(std::move(trees));
  }

  void Finish() {
    if (Peek() != '\0') Fail("trailing characters");
  }

 private:
  void Child(RootedTree& t) {
    const char c = Peek();
    if (c == 'L' || c == 'R' || c == '*') {
      ++pos_;
      t.leaves.push_back(static_cast<Leaf>(c));
    } else if (c == '(') {
      t.subtrees.push_back(Node());
    } else {
      Fail("expected L, R, * or '('");
    }
  }

  char Peek() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void Expect(char c) {
    if (Peek() != c) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void Fail(const std::string& what) {
    throw std::invalid_argument("tree parse error: " + what + " at position " + std::to_string(pos_));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

RootedTree ParseTree(std::string_view text) {
  TreeScanner s(text);
  RootedTree t = s.Node();
  s.Finish();
  return t;
}

Forest ParseForest(std::string_view text) {
  TreeScanner s(text);
  Forest f = s.ParseForest();
  s.Finish();
  return f;
}

// --- coproducts ----------------------------------------------------------------------

namespace {

// Pre-order node table of a tree.
struct FlatTree {
  std::vector<const RootedTree*> node;
  std::vector<int> parent;  // -1 for the root
  std::vector<std::vector<int>> children;

  explicit FlatTree(const RootedTree& t) { Visit(t, -1); }

  int Visit(const RootedTree& t, int par) {
    const int id = static_cast<int>(node.size());
    node.push_back(&t);
    parent.push_back(par);
    children.emplace_back();
    for (const RootedTree& s : t.subtrees) {
      const int child = Visit(s, id);
      children[static_cast<size_t>(id)].push_back(child);
    }
    return id;
  }

  int size() const { return static_cast<int>(node.size()); }

  // The tree at `id` with every node in `removed` replaced by a cut marker.
  RootedTree Rebuild(int id, const std::vector<bool>& removed) const {
    RootedTree out;
    out.leaves = node[static_cast<size_t>(id)]->leaves;
    for (int c : children[static_cast<size_t>(id)]) {
      if (removed[static_cast<size_t>(c)]) {
        out.leaves.push_back(Leaf::kCut);
      } else {
        out.subtrees.push_back(Rebuild(c, removed));
      }
    }
    out.Canonicalize();
    return out;
  }

  // Splits along `removed` (descendant-closed): trunk and pruned forests.
  std::pair<Forest, Forest> Split(const std::vector<bool>& removed) const {
    Forest trunk;
    Forest pruned;
    if (!removed[0]) trunk.push_back(Rebuild(0, removed));
    for (int v = 0; v < size(); ++v) {
      const int p = parent[static_cast<size_t>(v)];
      if (removed[static_cast<size_t>(v)] && (p < 0 || !removed[static_cast<size_t>(p)])) {
        pruned.push_back(*node[static_cast<size_t>(v)]);
      }
    }
    return {MakeForest(std::move(trunk)), MakeForest(std::move(pruned))};
  }
};

}  // namespace

TreeTensor CoproductCuts(const RootedTree& t) {
  const FlatTree flat(t);
  const int n = flat.size();
  if (n > 24) throw std::length_error("tree too large for cut enumeration");
  TreeTensor out;
  // Edge v (v >= 1) joins node v to its parent.
  const unsigned edges = 1u << (n - 1);
  for (unsigned mask = 0; mask < edges; ++mask) {
    auto is_cut = [&](int v) { return v >= 1 && (mask >> (v - 1) & 1u); };
    bool admissible = true;
    for (int v = 1; v < n && admissible; ++v) {
      if (!is_cut(v)) continue;
      for (int a = flat.parent[static_cast<size_t>(v)]; a >= 1; a = flat.parent[static_cast<size_t>(a)]) {
        if (is_cut(a)) admissible = false;
      }
    }
    if (!admissible) continue;
    std::vector<bool> removed(static_cast<size_t>(n), false);
    for (int v = 1; v < n; ++v) {
      const int p = flat.parent[static_cast<size_t>(v)];
      removed[static_cast<size_t>(v)] = is_cut(v) || removed[static_cast<size_t>(p)];
    }
    ++out[flat.Split(removed)];
  }
  ++out[{Forest{}, Forest{t}}];
  return out;
}

TreeTensor CoproductSubgraphs(const RootedTree& t) {
  const FlatTree flat(t);
  const int n = flat.size();
  if (n > 24) throw std::length_error("tree too large for subset enumeration");
  TreeTensor out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> in(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) in[static_cast<size_t>(v)] = (mask >> v & 1u) != 0;
    bool closed = true;
    for (int v = 0; v < n && closed; ++v) {
      if (!in[static_cast<size_t>(v)]) continue;
      for (int c : flat.children[static_cast<size_t>(v)]) {
        if (!in[static_cast<size_t>(c)]) closed = false;
      }
    }
    if (closed) ++out[flat.Split(in)];
  }
  return out;
}

std::vector<RootedTree> AllTrees(int nodes) {
  static std::recursive_mutex mu;
  static std::map<int, std::vector<RootedTree>> memo;
  if (nodes < 1) return {};
  std::lock_guard lock(mu);
  if (auto it = memo.find(nodes); it != memo.end()) return it->second;
  std::set<RootedTree> found;
  const std::vector<Leaf> labels{Leaf::kL, Leaf::kR};
  if (nodes == 1) {
    for (Leaf a : labels) {
      for (Leaf b : labels) found.insert(MakeNode({a, b}, {}));
    }
  } else {
    for (Leaf a : labels) {
      for (const RootedTree& s : AllTrees(nodes - 1)) found.insert(MakeNode({a}, {s}));
    }
    for (int k = 1; k < nodes - 1; ++k) {
      for (const RootedTree& s : AllTrees(k)) {
        for (const RootedTree& u : AllTrees(nodes - 1 - k)) found.insert(MakeNode({}, {s, u}));
      }
    }
  }
  return memo[nodes] = {found.begin(), found.end()};
}

// --- graphs <-> trees -----------------------------------------------------------------

Forest GraphToForest(const CanonicalGraph& g) {
  if (g.m() != 2) throw ArityError("tree correspondence needs m = 2");
  if (!IsForest(g)) throw GraphError("graph is not a forest: some internal vertex has two parents");
  const std::vector<int> indeg = g.graph().InternalInDegrees();
  std::function<RootedTree(int)> build = [&](int v) {
    RootedTree t;
    for (const Target& target : g.leg(v)) {
      if (target.is_internal()) {
        t.subtrees.push_back(build(target.index));
      } else {
        t.leaves.push_back(target.index == 1 ? Leaf::kL : Leaf::kR);
      }
    }
    t.Canonicalize();
    return t;
  };
  std::vector<RootedTree> trees;
  for (int v = 1; v <= g.n(); ++v) {
    if (indeg[static_cast<size_t>(v - 1)] == 0) trees.push_back(build(v));
  }
  return MakeForest(std::move(trees));
}

CanonicalGraph ForestToGraph(const Forest& f) {
  std::vector<Leg> legs;
  std::function<int(const RootedTree&)> place = [&](const RootedTree& t) {
    if (t.leaves.size() + t.subtrees.size() != 2) throw GraphError("tree node " + ToString(t) + " is not binary");
    const int id = static_cast<int>(legs.size()) + 1;
    legs.emplace_back();
    std::vector<Target> targets;
    for (Leaf l : t.leaves) {
      if (l == Leaf::kCut) throw GraphError("cut markers have no graph counterpart");
      targets.push_back(Target::B(l == Leaf::kL ? 1 : 2));
    }
    for (const RootedTree& s : t.subtrees) targets.push_back(Target::V(place(s)));
    legs[static_cast<size_t>(id - 1)] = {targets[0], targets[1]};
    return id;
  };
  for (const RootedTree& t : f) place(t);
  return MakeGraph(2, std::move(legs));
}

}  // namespace graphstar
