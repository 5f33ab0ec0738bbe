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

#include "graphstar/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>

#include "graphstar/parallel.hpp"

namespace graphstar {
namespace {

// Every admissible graph has a topological labeling where vertex k only
// points at boundary points or at V(j) with j > k, so it suffices to let
// each vertex pick an unordered pair from those targets.
std::vector<std::vector<Leg>> PairChoices(int n, int m) {
  std::vector<std::vector<Leg>> choices(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    std::vector<Target> targets;
    for (int i = 1; i <= m; ++i) targets.push_back(Target::B(i));
    for (int j = k + 1; j <= n; ++j) targets.push_back(Target::V(j));
    for (size_t a = 0; a < targets.size(); ++a) {
      for (size_t b = a + 1; b < targets.size(); ++b) choices[static_cast<size_t>(k - 1)].push_back({targets[a], targets[b]});
    }
  }
  return choices;
}

std::vector<Leg> Decode(const std::vector<std::vector<Leg>>& choices, long long index) {
  std::vector<Leg> legs(choices.size());
  for (size_t k = choices.size(); k-- > 0;) {
    const long long base = static_cast<long long>(choices[k].size());
    legs[k] = choices[k][static_cast<size_t>(index % base)];
    index /= base;
  }
  return legs;
}

void CheckArgs(int n, int m) {
  if (n < 0) throw std::invalid_argument("internal vertex count must be non-negative");
  if (m < 1 || m > 3) throw std::invalid_argument("enumeration supports m in {1,2,3}, got " + std::to_string(m));
}

std::vector<CanonicalGraph> Collect(int n, int m, Restriction r, int threads) {
  CheckArgs(n, m);
  const auto choices = PairChoices(n, m);
  long long total = 1;
  for (const auto& c : choices) total *= static_cast<long long>(c.size());
  if (total == 0) return {};
  std::set<CanonicalGraph> found;
#pragma omp parallel num_threads(threads)
  {
    std::set<CanonicalGraph> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long idx = 0; idx < total; ++idx) {
      CanonicalGraph g = Canonicalize(AdmissibleGraph::Unchecked(m, Decode(choices, idx)));
      if (PassesRestriction(g, r)) local.insert(std::move(g));
    }
#pragma omp critical(graphstar_enumerate_merge)
    found.merge(local);
  }
  return {found.begin(), found.end()};
}

}  // namespace

Restriction ParseRestriction(const std::string& name) {
  if (name == "full") return Restriction::kFull;
  if (name == "forest") return Restriction::kForest;
  if (name == "constant" || name == "zero-in-degree") return Restriction::kZeroInDegree;
  throw std::invalid_argument("unknown restriction '" + name + "' (expected full, forest or constant)");
}

std::string RestrictionName(Restriction r) {
  switch (r) {
    case Restriction::kFull: return "full";
    case Restriction::kForest: return "forest";
    case Restriction::kZeroInDegree: return "constant";
  }
  return "full";
}

bool PassesRestriction(const CanonicalGraph& g, Restriction r) {
  switch (r) {
    case Restriction::kFull: return true;
    case Restriction::kForest: return IsForest(g);
    case Restriction::kZeroInDegree: return IsZeroInDegree(g);
  }
  return false;
}

std::vector<CanonicalGraph> EnumerateClass(int n, int m, Restriction r) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, Restriction>, std::vector<CanonicalGraph>> cache;
  const auto key = std::make_tuple(n, m, r);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<CanonicalGraph> result = EnumerateClassUncached(n, m, r);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(result)).first->second;
}

std::vector<CanonicalGraph> EnumerateClassUncached(int n, int m, Restriction r) {
  return Collect(n, m, r, ThreadCount());
}

std::vector<CanonicalGraph> EnumerateClassSerial(int n, int m, Restriction r) {
  CheckArgs(n, m);
  const auto choices = PairChoices(n, m);
  long long total = 1;
  for (const auto& c : choices) total *= static_cast<long long>(c.size());
  std::set<CanonicalGraph> found;
  for (long long idx = 0; idx < total; ++idx) {
    CanonicalGraph g = Canonicalize(AdmissibleGraph::Unchecked(m, Decode(choices, idx)));
    if (PassesRestriction(g, r)) found.insert(std::move(g));
  }
  return {found.begin(), found.end()};
}

}  // namespace graphstar
