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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "graphstar/catalog.hpp"
#include "graphstar/enumerate.hpp"
#include "graphstar/evaluator.hpp"
#include "graphstar/parallel.hpp"

namespace {

using namespace graphstar;

const std::vector<Polynomial>& Arguments() {
  static const std::vector<Polynomial> fs{ParsePolynomial("x1^3*x2 + x2^2*x3"), ParsePolynomial("x1*x2^2*x3^2 - x3"),
                                          ParsePolynomial("x1^2 + x2*x3^3")};
  return fs;
}

void BM_StateSumSerial(benchmark::State& state) {
  const Bivector alpha = Bivector::So3();
  const CanonicalGraph g = catalog::GammaN(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(StateSumSerial(g.graph(), alpha, Arguments()));
}

void BM_StateSumParallel(benchmark::State& state) {
  const Bivector alpha = Bivector::So3();
  const CanonicalGraph g = catalog::GammaN(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(StateSum(g.graph(), alpha, Arguments()));
  state.counters["threads"] = ThreadCount();
}

void BM_EnumerateSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(EnumerateClassSerial(n, 3, Restriction::kFull));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(EnumerateClassUncached(n, 3, Restriction::kFull));
  state.counters["threads"] = ThreadCount();
}

BENCHMARK(BM_StateSumSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StateSumParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
