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

#include "graphstar/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <string>

namespace graphstar {
namespace {

std::atomic<int> override_threads{0};

}  // namespace

int ThreadCount() {
  if (const int forced = override_threads.load(); forced > 0) return forced;
  if (const char* env = std::getenv("GRAPHSTAR_THREADS")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
      // Ignored: fall back to the OpenMP default.
    }
  }
  return omp_get_max_threads();
}

void SetThreadCount(int threads) { override_threads.store(threads > 0 ? threads : 0); }

}  // namespace graphstar
