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

#ifndef GRAPHSTAR_PARALLEL_HPP_
#define GRAPHSTAR_PARALLEL_HPP_

namespace graphstar {

// Thread budget for OpenMP regions: GRAPHSTAR_THREADS when set to a positive
// integer, otherwise the OpenMP default.
int ThreadCount();

// Overrides the budget for the calling process (tests and benchmarks).
// Zero restores the environment/default behaviour.
void SetThreadCount(int threads);

}  // namespace graphstar

#endif  // GRAPHSTAR_PARALLEL_HPP_
