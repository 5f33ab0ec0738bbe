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

// Exact Gauss-Jordan elimination over the rationals.

#ifndef GRAPHSTAR_LINSOLVE_HPP_
#define GRAPHSTAR_LINSOLVE_HPP_

#include <vector>

#include "graphstar/rational.hpp"

namespace graphstar {

// Rows of A x = b. Each row holds `cols` coefficients.
struct LinearSystem {
  int cols = 0;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;

  void AddRow(std::vector<Rational> row, Rational rhs);
};

struct LinearSolution {
  bool feasible = true;
  int rank = 0;
  int nullity = 0;                // free variables
  std::vector<Rational> x;        // particular solution, free variables at 0
  std::vector<int> pivot_columns; // ascending
  // Row-reduced [A|b]: the `rank` pivot rows, then the remaining rows that
  // still touch a column (only possible with a pivot limit).
  std::vector<std::vector<Rational>> reduced;
};

// Only columns below pivot_limit may carry pivots (all columns when
// negative); the other columns then behave as parameters.
LinearSolution SolveExact(const LinearSystem& system, int pivot_limit = -1);

}  // namespace graphstar

#endif  // GRAPHSTAR_LINSOLVE_HPP_
