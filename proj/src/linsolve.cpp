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

#include "graphstar/linsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphstar {

void LinearSystem::AddRow(std::vector<Rational> row, Rational rhs) {
  if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("row width does not match the column count");
  a.push_back(std::move(row));
  b.push_back(std::move(rhs));
}

LinearSolution SolveExact(const LinearSystem& system, int pivot_limit) {
  const int cols = system.cols;
  const int limit = pivot_limit < 0 ? cols : std::min(pivot_limit, cols);
  std::vector<std::vector<Rational>> m;
  for (size_t r = 0; r < system.a.size(); ++r) {
    std::vector<Rational> row = system.a[r];
    row.push_back(system.b[r]);
    m.push_back(std::move(row));
  }
  LinearSolution sol;
  size_t pivot_row = 0;
  for (int c = 0; c < limit && pivot_row < m.size(); ++c) {
    size_t found = pivot_row;
    while (found < m.size() && m[found][static_cast<size_t>(c)] == 0) ++found;
    if (found == m.size()) continue;
    std::swap(m[found], m[pivot_row]);
    const Rational inv = 1 / m[pivot_row][static_cast<size_t>(c)];
    for (Rational& v : m[pivot_row]) v *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == pivot_row || m[r][static_cast<size_t>(c)] == 0) continue;
      const Rational f = m[r][static_cast<size_t>(c)];
      for (size_t k = 0; k <= static_cast<size_t>(cols); ++k) m[r][k] -= f * m[pivot_row][k];
    }
    sol.pivot_columns.push_back(c);
    ++pivot_row;
  }
  sol.rank = static_cast<int>(pivot_row);
  sol.nullity = cols - sol.rank;
  std::vector<std::vector<Rational>> residual;
  for (size_t r = pivot_row; r < m.size(); ++r) {
    const bool touches = std::any_of(m[r].begin(), m[r].end() - 1, [](const Rational& v) { return v != 0; });
    if (touches) {
      residual.push_back(m[r]);
    } else if (m[r][static_cast<size_t>(cols)] != 0) {
      sol.feasible = false;
    }
  }
  sol.x.assign(static_cast<size_t>(cols), Rational(0));
  if (sol.feasible) {
    for (size_t r = 0; r < pivot_row; ++r) sol.x[static_cast<size_t>(sol.pivot_columns[r])] = m[r][static_cast<size_t>(cols)];
  }
  m.resize(pivot_row);
  for (auto& row : residual) m.push_back(std::move(row));
  sol.reduced = std::move(m);
  return sol;
}

}  // namespace graphstar
