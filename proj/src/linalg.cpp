/*
 * Copyright 2026 The sympair Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "sympair/linalg.hpp"

#include <utility>

namespace sympair {

Echelon row_reduce(const Field& field, std::vector<std::vector<Elem>> m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (const auto& r : m) {
    if (r.size() != cols) throw Error("row_reduce: ragged matrix");
  }
  Echelon e;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == Field::zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Elem inv = field.inv(m[row][c]);
    for (std::size_t cc = c; cc < cols; ++cc) m[row][cc] = field.mul(m[row][cc], inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == Field::zero()) continue;
      const Elem f = m[r][c];
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] = field.sub(m[r][cc], field.mul(f, m[row][cc]));
    }
    e.pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  e.rows = std::move(m);
  return e;
}

std::size_t rank(const Field& field, std::vector<std::vector<Elem>> rows) {
  return row_reduce(field, std::move(rows)).pivots.size();
}

std::vector<std::vector<Elem>> kernel_basis(const Field& field, const Echelon& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Elem> v(cols, Field::zero());
    v[f] = Field::one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = field.neg(e.rows[i][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace sympair
