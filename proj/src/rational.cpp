// Copyright 2026 The Polynorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polynorm/rational.hpp"

#include <stdexcept>

#include "polynorm/errors.hpp"

namespace polynorm {

std::string to_string(const Rational& q) { return q.get_str(); }

std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& e : m[row]) e *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m, std::size_t cols) { return row_reduce(m, cols).size(); }

std::optional<std::vector<Rational>> kernel_line(RationalMatrix m, std::size_t cols) {
  const auto pivots = row_reduce(m, cols);
  if (pivots.size() + 1 != cols) return std::nullopt;
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> v(cols, 0);
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_col];
  return v;
}

std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InvalidInput("solve_unique: row count mismatch");
  if (a.empty()) return std::nullopt;
  const std::size_t cols = a.front().size();
  RationalMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const auto pivots = row_reduce(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent
  if (pivots.size() != cols) return std::nullopt;                     // not unique
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < cols; ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

LatticePoint primitive_direction(std::span<const Rational> v) {
  mpz_class denom_lcm = 1;
  for (const auto& q : v) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const auto& q : v) {
    mpz_class z = q.get_num() * (denom_lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(z);
  }
  if (g == 0) throw InvalidInput("primitive_direction of the zero vector");
  std::vector<Coord> out;
  out.reserve(ints.size());
  for (auto& z : ints) {
    z /= g;
    if (!z.fits_slong_p()) throw std::overflow_error("primitive direction does not fit in 64 bits");
    out.push_back(z.get_si());
  }
  return LatticePoint(std::move(out));
}

RationalMatrix to_rational_rows(std::span<const LatticePoint> rows) {
  RationalMatrix m;
  m.reserve(rows.size());
  for (const auto& p : rows) {
    std::vector<Rational> row;
    row.reserve(p.dim());
    for (Coord c : p.coords()) row.emplace_back(static_cast<long>(c));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace polynorm
