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

#include <gtest/gtest.h>

#include "polynorm/counting.hpp"
#include "polynorm/errors.hpp"
#include "polynorm/reference.hpp"
#include "test_support.hpp"

namespace polynorm {
namespace {

using testing::random_polytopes;
using testing::unit_square;

std::vector<Rational> q(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.emplace_back(x);
  return out;
}

// Expected polynomials and counts come from tests/oracles/brute_force.py.

TEST(Ehrhart, UnitSquare) { EXPECT_EQ(ehrhart(unit_square()).coeffs(), q({"1", "2", "1"})); }

TEST(Ehrhart, StandardTriangle) { EXPECT_EQ(ehrhart(standard_simplex(2)).coeffs(), q({"1", "3/2", "1/2"})); }

TEST(Ehrhart, ReeveSimplex) {
  const Polytope t2 = reeve_simplex(2);
  const auto poly = ehrhart(t2);
  EXPECT_EQ(poly.coeffs(), q({"1", "5/3", "1", "1/3"}));
  // box-scan counts at t = 1, 2
  EXPECT_EQ(poly(1), Rational(static_cast<long>(reference::lattice_points_box_scan(t2, Containment::Closed).size())));
  EXPECT_EQ(poly(2), 11);
  EXPECT_EQ(poly(1), 4);
}

TEST(Ehrhart, ToString) {
  EXPECT_EQ(ehrhart(reeve_simplex(2)).to_string(), "1/3t^3 + t^2 + 5/3t + 1");
  EXPECT_EQ(ehrhart(unit_square()).to_string(), "t^2 + 2t + 1");
}

TEST(DOfP, Examples) {
  const auto sq = d_of_p(unit_square());
  EXPECT_EQ(sq.d_of_p, 1);
  EXPECT_EQ(sq.codegree, 2);
  EXPECT_EQ(d_of_p(standard_simplex(2)).d_of_p, 2);
  EXPECT_EQ(d_of_p(standard_simplex(3)).d_of_p, 3);
  const auto t2 = d_of_p(reeve_simplex(2));
  EXPECT_EQ(t2.d_of_p, 1);
  EXPECT_EQ(t2.interior_counts, (std::vector<std::pair<int, Count>>{{1, 0}, {2, 1}, {3, 4}, {4, 11}}));
}

TEST(DOfP, ZeroWhenPHasInteriorPoint) {
  EXPECT_EQ(d_of_p(testing::triangle_with_interior_point()).d_of_p, 0);
  EXPECT_EQ(d_of_p(dilate(unit_square(), 2)).d_of_p, 0);
}

TEST(Reciprocity, Examples) {
  const auto sq = ehrhart(unit_square());
  EXPECT_EQ(sq(-1), 0);
  EXPECT_EQ(sq(-2), 1);
  EXPECT_TRUE(reciprocity_check(unit_square(), 3));
  EXPECT_TRUE(reciprocity_check(standard_simplex(3), 4));
  EXPECT_TRUE(reciprocity_check(reeve_simplex(2), 3));
  EXPECT_THROW(reciprocity_check(unit_square(), 0), InvalidInput);
}

TEST(Reciprocity, DetectsAWrongPolynomial) {
  EXPECT_FALSE(reciprocity_check(unit_square(), EhrhartPolynomial(q({"1", "2", "2"})), 2));
}

TEST(Counting, CorpusInvariants) {
  for (const auto& p : random_polytopes(3, {2, 3, 4}, 4, 12, 6)) {
    const int n = static_cast<int>(p.dim());
    const auto poly = ehrhart(p);
    EXPECT_EQ(poly.coeffs().front(), 1);
    EXPECT_GT(poly.coeffs().back(), 0);
    EXPECT_EQ(poly.degree(), p.dim());
    const int ks[] = {n + 1, n + 2};
    EXPECT_TRUE(extrapolation_check(p, poly, ks)) << p.id();
    EXPECT_TRUE(reciprocity_check(p, poly, n + 1)) << p.id();

    const auto profile = d_of_p(p);
    EXPECT_GE(profile.d_of_p, 0);
    EXPECT_LE(profile.d_of_p, n);
    EXPECT_EQ(profile.codegree, profile.d_of_p + 1);
    for (const auto& [k, c] : profile.interior_counts) EXPECT_EQ(c == 0, k <= profile.d_of_p) << "k=" << k;
  }
}

}  // namespace
}  // namespace polynorm
