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

#include <algorithm>

#include "polynorm/errors.hpp"
#include "polynorm/normality.hpp"
#include "polynorm/reference.hpp"
#include "test_support.hpp"

namespace polynorm {
namespace {

using testing::random_polytopes;
using testing::unit_square;

TEST(Sumset, Examples) {
  EXPECT_EQ(sumset_levels(std::vector<LatticePoint>{{0, 0}, {1, 0}}, 2),
            (std::vector<LatticePoint>{{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_EQ(sumset_levels(lattice_points(unit_square(), Containment::Closed), 2),
            lattice_points(dilate(unit_square(), 2), Containment::Closed));
  const auto t2_sums = sumset_levels(reeve_simplex(2).vertices(), 2);
  EXPECT_EQ(t2_sums.size(), 10u);
  EXPECT_FALSE(std::binary_search(t2_sums.begin(), t2_sums.end(), LatticePoint{1, 1, 1}));
}

TEST(Sumset, Errors) {
  EXPECT_THROW(sumset_levels(std::vector<LatticePoint>{{0}}, 0), InvalidInput);
  EXPECT_THROW(sumset_levels(std::vector<LatticePoint>{}, 2), InvalidInput);
}

TEST(NormalAtLevel, Examples) {
  const auto sq = is_normal_at_level(unit_square(), 2);
  EXPECT_TRUE(sq.normal);
  EXPECT_FALSE(sq.witness);
  const auto t2 = is_normal_at_level(reeve_simplex(2), 2);
  EXPECT_FALSE(t2.normal);
  EXPECT_EQ(t2.witness, LatticePoint({1, 1, 1}));
  EXPECT_TRUE(is_normal_at_level(reeve_simplex(3), 1).normal);
  EXPECT_THROW(is_normal_at_level(unit_square(), 0), InvalidInput);
}

TEST(NormalAtLevel, HigherLevelOfNonNormalPolytope) {
  // Levels above a failing one need the explicit sumset of the level below.
  for (int q = 2; q <= 4; ++q) {
    const Polytope t = reeve_simplex(q);
    for (int m = 2; m <= 4; ++m) {
      const auto fast = is_normal_at_level(t, m);
      const auto slow = reference::is_normal_at_level_sumset(t, m);
      EXPECT_EQ(fast.normal, slow.normal) << "q=" << q << " m=" << m;
      EXPECT_EQ(fast.witness, slow.witness) << "q=" << q << " m=" << m;
    }
  }
}

TEST(NormalAtLevel, MatchesSumsetReferenceOnRandomPolytopes) {
  for (const auto& p : random_polytopes(5, {2, 3}, 3, 20, 5)) {
    for (int m = 2; m <= 3; ++m) {
      const auto fast = is_normal_at_level(p, m);
      const auto slow = reference::is_normal_at_level_sumset(p, m);
      ASSERT_EQ(fast.normal, slow.normal) << p.id() << " m=" << m;
      ASSERT_EQ(fast.witness, slow.witness) << p.id() << " m=" << m;
    }
  }
}

TEST(NormalAtLevel, FindsNonNormalRandomSimplices) {
  // Empty 3-simplices of larger volume are non-normal; make sure the kernel
  // and the reference agree on some failing cases, not only passing ones.
  int failures = 0;
  for (const auto& p : random_polytopes(17, {3}, 3, 60, 4)) {
    const auto fast = is_normal_at_level(p, 2);
    const auto slow = reference::is_normal_at_level_sumset(p, 2);
    ASSERT_EQ(fast.witness, slow.witness) << p.id();
    failures += !fast.normal;
  }
  EXPECT_GT(failures, 0);
}

TEST(IsNormal, Examples) {
  const auto sq = is_normal(unit_square());
  EXPECT_TRUE(sq.normal());
  EXPECT_EQ(sq.cap_used, 2);
  EXPECT_EQ(sq.levels_checked, std::vector<int>{2});

  const auto t2 = is_normal(reeve_simplex(2));
  EXPECT_EQ(t2.verdict, NormalityVerdict::NonNormal);
  ASSERT_TRUE(t2.witness);
  EXPECT_EQ(t2.witness->level, 2);
  EXPECT_EQ(t2.witness->point, LatticePoint({1, 1, 1}));
  EXPECT_TRUE(verify_witness(reeve_simplex(2), *t2.witness));

  EXPECT_TRUE(is_normal(dilate(reeve_simplex(2), 2)).normal());
  EXPECT_THROW(is_normal(unit_square(), 1), InvalidInput);
}

TEST(IsNormal, DefaultCap) {
  EXPECT_EQ(default_normality_cap(1), 2);
  EXPECT_EQ(default_normality_cap(2), 2);
  EXPECT_EQ(default_normality_cap(3), 2);
  EXPECT_EQ(default_normality_cap(4), 3);
}

TEST(VerifyWitness, RejectsBogusWitnesses) {
  const Polytope t2 = reeve_simplex(2);
  EXPECT_FALSE(verify_witness(t2, {2, LatticePoint{1, 1, 0}}));  // a sum e1 + e2
  EXPECT_FALSE(verify_witness(t2, {2, LatticePoint{5, 5, 5}}));  // outside 2T_2
}

TEST(Bounds, Examples) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto b = normality_bound(standard_simplex(n));
    EXPECT_EQ(b.d, static_cast<int>(n));
    EXPECT_EQ(b.corollary_bound, 1);
  }
  const auto t2 = normality_bound(reeve_simplex(2));
  EXPECT_EQ(t2.d, 1);
  EXPECT_EQ(t2.corollary_bound, 2);
  EXPECT_EQ(t2.classical_n0_bound, 2);
  const auto sq = normality_bound(unit_square());
  EXPECT_EQ(sq.corollary_bound, 1);
  EXPECT_EQ(sq.np_bound(1), 2);
  EXPECT_EQ(sq.np_bound(0), sq.classical_n0_bound);
  EXPECT_THROW(sq.np_bound(-1), InvalidInput);
}

TEST(VerifyCorollary, Examples) {
  const auto t2 = verify_corollary(reeve_simplex(2), 1);
  ASSERT_EQ(t2.levels.size(), 2u);
  EXPECT_EQ(t2.levels[0].ell, 2);
  EXPECT_EQ(t2.levels[1].ell, 3);
  EXPECT_EQ(t2.violations(), 0);

  const auto d3 = verify_corollary(standard_simplex(3), 2);
  ASSERT_EQ(d3.levels.size(), 3u);
  for (const auto& l : d3.levels) EXPECT_TRUE(l.report.normal());
  EXPECT_EQ(d3.levels.front().ell, 1);

  const auto sq = verify_corollary(unit_square(), 0);
  ASSERT_EQ(sq.levels.size(), 1u);
  EXPECT_EQ(sq.levels[0].ell, 1);
  EXPECT_FALSE(sq.levels[0].violation);
  EXPECT_THROW(verify_corollary(unit_square(), -1), InvalidInput);
}

TEST(VerifyCorollary, FlagsViolationsWhenForcedBelowTheBound) {
  // Feeding a wrong bound (l = 1 for T_2) must surface as a violation.
  BoundReport wrong = normality_bound(reeve_simplex(2));
  wrong.corollary_bound = 1;
  const auto v = verify_corollary(reeve_simplex(2), wrong, 0);
  EXPECT_EQ(v.violations(), 1);
}

TEST(Autoregularity, Formula) {
  EXPECT_EQ(autoregularity_formula(unit_square()), 0);
  EXPECT_EQ(autoregularity_formula(reeve_simplex(2)), 1);
  EXPECT_EQ(autoregularity_formula(standard_simplex(3)), -1);
}

TEST(NormalityProperties, SumsetInsideDilateAndWitnessesSound) {
  for (const auto& p : random_polytopes(23, {2, 3}, 3, 10, 5)) {
    const auto pts = lattice_points(p, Containment::Closed);
    for (int m = 1; m <= 3; ++m) {
      for (const auto& s : sumset_levels(pts, m)) ASSERT_TRUE(contains(dilate(p, m), s, Containment::Closed));
    }
    EXPECT_TRUE(is_normal_at_level(p, 1).normal);
    const auto r = is_normal(p, 3);
    if (r.witness) EXPECT_TRUE(verify_witness(p, *r.witness)) << p.id();
  }
}

TEST(NormalityProperties, DimensionTwoIsNormal) {
  for (const auto& p : random_polytopes(29, {2}, 4, 40, 6)) EXPECT_TRUE(is_normal(p, 4).normal()) << p.id();
}

}  // namespace
}  // namespace polynorm
