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

#include "polynorm/errors.hpp"
#include "polynorm/reference.hpp"
#include "polynorm/syzygy.hpp"
#include "test_support.hpp"

namespace polynorm {
namespace {

using testing::random_polytopes;
using testing::unit_square;

std::vector<LatticePoint> materialize(const PointConfiguration& c, const Multiset& m) {
  std::vector<LatticePoint> out;
  for (auto i : m) out.push_back(c.points[i]);
  return out;
}

TEST(Configuration, Examples) {
  const auto sq1 = build_configuration(unit_square(), 1);
  EXPECT_EQ(sq1.points.size(), 4u);
  EXPECT_EQ(sq1.ambient_dim, 3u);
  for (const auto& pt : sq1.points) EXPECT_EQ(pt[0], 1);
  EXPECT_EQ(build_configuration(unit_square(), 2).points.size(), 9u);
  EXPECT_EQ(build_configuration(standard_simplex(2), 1).points.size(), 3u);
  EXPECT_THROW(build_configuration(unit_square(), 0), InvalidInput);
}

TEST(Fiber, Examples) {
  const auto sq = build_configuration(unit_square(), 1);
  const auto f = enumerate_fiber(sq, {2, 1, 1});
  ASSERT_EQ(f.elements.size(), 2u);
  EXPECT_EQ(materialize(sq, f.elements[0]), (std::vector<LatticePoint>{{1, 0, 0}, {1, 1, 1}}));
  EXPECT_EQ(materialize(sq, f.elements[1]), (std::vector<LatticePoint>{{1, 0, 1}, {1, 1, 0}}));
  EXPECT_TRUE(enumerate_fiber(sq, {2, 3, 0}).elements.empty());

  const auto tri = build_configuration(standard_simplex(2), 1);
  const auto g = enumerate_fiber(tri, {2, 1, 0});
  ASSERT_EQ(g.elements.size(), 1u);
  EXPECT_EQ(materialize(tri, g.elements[0]), (std::vector<LatticePoint>{{1, 0, 0}, {1, 1, 0}}));
}

TEST(Fiber, Errors) {
  const auto sq = build_configuration(unit_square(), 1);
  EXPECT_THROW(enumerate_fiber(sq, {2, 1}), InvalidInput);
  EXPECT_THROW(enumerate_fiber(sq, {1, 1, 1}), InvalidInput);
}

TEST(Fiber, ElementsSumToTarget) {
  const auto c = build_configuration(reeve_simplex(2), 2);
  for (const auto& target : sumset_levels(c.points, 3)) {
    const auto f = enumerate_fiber(c, target);
    ASSERT_FALSE(f.elements.empty());
    for (const auto& e : f.elements) {
      LatticePoint s = LatticePoint::zero(c.ambient_dim);
      for (const auto& p : materialize(c, e)) s += p;
      EXPECT_EQ(s, target);
    }
  }
}

TEST(QuadraticMove, Definition) {
  EXPECT_TRUE(is_quadratic_move({0, 3}, {1, 2}));
  EXPECT_TRUE(is_quadratic_move({0, 0, 5}, {1, 2, 5}));
  EXPECT_FALSE(is_quadratic_move({0, 1, 2}, {0, 1, 2}));
  EXPECT_FALSE(is_quadratic_move({0, 1, 2}, {3, 4, 5}));
}

TEST(QuadraticMove, DegreeTwoFibersAreComplete) {
  const auto c = build_configuration(unit_square(), 2);
  for (const auto& target : sumset_levels(c.points, 2)) {
    const auto f = enumerate_fiber(c, target);
    for (const auto& a : f.elements)
      for (const auto& b : f.elements)
        if (a != b) EXPECT_TRUE(is_quadratic_move(a, b));
  }
}

// Verdicts and fiber counts from tests/oracles/brute_force.py.
TEST(Probe, Examples) {
  const auto sq = n1_probe(unit_square(), 1, 4);
  EXPECT_TRUE(sq.connected);
  EXPECT_EQ(sq.verdict(), "connected-up-to-cap");
  EXPECT_EQ(sq.fibers_checked, (std::vector<std::size_t>{9, 16, 25}));
  EXPECT_EQ(n1_probe(unit_square(), 2, 4).fibers_checked, (std::vector<std::size_t>{25, 49, 81}));

  const auto tri = n1_probe(standard_simplex(2), 1, 3);
  EXPECT_TRUE(tri.connected);
  EXPECT_EQ(tri.fibers_checked, (std::vector<std::size_t>{6, 10}));
  EXPECT_THROW(n1_probe(unit_square(), 1, 1), InvalidInput);
}

TEST(Probe, ReeveBaseline) {
  const auto r = n1_probe(reeve_simplex(2), 2, 3);
  EXPECT_TRUE(r.connected);
  EXPECT_EQ(r.fibers_checked, (std::vector<std::size_t>{45, 119}));
}

TEST(Probe, CubicRelationIsDetected) {
  // x_a x_b x_c = x_0^3 for the three boundary points around the origin.
  const auto r = n1_probe(testing::triangle_with_interior_point(), 1, 4);
  EXPECT_FALSE(r.connected);
  EXPECT_EQ(r.verdict(), "disconnected");
  EXPECT_EQ(r.witness_fiber, LatticePoint({3, 0, 0}));
  EXPECT_EQ(r.fibers_checked, (std::vector<std::size_t>{10, 19}));
}

TEST(Probe, WitnessPersistsAtHigherCaps) {
  const auto tri = testing::triangle_with_interior_point();
  const auto at3 = n1_probe(tri, 1, 3);
  for (int cap = 4; cap <= 6; ++cap) EXPECT_EQ(n1_probe(tri, 1, cap).witness_fiber, at3.witness_fiber);
}

TEST(Probe, LiftedCheckMatchesExplicitFiberGraphs) {
  std::vector<PointConfiguration> configs;
  configs.push_back(homogenize(lattice_points(testing::triangle_with_interior_point(), Containment::Closed)));
  // Non-polytopal configuration with a gap: 0, 1, 3 on a line.
  configs.push_back(homogenize(std::vector<LatticePoint>{{0}, {1}, {3}}));
  for (const auto& p : random_polytopes(59, {2}, 3, 8, 4)) configs.push_back(build_configuration(p, 1));
  for (const auto& p : random_polytopes(61, {3}, 2, 6, 4)) configs.push_back(build_configuration(p, 1));
  int disconnected = 0;
  for (const auto& c : configs) {
    const auto fast = n1_probe(c, 1, 4);
    const auto slow = reference::n1_probe_explicit(c, 1, 4);
    EXPECT_EQ(fast, slow);
    disconnected += !fast.connected;
  }
  EXPECT_GE(disconnected, 2);
}

TEST(Probe, PolygonConfigurationsAreQuadratic) {
  for (const auto& p : random_polytopes(67, {2}, 4, 15, 6)) {
    const auto boundary = lattice_points(p, Containment::Closed).size() -
                          lattice_points(p, Containment::RelativeInterior).size();
    if (boundary > 3) EXPECT_TRUE(n1_probe(p, 1, 4).connected) << p.id();
    EXPECT_TRUE(n1_probe(p, 2, 4).connected) << p.id();
  }
}

}  // namespace
}  // namespace polynorm
