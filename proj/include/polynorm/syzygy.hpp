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

#ifndef POLYNORM_SYZYGY_HPP_
#define POLYNORM_SYZYGY_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polynorm/polytope.hpp"

namespace polynorm {

// Homogenized lattice points (1, u), lexicographically ordered and distinct.
struct PointConfiguration {
  std::vector<LatticePoint> points;
  std::size_t ambient_dim = 0;  // n + 1
};

// Homogenizes the lattice points of ell * P.
PointConfiguration build_configuration(const Polytope& p, int ell);
PointConfiguration homogenize(std::span<const LatticePoint> affine_points);

// Nondecreasing indices into PointConfiguration::points.
using Multiset = std::vector<std::size_t>;

struct Fiber {
  LatticePoint target;
  std::vector<Multiset> elements;  // lexicographic by index sequence
};

// All size-d multisets of configuration points summing to target, where d
// is the target's first coordinate (d >= 2).
Fiber enumerate_fiber(const PointConfiguration& config, const LatticePoint& target);

// True iff b is obtained from a by replacing exactly two elements.
bool is_quadratic_move(const Multiset& a, const Multiset& b);

struct ProbeReport {
  int ell = 1;
  int cap = 2;
  bool connected = true;
  // Homogenized target of the first disconnected fiber in (degree, lex) order.
  std::optional<LatticePoint> witness_fiber;
  // Nonempty fibers examined per degree, starting at degree 2.
  std::vector<std::size_t> fibers_checked;

  std::string verdict() const;
  friend bool operator==(const ProbeReport&, const ProbeReport&) = default;
};

/// Degree-capped probe of quadratic generation for the embedding by ell*P:
/// every nonempty fiber of degree 2..cap must be connected under quadratic
/// moves. Degree-2 fibers are complete graphs. For d >= 3, once every
/// degree-(d-1) fiber is known to be connected, the fiber of b is connected
/// iff the points u with b - u reachable in degree d-1 form one component
/// when u and w are joined whenever b - u - w is reachable in degree d-2.
/// The probe stops at the first disconnected fiber.
ProbeReport n1_probe(const Polytope& p, int ell, int degree_cap);
ProbeReport n1_probe(const PointConfiguration& config, int ell, int degree_cap);

}  // namespace polynorm

#endif  // POLYNORM_SYZYGY_HPP_
