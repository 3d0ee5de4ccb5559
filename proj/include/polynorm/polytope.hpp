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

#ifndef POLYNORM_POLYTOPE_HPP_
#define POLYNORM_POLYTOPE_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polynorm/lattice_point.hpp"

namespace polynorm {

enum class Containment { Closed, RelativeInterior };

/// A full-dimensional lattice polytope in Z^n, stored as its canonical
/// (lexicographically sorted) vertex list together with its inward facet
/// halfspaces. Instances are immutable.
class Polytope {
 public:
  std::size_t dim() const { return dim_; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& facets() const { return facets_; }
  const LatticePoint& box_lo() const { return box_lo_; }
  const LatticePoint& box_hi() const { return box_hi_; }
  // Stable 64-bit hash of the canonical vertex list, as 16 hex digits.
  const std::string& id() const { return id_; }

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  friend Polytope build_polytope(std::span<const LatticePoint> points);
  friend Polytope dilate(const Polytope& p, Coord k);

  Polytope(std::vector<LatticePoint> vertices, std::vector<HalfSpace> facets);

  std::size_t dim_ = 0;
  std::vector<LatticePoint> vertices_;
  std::vector<HalfSpace> facets_;
  LatticePoint box_lo_;
  LatticePoint box_hi_;
  std::string id_;
};

// Dimension of the affine span, computed over the rationals.
int affine_dim(std::span<const LatticePoint> points);

// Convex hull of the points. Facets come from every n-subset of the input
// whose hyperplane supports the point set; non-extreme points are dropped.
// Throws NotFullDimensional for lower-dimensional input.
Polytope build_polytope(std::span<const LatticePoint> points);

bool contains(const Polytope& p, const LatticePoint& x, Containment mode);

Polytope dilate(const Polytope& p, Coord k);

// All lattice points of P (or its interior), lexicographically ordered.
std::vector<LatticePoint> lattice_points(const Polytope& p, Containment mode);
Count count_lattice_points(const Polytope& p, Containment mode);
// Lexicographically first lattice point, if any.
std::optional<LatticePoint> first_lattice_point(const Polytope& p, Containment mode);

std::string polytope_id(std::span<const LatticePoint> vertices);

// Fixtures used by tests, the corpus and the CLI.
Polytope standard_simplex(std::size_t n);
Polytope unit_cube(std::size_t n);
// conv{0, e1, e2, e1 + e2 + q e3}
Polytope reeve_simplex(Coord q);

}  // namespace polynorm

#endif  // POLYNORM_POLYTOPE_HPP_
