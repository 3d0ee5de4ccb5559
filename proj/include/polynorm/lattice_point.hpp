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

#ifndef POLYNORM_LATTICE_POINT_HPP_
#define POLYNORM_LATTICE_POINT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polynorm {

using Coord = std::int64_t;
using Count = std::uint64_t;

// Overflow-checked integer helpers; throw std::overflow_error.
Coord checked_add(Coord a, Coord b);
Coord checked_sub(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);

// Floor and ceiling of a/b for b != 0.
constexpr Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
constexpr Coord ceil_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

/// A point of the integer lattice Z^n. Ordering is lexicographic on the
/// coordinate vector, which is the canonical order used everywhere.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<Coord> coords) : coords_(coords) {}

  static LatticePoint zero(std::size_t dim) { return LatticePoint(std::vector<Coord>(dim, 0)); }

  std::size_t dim() const { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Coord> coords() const { return coords_; }
  const std::vector<Coord>& vec() const { return coords_; }

  LatticePoint& operator+=(const LatticePoint& other);
  LatticePoint& operator-=(const LatticePoint& other);
  LatticePoint scaled(Coord k) const;

  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint& a, const LatticePoint& b) {
    return a.coords_ <=> b.coords_;
  }

  std::string to_string() const;

 private:
  std::vector<Coord> coords_;
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept;
};

Coord dot(std::span<const Coord> a, std::span<const Coord> b);

/// Inward facet halfspace {x : <normal, x> >= offset}; normal is primitive.
struct HalfSpace {
  LatticePoint normal;
  Coord offset = 0;

  Coord slack(const LatticePoint& x) const { return checked_sub(dot(normal.coords(), x.coords()), offset); }

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend auto operator<=>(const HalfSpace& a, const HalfSpace& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    return a.offset <=> b.offset;
  }
};

// gcd of the absolute values; 0 for the zero vector.
Coord content(std::span<const Coord> v);

// Sorts lexicographically and removes duplicates.
void canonicalize(std::vector<LatticePoint>& points);

}  // namespace polynorm

#endif  // POLYNORM_LATTICE_POINT_HPP_
