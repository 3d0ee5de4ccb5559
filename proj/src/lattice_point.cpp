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

#include "polynorm/lattice_point.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polynorm/errors.hpp"

namespace polynorm {

NotFullDimensional::NotFullDimensional(int actual_dim, int ambient_dim)
    : InvalidInput("polytope is not full-dimensional: affine dimension " +
                   std::to_string(actual_dim) + " in ambient dimension " +
                   std::to_string(ambient_dim)),
      actual_dim_(actual_dim),
      ambient_dim_(ambient_dim) {}

Coord checked_add(Coord a, Coord b) {
  Coord r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Coord checked_sub(Coord a, Coord b) {
  Coord r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

Coord checked_mul(Coord a, Coord b) {
  Coord r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other) {
  if (other.dim() != dim()) throw InvalidInput("lattice point dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], other.coords_[i]);
  return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& other) {
  if (other.dim() != dim()) throw InvalidInput("lattice point dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_sub(coords_[i], other.coords_[i]);
  return *this;
}

LatticePoint LatticePoint::scaled(Coord k) const {
  LatticePoint r = *this;
  for (auto& c : r.coords_) c = checked_mul(c, k);
  return r;
}

std::string LatticePoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Coord c : p.coords()) {
    h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

Coord dot(std::span<const Coord> a, std::span<const Coord> b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch in inner product");
  Coord s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Coord content(std::span<const Coord> v) {
  Coord g = 0;
  for (Coord c : v) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

void canonicalize(std::vector<LatticePoint>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

}  // namespace polynorm
