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

#ifndef POLYNORM_DETAIL_SCAN_HPP_
#define POLYNORM_DETAIL_SCAN_HPP_

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "polynorm/lattice_point.hpp"
#include "polynorm/polytope.hpp"

namespace polynorm::detail {

inline constexpr Coord kUnbounded = std::numeric_limits<Coord>::max();

// Integer points x in a box with lower_f <= <a_f, x> <= upper_f for every row f.
struct LinearRegion {
  std::size_t dim = 0;
  std::vector<Coord> normals;  // row-major, rows() x dim
  std::vector<Coord> lower;
  std::vector<Coord> upper;  // kUnbounded when a row has no upper bound
  std::vector<Coord> box_lo;
  std::vector<Coord> box_hi;

  std::size_t rows() const { return lower.size(); }
  std::span<const Coord> row(std::size_t f) const { return {normals.data() + f * dim, dim}; }
  bool contains(std::span<const Coord> x) const;

  static LinearRegion from_polytope(const Polytope& p, Containment mode);
};

/// Enumerates the integer points of a LinearRegion in lexicographic order.
/// Prefixes are pruned with interval bounds over the remaining box, and the
/// last coordinate is handled in closed form, so the visitor receives runs
/// (prefix, first, last) where x[dim-1] ranges over [first, last].
class RegionScanner {
 public:
  // Throws std::overflow_error if partial sums could leave the int64 range.
  explicit RegionScanner(const LinearRegion& region);

  const LinearRegion& region() const { return region_; }

  // visit(std::span<Coord> x, Coord first, Coord last) -> bool; returning
  // false stops the scan. The last slot of x is left for the caller.
  // Returns false iff the visitor stopped the scan.
  template <class Visit>
  bool scan(Visit&& visit) const {
    return scan_range(region_.box_lo[0], region_.box_hi[0], visit);
  }

  // Same, with the first coordinate restricted to [lo0, hi0].
  template <class Visit>
  bool scan_range(Coord lo0, Coord hi0, Visit&& visit) const {
    const std::size_t n = region_.dim;
    const std::size_t f_count = region_.rows();
    for (std::size_t i = 0; i < n; ++i)
      if (region_.box_lo[i] > region_.box_hi[i]) return true;
    std::vector<Coord> x(n, 0);
    std::vector<Coord> sums((n + 1) * f_count, 0);
    if (n == 1) {
      Coord first, last;
      if (!last_interval(sums.data(), first, last)) return true;
      first = std::max(first, lo0);
      last = std::min(last, hi0);
      if (first > last) return true;
      return visit(std::span<Coord>(x), first, last);
    }
    return descend(0, lo0, hi0, x, sums, visit);
  }

 private:
  template <class Visit>
  bool descend(std::size_t depth, Coord lo, Coord hi, std::vector<Coord>& x, std::vector<Coord>& sums,
               Visit& visit) const {
    const std::size_t n = region_.dim;
    const std::size_t f_count = region_.rows();
    const Coord* cur = sums.data() + depth * f_count;
    Coord* next = sums.data() + (depth + 1) * f_count;
    for (Coord v = lo; v <= hi; ++v) {
      x[depth] = v;
      bool feasible = true;
      for (std::size_t f = 0; f < f_count; ++f) {
        next[f] = cur[f] + region_.normals[f * n + depth] * v;
        if (next[f] + suffix_max_[(depth + 1) * f_count + f] < region_.lower[f] ||
            (region_.upper[f] != kUnbounded && next[f] + suffix_min_[(depth + 1) * f_count + f] > region_.upper[f]))
          feasible = false;
      }
      if (!feasible) continue;
      if (depth + 2 == n) {
        Coord first, last;
        if (!last_interval(next, first, last)) continue;
        if (!visit(std::span<Coord>(x), first, last)) return false;
      } else if (!descend(depth + 1, region_.box_lo[depth + 1], region_.box_hi[depth + 1], x, sums, visit)) {
        return false;
      }
    }
    return true;
  }

  bool last_interval(const Coord* partial, Coord& first, Coord& last) const;

  LinearRegion region_;
  // suffix_min_[j * rows + f] = min over the box of sum_{i >= j} a_fi x_i.
  std::vector<Coord> suffix_min_;
  std::vector<Coord> suffix_max_;
};

}  // namespace polynorm::detail

#endif  // POLYNORM_DETAIL_SCAN_HPP_
