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

#include "polynorm/detail/scan.hpp"

#include <algorithm>
#include <stdexcept>

#include "polynorm/errors.hpp"

namespace polynorm::detail {

namespace {

using Wide = __int128;

constexpr Wide kSafeMagnitude = Wide(1) << 61;

Wide wabs(Wide v) { return v < 0 ? -v : v; }

}  // namespace

bool LinearRegion::contains(std::span<const Coord> x) const {
  if (x.size() != dim) throw InvalidInput("region membership: dimension mismatch");
  for (std::size_t i = 0; i < dim; ++i)
    if (x[i] < box_lo[i] || x[i] > box_hi[i]) return false;
  for (std::size_t f = 0; f < rows(); ++f) {
    const Coord s = dot(row(f), x);
    if (s < lower[f]) return false;
    if (upper[f] != kUnbounded && s > upper[f]) return false;
  }
  return true;
}

LinearRegion LinearRegion::from_polytope(const Polytope& p, Containment mode) {
  LinearRegion r;
  r.dim = p.dim();
  for (const auto& h : p.facets()) {
    r.normals.insert(r.normals.end(), h.normal.coords().begin(), h.normal.coords().end());
    // Strict inequality on integers: <a,x> > b  <=>  <a,x> >= b + 1.
    r.lower.push_back(mode == Containment::Closed ? h.offset : checked_add(h.offset, 1));
    r.upper.push_back(kUnbounded);
  }
  r.box_lo = p.box_lo().vec();
  r.box_hi = p.box_hi().vec();
  return r;
}

RegionScanner::RegionScanner(const LinearRegion& region) : region_(region) {
  const std::size_t n = region_.dim;
  const std::size_t f_count = region_.rows();
  if (n == 0) throw InvalidInput("cannot scan a zero-dimensional region");
  if (region_.box_lo.size() != n || region_.box_hi.size() != n || region_.normals.size() != n * f_count ||
      region_.upper.size() != f_count)
    throw InvalidInput("malformed linear region");

  suffix_min_.assign((n + 1) * f_count, 0);
  suffix_max_.assign((n + 1) * f_count, 0);
  for (std::size_t f = 0; f < f_count; ++f) {
    Wide lo_acc = 0, hi_acc = 0, abs_acc = 0;
    for (std::size_t j = n; j-- > 0;) {
      const Wide a = region_.normals[f * n + j];
      const Wide p = a * region_.box_lo[j];
      const Wide q = a * region_.box_hi[j];
      lo_acc += std::min(p, q);
      hi_acc += std::max(p, q);
      abs_acc += std::max(wabs(p), wabs(q));
      suffix_min_[j * f_count + f] = static_cast<Coord>(lo_acc);
      suffix_max_[j * f_count + f] = static_cast<Coord>(hi_acc);
    }
    Wide bound = abs_acc + wabs(region_.lower[f]);
    if (region_.upper[f] != kUnbounded) bound += wabs(region_.upper[f]);
    if (bound >= kSafeMagnitude) throw std::overflow_error("lattice scan exceeds the 64-bit safe range");
  }
}

bool RegionScanner::last_interval(const Coord* partial, Coord& first, Coord& last) const {
  const std::size_t n = region_.dim;
  const std::size_t j = n - 1;
  first = region_.box_lo[j];
  last = region_.box_hi[j];
  for (std::size_t f = 0; f < region_.rows(); ++f) {
    const Coord a = region_.normals[f * n + j];
    const Coord s = partial[f];
    const bool has_upper = region_.upper[f] != kUnbounded;
    if (a == 0) {
      if (s < region_.lower[f] || (has_upper && s > region_.upper[f])) return false;
      continue;
    }
    const Coord need = region_.lower[f] - s;
    if (a > 0) {
      first = std::max(first, ceil_div(need, a));
    } else {
      last = std::min(last, floor_div(need, a));
    }
    if (has_upper) {
      const Coord room = region_.upper[f] - s;
      if (a > 0) {
        last = std::min(last, floor_div(room, a));
      } else {
        first = std::max(first, ceil_div(room, a));
      }
    }
    if (first > last) return false;
  }
  return first <= last;
}

}  // namespace polynorm::detail
