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

#include "polynorm/polytope.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "polynorm/detail/parallel_for.hpp"
#include "polynorm/detail/scan.hpp"
#include "polynorm/errors.hpp"
#include "polynorm/rational.hpp"

namespace polynorm {

namespace {

void require_uniform(std::span<const LatticePoint> points) {
  if (points.empty()) throw InvalidInput("point list is empty");
  const std::size_t n = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != n) throw InvalidInput("points have differing coordinate lengths");
}

// Exact integer determinant by fraction-free (Bareiss) elimination.
Coord determinant(std::vector<std::vector<Coord>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Coord sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j])) / prev;
      }
    }
    prev = m[k][k];
  }
  return checked_mul(sign, m[n - 1][n - 1]);
}

// Primitive normal of the hyperplane through base and base + each row, or
// nothing when the rows are linearly dependent.
std::optional<LatticePoint> hyperplane_normal(const std::vector<LatticePoint>& rows, std::size_t n) {
  std::vector<Coord> normal(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Coord>> minor;
    minor.reserve(rows.size());
    for (const auto& r : rows) {
      std::vector<Coord> line;
      line.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) line.push_back(r[c]);
      minor.push_back(std::move(line));
    }
    const Coord det = determinant(std::move(minor));
    normal[col] = (col % 2 == 0) ? det : -det;
  }
  const Coord g = content(normal);
  if (g == 0) return std::nullopt;
  for (auto& c : normal) c /= g;
  return LatticePoint(std::move(normal));
}

std::vector<HalfSpace> enumerate_facets(const std::vector<LatticePoint>& pts, std::size_t n) {
  std::set<HalfSpace> found;
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::vector<LatticePoint> rows(n - 1);
  while (true) {
    const LatticePoint& base = pts[idx[0]];
    for (std::size_t i = 1; i < n; ++i) rows[i - 1] = pts[idx[i]] - base;
    if (auto normal = hyperplane_normal(rows, n)) {
      const Coord offset = dot(normal->coords(), base.coords());
      bool any_above = false, any_below = false;
      for (const auto& p : pts) {
        const Coord v = dot(normal->coords(), p.coords());
        any_above |= v > offset;
        any_below |= v < offset;
        if (any_above && any_below) break;
      }
      if (!(any_above && any_below)) {
        if (any_below) found.insert(HalfSpace{normal->scaled(-1), -offset});
        else found.insert(HalfSpace{*normal, offset});
      }
    }
    // next n-combination of pts.size() indices
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == pts.size() - n + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace

Polytope::Polytope(std::vector<LatticePoint> vertices, std::vector<HalfSpace> facets)
    : dim_(vertices.front().dim()), vertices_(std::move(vertices)), facets_(std::move(facets)) {
  box_lo_ = vertices_.front();
  box_hi_ = vertices_.front();
  for (const auto& v : vertices_) {
    for (std::size_t i = 0; i < dim_; ++i) {
      box_lo_[i] = std::min(box_lo_[i], v[i]);
      box_hi_[i] = std::max(box_hi_[i], v[i]);
    }
  }
  id_ = polytope_id(vertices_);
}

int affine_dim(std::span<const LatticePoint> points) {
  require_uniform(points);
  std::vector<LatticePoint> diffs;
  diffs.reserve(points.size());
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  if (diffs.empty()) return 0;
  return static_cast<int>(rank(to_rational_rows(diffs), points.front().dim()));
}

Polytope build_polytope(std::span<const LatticePoint> points) {
  require_uniform(points);
  const std::size_t n = points.front().dim();
  if (n == 0) throw InvalidInput("ambient dimension must be at least 1");
  std::vector<LatticePoint> pts(points.begin(), points.end());
  canonicalize(pts);
  const int d = affine_dim(pts);
  if (d != static_cast<int>(n)) throw NotFullDimensional(d, static_cast<int>(n));

  std::vector<HalfSpace> facets = enumerate_facets(pts, n);

  std::vector<LatticePoint> vertices;
  for (const auto& p : pts) {
    std::vector<LatticePoint> tight;
    for (const auto& h : facets)
      if (h.slack(p) == 0) tight.push_back(h.normal);
    if (tight.size() >= n && rank(to_rational_rows(tight), n) == n) vertices.push_back(p);
  }
  return Polytope(std::move(vertices), std::move(facets));
}

bool contains(const Polytope& p, const LatticePoint& x, Containment mode) {
  if (x.dim() != p.dim())
    throw InvalidInput("point " + x.to_string() + " has dimension " + std::to_string(x.dim()) +
                       ", polytope has dimension " + std::to_string(p.dim()));
  for (const auto& h : p.facets()) {
    const Coord s = h.slack(x);
    if (s < 0 || (mode == Containment::RelativeInterior && s == 0)) return false;
  }
  return true;
}

Polytope dilate(const Polytope& p, Coord k) {
  if (k <= 0) throw InvalidInput("dilation factor must be positive, got " + std::to_string(k));
  std::vector<LatticePoint> vertices;
  vertices.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) vertices.push_back(v.scaled(k));
  std::vector<HalfSpace> facets;
  facets.reserve(p.facets().size());
  for (const auto& h : p.facets()) facets.push_back(HalfSpace{h.normal, checked_mul(h.offset, k)});
  return Polytope(std::move(vertices), std::move(facets));
}

std::vector<LatticePoint> lattice_points(const Polytope& p, Containment mode) {
  const detail::RegionScanner scanner(detail::LinearRegion::from_polytope(p, mode));
  const Coord lo0 = p.box_lo()[0], hi0 = p.box_hi()[0];
  const std::size_t n = p.dim();
  std::vector<std::vector<LatticePoint>> slices(static_cast<std::size_t>(hi0 - lo0 + 1));
  detail::parallel_for(0, hi0 - lo0 + 1, 1, [&](std::ptrdiff_t s) {
    auto& out = slices[static_cast<std::size_t>(s)];
    scanner.scan_range(lo0 + s, lo0 + s, [&](std::span<Coord> x, Coord first, Coord last) {
      for (Coord t = first; t <= last; ++t) {
        x[n - 1] = t;
        out.emplace_back(std::vector<Coord>(x.begin(), x.end()));
      }
      return true;
    });
  });
  std::size_t total = 0;
  for (const auto& s : slices) total += s.size();
  std::vector<LatticePoint> points;
  points.reserve(total);
  for (auto& s : slices) std::move(s.begin(), s.end(), std::back_inserter(points));
  return points;
}

Count count_lattice_points(const Polytope& p, Containment mode) {
  const detail::RegionScanner scanner(detail::LinearRegion::from_polytope(p, mode));
  const Coord lo0 = p.box_lo()[0], hi0 = p.box_hi()[0];
  Count total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (Coord v = lo0; v <= hi0; ++v) {
    scanner.scan_range(v, v, [&](std::span<Coord>, Coord first, Coord last) {
      total += static_cast<Count>(last - first + 1);
      return true;
    });
  }
  return total;
}

std::optional<LatticePoint> first_lattice_point(const Polytope& p, Containment mode) {
  const detail::RegionScanner scanner(detail::LinearRegion::from_polytope(p, mode));
  std::optional<LatticePoint> found;
  scanner.scan([&](std::span<Coord> x, Coord first, Coord) {
    x[x.size() - 1] = first;
    found = LatticePoint(std::vector<Coord>(x.begin(), x.end()));
    return false;
  });
  return found;
}

std::string polytope_id(std::span<const LatticePoint> vertices) {
  // FNV-1a over the canonical text form.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& v : vertices) feed(v.to_string());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Polytope standard_simplex(std::size_t n) {
  std::vector<LatticePoint> pts{LatticePoint::zero(n)};
  for (std::size_t i = 0; i < n; ++i) {
    auto e = LatticePoint::zero(n);
    e[i] = 1;
    pts.push_back(e);
  }
  return build_polytope(pts);
}

Polytope unit_cube(std::size_t n) {
  std::vector<LatticePoint> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    auto p = LatticePoint::zero(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i) & 1;
    pts.push_back(p);
  }
  return build_polytope(pts);
}

Polytope reeve_simplex(Coord q) {
  if (q < 1) throw InvalidInput("Reeve simplex parameter must be positive");
  const std::vector<LatticePoint> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, q}};
  return build_polytope(pts);
}

}  // namespace polynorm
