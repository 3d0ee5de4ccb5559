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

#include "polynorm/normality.hpp"

#include <algorithm>
#include <unordered_set>

#include "polynorm/counting.hpp"
#include "polynorm/detail/parallel_for.hpp"
#include "polynorm/detail/scan.hpp"
#include "polynorm/errors.hpp"

namespace polynorm {

namespace {

using PointSet = std::unordered_set<LatticePoint, LatticePointHash>;

constexpr std::size_t kBlock = std::size_t{1} << 14;
constexpr std::size_t kNoMissing = static_cast<std::size_t>(-1);

// Decides membership of points of mP in the m-fold sumset of L(P) one level
// at a time. z is in the m-fold sumset iff some x in L(P) has z - x in the
// (m-1)-fold sumset; candidates x are searched over P ∩ (z - (m-1)P).
class Decomposer {
 public:
  explicit Decomposer(const Polytope& p) : p_(p) { levels_.push_back(Level{true, {}}); }

  int known_levels() const { return static_cast<int>(levels_.size()); }

  // Requires levels 1..m-1 to be known. Records level m when the whole
  // level was examined.
  LevelCheck check_next(bool stop_at_first_missing) {
    const int m = known_levels() + 1;
    const auto pts = lattice_points(dilate(p_, m), Containment::Closed);
    std::vector<char> ok(pts.size(), 0);
    std::size_t missing = kNoMissing;
    for (std::size_t start = 0; start < pts.size(); start += kBlock) {
      const std::size_t end = std::min(pts.size(), start + kBlock);
      const auto lo = static_cast<std::ptrdiff_t>(start), hi = static_cast<std::ptrdiff_t>(end);
      detail::parallel_for(lo, hi, 64, [&](std::ptrdiff_t i) { ok[i] = decomposable(m, pts[i]) ? 1 : 0; });
      if (missing == kNoMissing) {
        for (std::size_t i = start; i < end; ++i) {
          if (!ok[i]) {
            missing = i;
            break;
          }
        }
      }
      if (missing != kNoMissing && stop_at_first_missing) return LevelCheck{false, pts[missing]};
    }
    if (missing == kNoMissing) {
      levels_.push_back(Level{true, {}});
      return LevelCheck{true, std::nullopt};
    }
    Level level{false, {}};
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (ok[i]) level.members.insert(pts[i]);
    levels_.push_back(std::move(level));
    return LevelCheck{false, pts[missing]};
  }

 private:
  struct Level {
    bool complete;  // every lattice point of jP is a sum of j points
    PointSet members;
  };

  bool member(int j, const LatticePoint& w) const {
    const Level& level = levels_[static_cast<std::size_t>(j - 1)];
    if (!level.complete) return level.members.contains(w);
    for (const auto& h : p_.facets())
      if (dot(h.normal.coords(), w.coords()) < checked_mul(h.offset, j)) return false;
    return true;
  }

  bool decomposable(int m, const LatticePoint& z) const {
    const std::size_t n = p_.dim();
    const Coord rest = m - 1;
    detail::LinearRegion region;
    region.dim = n;
    for (const auto& h : p_.facets()) {
      region.normals.insert(region.normals.end(), h.normal.coords().begin(), h.normal.coords().end());
      region.lower.push_back(h.offset);
      region.upper.push_back(checked_sub(dot(h.normal.coords(), z.coords()), checked_mul(rest, h.offset)));
    }
    region.box_lo.resize(n);
    region.box_hi.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      region.box_lo[i] = std::max(p_.box_lo()[i], checked_sub(z[i], checked_mul(rest, p_.box_hi()[i])));
      region.box_hi[i] = std::min(p_.box_hi()[i], checked_sub(z[i], checked_mul(rest, p_.box_lo()[i])));
      if (region.box_lo[i] > region.box_hi[i]) return false;
    }
    const bool lower_complete = levels_[static_cast<std::size_t>(m - 2)].complete;

    // Lattice points around z/m usually work; try them before a full scan.
    if (n <= 8) {
      LatticePoint x = LatticePoint::zero(n);
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) x[i] = floor_div(z[i], m) + static_cast<Coord>((mask >> i) & 1);
        if (region.contains(x.coords()) && (lower_complete || member(m - 1, z - x))) return true;
      }
    }

    const detail::RegionScanner scanner(region);
    bool found = false;
    scanner.scan([&](std::span<Coord> x, Coord first, Coord last) {
      if (lower_complete) {
        found = true;
        return false;
      }
      LatticePoint cand(std::vector<Coord>(x.begin(), x.end()));
      for (Coord t = first; t <= last; ++t) {
        cand[n - 1] = t;
        if (member(m - 1, z - cand)) {
          found = true;
          return false;
        }
      }
      return true;
    });
    return found;
  }

  const Polytope& p_;
  std::vector<Level> levels_;  // levels_[j-1] describes level j
};

}  // namespace

std::vector<LatticePoint> sumset_levels(std::span<const LatticePoint> points, int m) {
  if (m <= 0) throw InvalidInput("sumset level must be positive, got " + std::to_string(m));
  if (points.empty()) throw InvalidInput("sumset of an empty point set");
  std::vector<LatticePoint> base(points.begin(), points.end());
  canonicalize(base);
  std::vector<LatticePoint> current = base;
  for (int k = 2; k <= m; ++k) {
    PointSet next;
    next.reserve(current.size() * 2);
    for (const auto& s : current)
      for (const auto& p : base) next.insert(s + p);
    current.assign(next.begin(), next.end());
    std::sort(current.begin(), current.end());
  }
  return current;
}

LevelCheck is_normal_at_level(const Polytope& p, int m) {
  if (m < 1) throw InvalidInput("normality level must be positive, got " + std::to_string(m));
  if (m == 1) return {};
  Decomposer dec(p);
  while (dec.known_levels() + 1 < m) dec.check_next(false);
  return dec.check_next(true);
}

int default_normality_cap(std::size_t n) { return std::max(static_cast<int>(n) - 1, 2); }

NormalityReport is_normal(const Polytope& p, std::optional<int> cap) {
  const int use_cap = cap.value_or(default_normality_cap(p.dim()));
  if (use_cap < 2) throw InvalidInput("normality cap must be at least 2, got " + std::to_string(use_cap));
  NormalityReport report;
  report.polytope_id = p.id();
  report.cap_used = use_cap;
  Decomposer dec(p);
  for (int m = 2; m <= use_cap; ++m) {
    report.levels_checked.push_back(m);
    LevelCheck level = dec.check_next(true);
    if (!level.normal) {
      report.verdict = NormalityVerdict::NonNormal;
      report.witness = NormalityWitness{m, std::move(*level.witness)};
      break;
    }
  }
  return report;
}

bool verify_witness(const Polytope& p, const NormalityWitness& w) {
  if (w.level < 1) return false;
  if (!contains(dilate(p, w.level), w.point, Containment::Closed)) return false;
  const auto sums = sumset_levels(lattice_points(p, Containment::Closed), w.level);
  return !std::binary_search(sums.begin(), sums.end(), w.point);
}

int BoundReport::np_bound(int p) const {
  if (p < 0) throw InvalidInput("N_p index must be non-negative");
  return n - 1 + p;
}

BoundReport normality_bound(const Polytope& p) {
  BoundReport b;
  b.n = static_cast<int>(p.dim());
  b.d = d_of_p(p).d_of_p;
  b.corollary_bound = std::max(b.n - b.d, 1);
  b.classical_n0_bound = b.n >= 2 ? b.n - 1 : 1;
  return b;
}

int CorollaryVerification::violations() const {
  return static_cast<int>(std::count_if(levels.begin(), levels.end(), [](const auto& l) { return l.violation; }));
}

CorollaryVerification verify_corollary(const Polytope& p, const BoundReport& bounds, int extra_levels,
                                       std::optional<int> cap) {
  if (extra_levels < 0) throw InvalidInput("extra_levels must be non-negative");
  CorollaryVerification out;
  out.polytope_id = p.id();
  out.bounds = bounds;
  for (int ell = bounds.corollary_bound; ell <= bounds.corollary_bound + extra_levels; ++ell) {
    CorollaryLevel level;
    level.ell = ell;
    level.report = is_normal(dilate(p, ell), cap);
    level.violation = !level.report.normal();
    out.levels.push_back(std::move(level));
  }
  return out;
}

CorollaryVerification verify_corollary(const Polytope& p, int extra_levels, std::optional<int> cap) {
  return verify_corollary(p, normality_bound(p), extra_levels, cap);
}

int autoregularity_formula(const Polytope& p) { return static_cast<int>(p.dim()) - 1 - d_of_p(p).d_of_p; }

}  // namespace polynorm
