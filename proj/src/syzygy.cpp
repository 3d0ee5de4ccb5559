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

#include "polynorm/syzygy.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "polynorm/detail/parallel_for.hpp"
#include "polynorm/errors.hpp"

namespace polynorm {

namespace {

using PointSet = std::unordered_set<LatticePoint, LatticePointHash>;

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

void backtrack(const PointConfiguration& config, const std::vector<Coord>& lo, const std::vector<Coord>& hi,
               std::size_t start, std::size_t remaining, LatticePoint& rest, Multiset& current,
               std::vector<Multiset>& out) {
  if (remaining == 0) {
    if (std::all_of(rest.coords().begin(), rest.coords().end(), [](Coord c) { return c == 0; }))
      out.push_back(current);
    return;
  }
  const std::size_t dim = config.ambient_dim;
  for (std::size_t i = start; i < config.points.size(); ++i) {
    const LatticePoint& pt = config.points[i];
    bool feasible = true;
    for (std::size_t c = 0; c < dim && feasible; ++c) {
      const Coord left = rest[c] - pt[c];
      const auto r = static_cast<Coord>(remaining - 1);
      feasible = left >= r * lo[c] && left <= r * hi[c];
    }
    if (!feasible) continue;
    rest -= pt;
    current.push_back(i);
    backtrack(config, lo, hi, i, remaining - 1, rest, current, out);
    current.pop_back();
    rest += pt;
  }
}

bool fiber_connected(const std::vector<LatticePoint>& affine, const LatticePoint& target,
                     const PointSet& reach_minus_one, const PointSet& reach_minus_two) {
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < affine.size(); ++i)
    if (reach_minus_one.contains(target - affine[i])) labels.push_back(i);
  if (labels.size() <= 1) return true;
  DisjointSets sets(labels.size());
  std::size_t components = labels.size();
  for (std::size_t a = 0; a < labels.size() && components > 1; ++a) {
    const LatticePoint partial = target - affine[labels[a]];
    for (std::size_t b = a + 1; b < labels.size() && components > 1; ++b) {
      if (sets.find(a) == sets.find(b)) continue;
      if (reach_minus_two.contains(partial - affine[labels[b]])) {
        sets.unite(a, b);
        --components;
      }
    }
  }
  return components == 1;
}

}  // namespace

PointConfiguration homogenize(std::span<const LatticePoint> affine_points) {
  PointConfiguration config;
  if (affine_points.empty()) throw InvalidInput("empty point configuration");
  config.ambient_dim = affine_points.front().dim() + 1;
  for (const auto& u : affine_points) {
    if (u.dim() + 1 != config.ambient_dim) throw InvalidInput("configuration points have differing dimensions");
    std::vector<Coord> h{1};
    h.insert(h.end(), u.coords().begin(), u.coords().end());
    config.points.emplace_back(std::move(h));
  }
  canonicalize(config.points);
  return config;
}

PointConfiguration build_configuration(const Polytope& p, int ell) {
  if (ell < 1) throw InvalidInput("ell must be positive, got " + std::to_string(ell));
  return homogenize(lattice_points(dilate(p, ell), Containment::Closed));
}

Fiber enumerate_fiber(const PointConfiguration& config, const LatticePoint& target) {
  if (target.dim() != config.ambient_dim)
    throw InvalidInput("fiber target " + target.to_string() + " does not match configuration dimension " +
                       std::to_string(config.ambient_dim));
  if (target[0] < 2) throw InvalidInput("fiber degree must be at least 2, got " + std::to_string(target[0]));
  Fiber fiber{target, {}};
  if (config.points.empty()) return fiber;
  std::vector<Coord> lo = config.points.front().vec(), hi = lo;
  for (const auto& pt : config.points) {
    for (std::size_t c = 0; c < config.ambient_dim; ++c) {
      lo[c] = std::min(lo[c], pt[c]);
      hi[c] = std::max(hi[c], pt[c]);
    }
  }
  LatticePoint rest = target;
  Multiset current;
  backtrack(config, lo, hi, 0, static_cast<std::size_t>(target[0]), rest, current, fiber.elements);
  return fiber;
}

bool is_quadratic_move(const Multiset& a, const Multiset& b) {
  if (a.size() != b.size()) return false;
  // Size of the multiset difference a \ b, both sorted.
  std::size_t i = 0, j = 0, only_a = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++only_a;
      ++i;
    } else {
      ++j;
    }
  }
  only_a += a.size() - i;
  return only_a == 2;
}

std::string ProbeReport::verdict() const { return connected ? "connected-up-to-cap" : "disconnected"; }

ProbeReport n1_probe(const PointConfiguration& config, int ell, int degree_cap) {
  if (degree_cap < 2) throw InvalidInput("degree cap must be at least 2, got " + std::to_string(degree_cap));
  ProbeReport report;
  report.ell = ell;
  report.cap = degree_cap;

  std::vector<LatticePoint> affine;
  affine.reserve(config.points.size());
  for (const auto& pt : config.points) affine.emplace_back(std::vector<Coord>(pt.coords().begin() + 1, pt.coords().end()));

  // reach[k]: affine parts of all sums of k configuration points.
  std::vector<PointSet> reach;
  reach.emplace_back(PointSet{LatticePoint::zero(config.ambient_dim - 1)});
  reach.emplace_back(affine.begin(), affine.end());
  std::vector<LatticePoint> level = affine;
  canonicalize(level);
  for (int d = 2; d <= degree_cap; ++d) {
    PointSet next;
    for (const auto& s : level)
      for (const auto& u : affine) next.insert(s + u);
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
    reach.push_back(std::move(next));
    if (d == 2) {
      // any two elements of a degree-2 fiber are one move apart
      report.fibers_checked.push_back(level.size());
      continue;
    }
    const auto& minus_one = reach[static_cast<std::size_t>(d - 1)];
    const auto& minus_two = reach[static_cast<std::size_t>(d - 2)];
    std::vector<char> ok(level.size(), 1);
    const auto count = static_cast<std::ptrdiff_t>(level.size());
    detail::parallel_for(0, count, 16, [&](std::ptrdiff_t t) {
      ok[t] = fiber_connected(affine, level[t], minus_one, minus_two) ? 1 : 0;
    });
    report.fibers_checked.push_back(level.size());
    const auto bad = std::find(ok.begin(), ok.end(), 0);
    if (bad != ok.end()) {
      const LatticePoint& b = level[static_cast<std::size_t>(bad - ok.begin())];
      std::vector<Coord> witness{d};
      witness.insert(witness.end(), b.coords().begin(), b.coords().end());
      report.connected = false;
      report.witness_fiber = LatticePoint(std::move(witness));
      break;
    }
  }
  return report;
}

ProbeReport n1_probe(const Polytope& p, int ell, int degree_cap) {
  return n1_probe(build_configuration(p, ell), ell, degree_cap);
}

}  // namespace polynorm
