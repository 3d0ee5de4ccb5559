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

#include "polynorm/reference.hpp"

#include <algorithm>
#include <deque>

#include "polynorm/errors.hpp"

namespace polynorm::reference {

std::vector<LatticePoint> lattice_points_box_scan(const Polytope& p, Containment mode) {
  const std::size_t n = p.dim();
  std::vector<LatticePoint> out;
  LatticePoint x = p.box_lo();
  while (true) {
    if (contains(p, x, mode)) out.push_back(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < p.box_hi()[i]) {
        ++x[i];
        break;
      }
      x[i] = p.box_lo()[i];
      if (i == 0) return out;
    }
  }
}

LevelCheck is_normal_at_level_sumset(const Polytope& p, int m) {
  if (m < 1) throw InvalidInput("normality level must be positive");
  const auto sums = sumset_levels(lattice_points_box_scan(p, Containment::Closed), m);
  for (const auto& z : lattice_points_box_scan(dilate(p, m), Containment::Closed)) {
    if (!std::binary_search(sums.begin(), sums.end(), z)) return LevelCheck{false, z};
  }
  return {};
}

bool fiber_connected_explicit(const Fiber& fiber) {
  const auto& el = fiber.elements;
  if (el.size() <= 1) return true;
  std::vector<bool> seen(el.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t b = 0; b < el.size(); ++b) {
      if (!seen[b] && is_quadratic_move(el[a], el[b])) {
        seen[b] = true;
        ++reached;
        queue.push_back(b);
      }
    }
  }
  return reached == el.size();
}

ProbeReport n1_probe_explicit(const PointConfiguration& config, int ell, int degree_cap) {
  if (degree_cap < 2) throw InvalidInput("degree cap must be at least 2");
  ProbeReport report;
  report.ell = ell;
  report.cap = degree_cap;
  for (int d = 2; d <= degree_cap; ++d) {
    const auto targets = sumset_levels(config.points, d);
    report.fibers_checked.push_back(targets.size());
    for (const auto& b : targets) {
      if (!fiber_connected_explicit(enumerate_fiber(config, b))) {
        report.connected = false;
        report.witness_fiber = b;
        return report;
      }
    }
  }
  return report;
}

}  // namespace polynorm::reference
