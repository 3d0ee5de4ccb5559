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

#include "polynorm/cohomology.hpp"

#include <algorithm>

#include "polynorm/errors.hpp"

namespace polynorm {

Count h_entry(const Polytope& p, int twist, std::size_t i) {
  const std::size_t n = p.dim();
  if (i > n) return 0;
  if (twist == 0) return i == 0 ? 1 : 0;
  if (twist > 0) return i == 0 ? count_lattice_points(dilate(p, twist), Containment::Closed) : 0;
  return i == n ? count_lattice_points(dilate(p, -static_cast<Coord>(twist)), Containment::RelativeInterior) : 0;
}

CohomologyRow h_row(const Polytope& p, int twist) {
  CohomologyRow row;
  row.twist = twist;
  row.h.assign(p.dim() + 1, 0);
  if (twist >= 0) {
    row.h[0] = h_entry(p, twist, 0);
  } else {
    row.h[p.dim()] = h_entry(p, twist, p.dim());
  }
  return row;
}

CohomologyTable h_table(const Polytope& p, int k_min, int k_max) {
  if (k_min > k_max) throw InvalidInput("k_min must not exceed k_max");
  CohomologyTable table;
  table.polytope_id = p.id();
  table.dim = p.dim();
  table.rows.resize(static_cast<std::size_t>(k_max - k_min + 1));
  for (int k = k_min; k <= k_max; ++k) table.rows[static_cast<std::size_t>(k - k_min)] = h_row(p, k);
  return table;
}

bool is_autoregular(const Polytope& p, int m) {
  for (std::size_t i = 1; i <= p.dim(); ++i) {
    if (h_entry(p, m + 1 - static_cast<int>(i), i) != 0) return false;
  }
  return true;
}

int autoregularity_from_definition(const Polytope& p) {
  const int n = static_cast<int>(p.dim());
  // m = n-1 always passes (all twists non-negative); at m = -2 the failing
  // twist is -(n+1), and (n+1)P always has an interior point.
  int m = n - 1;
  if (!is_autoregular(p, m)) throw InternalError("bundle is not (n-1)-autoregular for polytope " + p.id());
  while (is_autoregular(p, m - 1)) {
    --m;
    if (m < -2) throw InternalError("autoregularity search did not terminate for polytope " + p.id());
  }
  return m;
}

int np_bound_from_regularity(int autoregularity, int np_index) {
  if (np_index < 0) throw InvalidInput("N_p index must be non-negative, got " + std::to_string(np_index));
  if (np_index == 0) return std::max(autoregularity + 1, 1);
  return std::max(autoregularity + np_index, 1);
}

int np_bound_from_regularity(const Polytope& p, int np_index) {
  if (np_index < 0) throw InvalidInput("N_p index must be non-negative, got " + std::to_string(np_index));
  return np_bound_from_regularity(autoregularity_from_definition(p), np_index);
}

}  // namespace polynorm
