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

#ifndef POLYNORM_COHOMOLOGY_HPP_
#define POLYNORM_COHOMOLOGY_HPP_

#include <string>
#include <vector>

#include "polynorm/polytope.hpp"

namespace polynorm {

// Cohomology dimensions of twists O(kD) of an ample toric line bundle whose
// polytope is P. Nothing here builds the toric variety: every entry is a
// lattice-point count.
//   k >= 0: h^0 = #(kP ∩ Z^n) (1 for k = 0), h^i = 0 for i >= 1
//   k <  0: h^n = #(relint(|k|P) ∩ Z^n), h^i = 0 for i != n
struct CohomologyRow {
  int twist = 0;
  std::vector<Count> h;  // h^0 .. h^n
};

struct CohomologyTable {
  std::string polytope_id;
  std::size_t dim = 0;
  std::vector<CohomologyRow> rows;
};

Count h_entry(const Polytope& p, int twist, std::size_t i);
CohomologyRow h_row(const Polytope& p, int twist);
CohomologyTable h_table(const Polytope& p, int k_min, int k_max);

// m-autoregularity straight from the definition: h^i(A^{m+1-i}) = 0 for 1 <= i <= n.
bool is_autoregular(const Polytope& p, int m);

// Smallest m for which P's bundle is m-autoregular, found by walking down
// from n-1 until the definition first fails.
int autoregularity_from_definition(const Polytope& p);

// Level from which O(lD) satisfies N_p: max(m + p, 1) for p >= 1 and
// max(m + 1, 1) for p = 0, with m the autoregularity.
int np_bound_from_regularity(const Polytope& p, int np_index);
int np_bound_from_regularity(int autoregularity, int np_index);

}  // namespace polynorm

#endif  // POLYNORM_COHOMOLOGY_HPP_
