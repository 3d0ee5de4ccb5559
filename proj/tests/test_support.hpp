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

#ifndef POLYNORM_TESTS_TEST_SUPPORT_HPP_
#define POLYNORM_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <vector>

#include "polynorm/corpus.hpp"
#include "polynorm/polytope.hpp"

namespace polynorm::testing {

inline std::vector<Polytope> random_polytopes(std::uint64_t seed, std::vector<int> dims, int bound, int count,
                                              int candidates) {
  CorpusSpec spec;
  spec.seed = seed;
  spec.dims = std::move(dims);
  spec.coord_bound = bound;
  spec.count_per_dim = count;
  spec.vertex_candidates = candidates;
  return generate_corpus(spec);
}

inline Polytope unit_square() { return unit_cube(2); }

// conv{(1,0), (0,1), (-1,-1)}: three boundary points and one interior point.
inline Polytope triangle_with_interior_point() {
  const std::vector<LatticePoint> pts{{1, 0}, {0, 1}, {-1, -1}};
  return build_polytope(pts);
}

}  // namespace polynorm::testing

#endif  // POLYNORM_TESTS_TEST_SUPPORT_HPP_
