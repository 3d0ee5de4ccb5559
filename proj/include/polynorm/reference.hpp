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

#ifndef POLYNORM_REFERENCE_HPP_
#define POLYNORM_REFERENCE_HPP_

// Serial, literal implementations kept as test oracles and benchmark
// baselines for the parallel kernels.

#include <vector>

#include "polynorm/normality.hpp"
#include "polynorm/polytope.hpp"
#include "polynorm/syzygy.hpp"

namespace polynorm::reference {

// Every integer point of the vertex bounding box, filtered by contains().
std::vector<LatticePoint> lattice_points_box_scan(const Polytope& p, Containment mode);

// lattice_points(mP) ⊆ sumset_levels(lattice_points(P), m), by materializing the sumset.
LevelCheck is_normal_at_level_sumset(const Polytope& p, int m);

// BFS over the explicit quadratic-move graph of the fiber.
bool fiber_connected_explicit(const Fiber& fiber);

// Enumerates every fiber of degree 2..cap explicitly.
ProbeReport n1_probe_explicit(const PointConfiguration& config, int ell, int degree_cap);

}  // namespace polynorm::reference

#endif  // POLYNORM_REFERENCE_HPP_
