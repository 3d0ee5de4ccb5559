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

#ifndef POLYNORM_NORMALITY_HPP_
#define POLYNORM_NORMALITY_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polynorm/polytope.hpp"

namespace polynorm {

// m-fold sumset {p_1 + ... + p_m : p_i in points}, lexicographically ordered.
std::vector<LatticePoint> sumset_levels(std::span<const LatticePoint> points, int m);

struct LevelCheck {
  bool normal = true;
  // Lexicographically smallest point of mP not a sum of m lattice points of P.
  std::optional<LatticePoint> witness;
};

// Whether every lattice point of mP is a sum of m lattice points of P.
LevelCheck is_normal_at_level(const Polytope& p, int m);

enum class NormalityVerdict { NormalUpToCap, NonNormal };

struct NormalityWitness {
  int level = 0;
  LatticePoint point;
};

struct NormalityReport {
  std::string polytope_id;
  std::vector<int> levels_checked;
  NormalityVerdict verdict = NormalityVerdict::NormalUpToCap;
  std::optional<NormalityWitness> witness;
  int cap_used = 0;

  bool normal() const { return verdict == NormalityVerdict::NormalUpToCap; }
};

// max(n-1, 2)
int default_normality_cap(std::size_t n);

// Checks levels 2..cap and stops at the first failing level.
NormalityReport is_normal(const Polytope& p, std::optional<int> cap = std::nullopt);

// Independent re-check: the point lies in mP and is missing from the
// exhaustive m-fold sumset.
bool verify_witness(const Polytope& p, const NormalityWitness& w);

struct BoundReport {
  int n = 0;
  int d = 0;
  int corollary_bound = 1;      // max(n - d, 1)
  int classical_n0_bound = 1;   // n - 1 for n >= 2, else 1

  // n - 1 + p
  int np_bound(int p) const;
};

BoundReport normality_bound(const Polytope& p);

struct CorollaryLevel {
  int ell = 0;
  NormalityReport report;
  bool violation = false;
};

struct CorollaryVerification {
  std::string polytope_id;
  BoundReport bounds;
  std::vector<CorollaryLevel> levels;

  int violations() const;
};

// Runs is_normal(dilate(P, l)) for l = corollary_bound .. corollary_bound + extra_levels.
// A non-normal verdict at any of these levels is a theorem violation.
CorollaryVerification verify_corollary(const Polytope& p, int extra_levels, std::optional<int> cap = std::nullopt);
CorollaryVerification verify_corollary(const Polytope& p, const BoundReport& bounds, int extra_levels,
                                       std::optional<int> cap = std::nullopt);

// n - 1 - d(P); negative values are returned as they are.
int autoregularity_formula(const Polytope& p);

}  // namespace polynorm

#endif  // POLYNORM_NORMALITY_HPP_
