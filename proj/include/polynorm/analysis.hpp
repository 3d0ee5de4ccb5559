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

#ifndef POLYNORM_ANALYSIS_HPP_
#define POLYNORM_ANALYSIS_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polynorm/corpus.hpp"
#include "polynorm/counting.hpp"
#include "polynorm/normality.hpp"
#include "polynorm/polytope.hpp"
#include "polynorm/syzygy.hpp"

namespace polynorm {

struct AnalysisRecord {
  std::string polytope_id;
  std::vector<LatticePoint> vertices;
  int n = 0;
  std::vector<Rational> ehrhart;
  int d = 0;
  int codegree = 1;
  int corollary_bound = 1;
  int autoregularity = 0;             // n - 1 - d
  int autoregularity_definition = 0;  // from the cohomology rules
  NormalityReport normality;
  // codegree_consistent, autoregularity_consistent, bound_consistent, witness_verified
  std::map<std::string, bool> checks;

  bool consistent() const;
};

AnalysisRecord analyze(const Polytope& p, std::optional<int> cap = std::nullopt);

struct VerificationRecord {
  AnalysisRecord analysis;
  CorollaryVerification corollary;
  bool reciprocity = false;         // t = 1..n+1
  bool extrapolation = false;       // k = n+1, n+2
  bool autoregularity_match = false;
  bool minimality = false;          // not (m-1)-autoregular
  std::optional<ProbeReport> n1;    // at l = n, for n <= 3
  std::vector<std::string> violations;
};

VerificationRecord verify_polytope(const Polytope& p, int extra_levels, int n1_cap,
                                   std::optional<int> cap = std::nullopt);

struct BatchSummary {
  std::size_t polytopes = 0;
  std::size_t corollary_passes = 0;
  std::size_t reciprocity_passes = 0;
  std::size_t extrapolation_passes = 0;
  std::size_t autoregularity_passes = 0;
  std::size_t consistency_passes = 0;
  std::size_t n1_probed = 0;
  std::size_t n1_connected = 0;
  std::size_t violations = 0;
};

struct BatchReport {
  CorpusSpec spec;
  int extra_levels = 0;
  int n1_cap = 0;
  std::vector<VerificationRecord> records;  // generation order
  BatchSummary summary;
};

// Polytopes are verified concurrently; records keep the input order.
BatchReport run_verification(std::span<const Polytope> corpus, int extra_levels, int n1_cap,
                             std::optional<int> cap = std::nullopt);
BatchReport run_verification(const CorpusSpec& spec, int extra_levels, int n1_cap,
                             std::optional<int> cap = std::nullopt);

}  // namespace polynorm

#endif  // POLYNORM_ANALYSIS_HPP_
