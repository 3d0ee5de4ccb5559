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

#include "polynorm/analysis.hpp"

#include "polynorm/cohomology.hpp"
#include "polynorm/detail/parallel_for.hpp"
#include "polynorm/errors.hpp"

namespace polynorm {

bool AnalysisRecord::consistent() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

AnalysisRecord analyze(const Polytope& p, std::optional<int> cap) {
  AnalysisRecord r;
  r.polytope_id = p.id();
  r.vertices = p.vertices();
  r.n = static_cast<int>(p.dim());
  r.ehrhart = ehrhart(p).coeffs();
  const DilationProfile profile = d_of_p(p);
  r.d = profile.d_of_p;
  r.codegree = profile.codegree;
  r.corollary_bound = std::max(r.n - r.d, 1);
  r.autoregularity = r.n - 1 - r.d;
  r.autoregularity_definition = autoregularity_from_definition(p);
  r.normality = is_normal(p, cap);

  r.checks["codegree_consistent"] = r.codegree == r.d + 1;
  r.checks["autoregularity_consistent"] = r.autoregularity == r.autoregularity_definition;
  r.checks["bound_consistent"] = r.corollary_bound == normality_bound(p).corollary_bound;
  r.checks["witness_verified"] = !r.normality.witness || verify_witness(p, *r.normality.witness);
  return r;
}

VerificationRecord verify_polytope(const Polytope& p, int extra_levels, int n1_cap, std::optional<int> cap) {
  VerificationRecord v;
  v.analysis = analyze(p, cap);
  const auto& a = v.analysis;

  BoundReport bounds;
  bounds.n = a.n;
  bounds.d = a.d;
  bounds.corollary_bound = a.corollary_bound;
  bounds.classical_n0_bound = a.n >= 2 ? a.n - 1 : 1;
  v.corollary = verify_corollary(p, bounds, extra_levels, cap);

  const EhrhartPolynomial poly(a.ehrhart);
  v.reciprocity = reciprocity_check(p, poly, a.n + 1);
  const int ks[] = {a.n + 1, a.n + 2};
  v.extrapolation = extrapolation_check(p, poly, ks);
  v.autoregularity_match = a.autoregularity_definition == autoregularity_formula(p);
  v.minimality = !is_autoregular(p, a.autoregularity_definition - 1);
  if (a.n <= 3 && n1_cap >= 2) v.n1 = n1_probe(p, a.n, n1_cap);

  for (const auto& level : v.corollary.levels) {
    if (level.violation)
      v.violations.push_back("non-normal at l=" + std::to_string(level.ell) + " >= corollary bound " +
                             std::to_string(a.corollary_bound));
  }
  if (!v.reciprocity) v.violations.push_back("Ehrhart reciprocity failed");
  if (!v.extrapolation) v.violations.push_back("Ehrhart extrapolation failed");
  if (!v.autoregularity_match) v.violations.push_back("autoregularity mismatch");
  if (!v.minimality) v.violations.push_back("autoregularity not minimal");
  if (v.n1 && !v.n1->connected) v.violations.push_back("quadratic fiber disconnected at l=n");
  for (const auto& [name, ok] : a.checks)
    if (!ok) v.violations.push_back("analysis check failed: " + name);
  return v;
}

BatchReport run_verification(std::span<const Polytope> corpus, int extra_levels, int n1_cap,
                             std::optional<int> cap) {
  BatchReport report;
  report.extra_levels = extra_levels;
  report.n1_cap = n1_cap;
  report.records.resize(corpus.size());
  detail::parallel_for(0, static_cast<std::ptrdiff_t>(corpus.size()), 1, [&](std::ptrdiff_t i) {
    const auto k = static_cast<std::size_t>(i);
    report.records[k] = verify_polytope(corpus[k], extra_levels, n1_cap, cap);
  });

  auto& s = report.summary;
  s.polytopes = report.records.size();
  for (const auto& r : report.records) {
    s.corollary_passes += r.corollary.violations() == 0;
    s.reciprocity_passes += r.reciprocity;
    s.extrapolation_passes += r.extrapolation;
    s.autoregularity_passes += r.autoregularity_match && r.minimality;
    s.consistency_passes += r.analysis.consistent();
    if (r.n1) {
      ++s.n1_probed;
      s.n1_connected += r.n1->connected;
    }
    s.violations += !r.violations.empty();
  }
  return report;
}

BatchReport run_verification(const CorpusSpec& spec, int extra_levels, int n1_cap, std::optional<int> cap) {
  const auto corpus = generate_corpus(spec);
  BatchReport report = run_verification(corpus, extra_levels, n1_cap, cap);
  report.spec = spec;
  return report;
}

}  // namespace polynorm
