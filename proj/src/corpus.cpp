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

#include "polynorm/corpus.hpp"

#include <random>

#include "polynorm/errors.hpp"

namespace polynorm {

namespace {

// Unbiased draw from [0, range). std::uniform_int_distribution is not
// specified bit-for-bit across standard libraries; this is.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % range);
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % range;
}

}  // namespace

void validate(const CorpusSpec& spec) {
  if (spec.coord_bound < 1 || spec.coord_bound > 8)
    throw InvalidInput("coord_bound must be in [1, 8], got " + std::to_string(spec.coord_bound));
  if (spec.count_per_dim < 0) throw InvalidInput("count_per_dim must be non-negative");
  for (int n : spec.dims) {
    if (n < 1 || n > 4) throw InvalidInput("dimensions must be in {1,2,3,4}, got " + std::to_string(n));
    if (spec.vertex_candidates < n + 1)
      throw InvalidInput("vertex_candidates must be at least n+1 = " + std::to_string(n + 1));
  }
}

std::vector<Polytope> generate_corpus(const CorpusSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);
  const auto range = static_cast<std::uint64_t>(spec.coord_bound) + 1;
  std::vector<Polytope> corpus;
  for (int n : spec.dims) {
    for (int c = 0; c < spec.count_per_dim; ++c) {
      bool done = false;
      for (int attempt = 0; attempt < kMaxResamples && !done; ++attempt) {
        std::vector<LatticePoint> pts;
        pts.reserve(static_cast<std::size_t>(spec.vertex_candidates));
        for (int k = 0; k < spec.vertex_candidates; ++k) {
          auto p = LatticePoint::zero(static_cast<std::size_t>(n));
          for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = static_cast<Coord>(draw_below(rng, range));
          pts.push_back(std::move(p));
        }
        if (affine_dim(pts) != n) continue;
        corpus.push_back(build_polytope(pts));
        done = true;
      }
      if (!done)
        throw GenerationError("no full-dimensional sample after " + std::to_string(kMaxResamples) +
                              " tries in dimension " + std::to_string(n));
    }
  }
  if (spec.reeve_fixtures) {
    for (auto& t : reeve_fixtures()) corpus.push_back(std::move(t));
  }
  return corpus;
}

std::vector<Polytope> reeve_fixtures() {
  std::vector<Polytope> out;
  for (Coord q = 2; q <= 5; ++q) out.push_back(reeve_simplex(q));
  return out;
}

}  // namespace polynorm
