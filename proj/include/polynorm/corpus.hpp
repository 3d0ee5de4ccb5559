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

#ifndef POLYNORM_CORPUS_HPP_
#define POLYNORM_CORPUS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynorm/polytope.hpp"

namespace polynorm {

struct CorpusSpec {
  std::uint64_t seed = 0;
  std::vector<int> dims;
  int coord_bound = 4;        // points are drawn from [0, B]^n
  int count_per_dim = 0;
  int vertex_candidates = 0;  // points sampled per polytope before taking the hull
  bool reeve_fixtures = false;  // append T_2..T_5 after the random polytopes
};

class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kMaxResamples = 1000;

// Throws InvalidInput unless dims ⊆ {1..4}, 1 <= B <= 8, count >= 0 and
// vertex_candidates >= n + 1 for every requested n.
void validate(const CorpusSpec& spec);

// Deterministic for a given spec: one mt19937_64 stream seeded with
// spec.seed, consumed dimension by dimension in the order given.
std::vector<Polytope> generate_corpus(const CorpusSpec& spec);

// T_q for q = 2..5.
std::vector<Polytope> reeve_fixtures();

}  // namespace polynorm

#endif  // POLYNORM_CORPUS_HPP_
