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

#include "polynorm/parallel.hpp"

#include <omp.h>

#include <charconv>
#include <cstdlib>
#include <cstring>

#include "polynorm/errors.hpp"

namespace polynorm {

namespace {
int default_threads = 0;
}

int thread_count() { return omp_get_max_threads(); }

void set_thread_count(int n) {
  if (default_threads == 0) default_threads = omp_get_max_threads();
  omp_set_num_threads(n > 0 ? n : default_threads);
}

void configure_threads_from_env() {
  const char* raw = std::getenv("POLYNORM_THREADS");
  if (raw == nullptr || *raw == '\0') return;
  int n = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, n);
  if (ec != std::errc() || ptr != end || n < 0)
    throw InvalidInput(std::string("POLYNORM_THREADS must be a non-negative integer, got '") + raw + "'");
  set_thread_count(n);
}

}  // namespace polynorm
