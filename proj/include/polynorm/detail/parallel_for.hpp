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

#ifndef POLYNORM_DETAIL_PARALLEL_FOR_HPP_
#define POLYNORM_DETAIL_PARALLEL_FOR_HPP_

#include <cstddef>
#include <exception>

namespace polynorm::detail {

// Dynamic-schedule OpenMP loop over [begin, end). The first exception thrown
// by any iteration is rethrown on the calling thread after the loop.
template <class Body>
void parallel_for(std::ptrdiff_t begin, std::ptrdiff_t end, int chunk, Body&& body) {
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, chunk)
  for (std::ptrdiff_t i = begin; i < end; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(polynorm_parallel_for_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace polynorm::detail

#endif  // POLYNORM_DETAIL_PARALLEL_FOR_HPP_
