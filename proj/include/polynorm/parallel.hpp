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

#ifndef POLYNORM_PARALLEL_HPP_
#define POLYNORM_PARALLEL_HPP_

namespace polynorm {

// Number of OpenMP threads kernels will use.
int thread_count();

// n <= 0 restores the OpenMP default.
void set_thread_count(int n);

// Applies POLYNORM_THREADS (0 or unset = auto). Throws InvalidInput on a
// malformed value.
void configure_threads_from_env();

}  // namespace polynorm

#endif  // POLYNORM_PARALLEL_HPP_
