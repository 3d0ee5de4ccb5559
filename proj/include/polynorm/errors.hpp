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

#ifndef POLYNORM_ERRORS_HPP_
#define POLYNORM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace polynorm {

// Caller supplied something outside an operation's preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

class NotFullDimensional : public InvalidInput {
 public:
  NotFullDimensional(int actual_dim, int ambient_dim);

  int actual_dim() const { return actual_dim_; }
  int ambient_dim() const { return ambient_dim_; }

 private:
  int actual_dim_;
  int ambient_dim_;
};

// An internal invariant was broken: a theorem violation or a geometry bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace polynorm

#endif  // POLYNORM_ERRORS_HPP_
