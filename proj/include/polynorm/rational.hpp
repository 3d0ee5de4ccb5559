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

#ifndef POLYNORM_RATIONAL_HPP_
#define POLYNORM_RATIONAL_HPP_

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polynorm/lattice_point.hpp"

namespace polynorm {

using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;

std::string to_string(const Rational& q);

// Row-reduces in place to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols);

std::size_t rank(RationalMatrix m, std::size_t cols);

// Basis vector of the kernel when it is exactly one-dimensional.
std::optional<std::vector<Rational>> kernel_line(RationalMatrix m, std::size_t cols);

// Unique solution of A x = b, if one exists.
std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& a, std::span<const Rational> b);

// Scales a nonzero rational vector to the primitive integer vector with the same direction.
LatticePoint primitive_direction(std::span<const Rational> v);

RationalMatrix to_rational_rows(std::span<const LatticePoint> rows);

}  // namespace polynorm

#endif  // POLYNORM_RATIONAL_HPP_
