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

#ifndef POLYNORM_COUNTING_HPP_
#define POLYNORM_COUNTING_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polynorm/polytope.hpp"
#include "polynorm/rational.hpp"

namespace polynorm {

/// L_P(t) = sum_i coeffs[i] t^i, exact rational coefficients.
class EhrhartPolynomial {
 public:
  explicit EhrhartPolynomial(std::vector<Rational> coeffs);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational operator()(const Rational& t) const;
  Rational operator()(long t) const { return (*this)(Rational(t)); }
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

// Unique polynomial of degree <= values.size()-1 through (k, values[k]).
EhrhartPolynomial interpolate_from_counts(std::span<const Count> values);

// Interpolates through (k, #(kP ∩ Z^n)) for k = 0..n.
EhrhartPolynomial ehrhart(const Polytope& p);

struct DilationProfile {
  int d_of_p = 0;
  int codegree = 1;
  // (k, #relint(kP) ∩ Z^n) for k = 1..n+1
  std::vector<std::pair<int, Count>> interior_counts;
};

// d(P): the largest d >= 0 with relint(dP) free of lattice points, by
// direct interior scans. Throws InternalError if kP has no interior point
// for any k <= n+1.
DilationProfile d_of_p(const Polytope& p);

// L_P(-t) == (-1)^n #relint(tP) for t = 1..t_max.
bool reciprocity_check(const Polytope& p, int t_max);
bool reciprocity_check(const Polytope& p, const EhrhartPolynomial& poly, int t_max);

// L_P(k) equals a direct count of kP for every k in ks.
bool extrapolation_check(const Polytope& p, const EhrhartPolynomial& poly, std::span<const int> ks);

}  // namespace polynorm

#endif  // POLYNORM_COUNTING_HPP_
