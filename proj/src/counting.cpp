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

#include "polynorm/counting.hpp"

#include "polynorm/errors.hpp"

namespace polynorm {

EhrhartPolynomial::EhrhartPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidInput("polynomial needs at least one coefficient");
}

Rational EhrhartPolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string EhrhartPolynomial::to_string() const {
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!s.empty()) s += coeffs_[i] > 0 ? " + " : " - ";
    else if (coeffs_[i] < 0) s += "-";
    const Rational mag = abs(coeffs_[i]);
    if (i == 0 || mag != 1) s += mag.get_str();
    if (i >= 1) s += (i == 1) ? "t" : "t^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

EhrhartPolynomial interpolate_from_counts(std::span<const Count> values) {
  const std::size_t m = values.size();
  if (m == 0) throw InvalidInput("interpolation needs at least one value");
  RationalMatrix vandermonde(m, std::vector<Rational>(m));
  std::vector<Rational> rhs(m);
  for (std::size_t k = 0; k < m; ++k) {
    Rational power = 1;
    for (std::size_t i = 0; i < m; ++i) {
      vandermonde[k][i] = power;
      power *= static_cast<long>(k);
    }
    rhs[k] = Rational(mpz_class(std::to_string(values[k])));
  }
  auto coeffs = solve_unique(vandermonde, rhs);
  if (!coeffs) throw InternalError("Vandermonde system is singular");
  return EhrhartPolynomial(std::move(*coeffs));
}

EhrhartPolynomial ehrhart(const Polytope& p) {
  std::vector<Count> counts{1};
  for (std::size_t k = 1; k <= p.dim(); ++k)
    counts.push_back(count_lattice_points(dilate(p, static_cast<Coord>(k)), Containment::Closed));
  return interpolate_from_counts(counts);
}

DilationProfile d_of_p(const Polytope& p) {
  DilationProfile profile;
  const int n = static_cast<int>(p.dim());
  int first_nonempty = 0;
  for (int k = 1; k <= n + 1; ++k) {
    const Count c = count_lattice_points(dilate(p, k), Containment::RelativeInterior);
    profile.interior_counts.emplace_back(k, c);
    if (c > 0 && first_nonempty == 0) first_nonempty = k;
  }
  if (first_nonempty == 0)
    throw InternalError("no interior lattice point in kP for k <= n+1 (polytope " + p.id() + ")");
  profile.d_of_p = first_nonempty - 1;
  profile.codegree = first_nonempty;
  return profile;
}

bool reciprocity_check(const Polytope& p, const EhrhartPolynomial& poly, int t_max) {
  if (t_max < 1) throw InvalidInput("reciprocity_check needs t_max >= 1");
  const long sign = (p.dim() % 2 == 0) ? 1 : -1;
  for (int t = 1; t <= t_max; ++t) {
    const Count interior = count_lattice_points(dilate(p, t), Containment::RelativeInterior);
    if (poly(-t) != sign * Rational(mpz_class(std::to_string(interior)))) return false;
  }
  return true;
}

bool reciprocity_check(const Polytope& p, int t_max) { return reciprocity_check(p, ehrhart(p), t_max); }

bool extrapolation_check(const Polytope& p, const EhrhartPolynomial& poly, std::span<const int> ks) {
  for (int k : ks) {
    if (k < 1) throw InvalidInput("extrapolation points must be positive");
    const Count direct = count_lattice_points(dilate(p, k), Containment::Closed);
    if (poly(k) != Rational(mpz_class(std::to_string(direct)))) return false;
  }
  return true;
}

}  // namespace polynorm
