// Copyright 2026 The heartlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "heartlab/polyfp.hpp"

namespace heartlab::ff {

/// Element of GF(p^r) as a coefficient vector over F_p, constant term first.
///
/// Elements are ordered by their integer index sum c_i p^i, which is also the
/// order used to sort projective points.
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  std::strong_ordering operator<=>(const FieldElement& o) const;
  bool operator==(const FieldElement& o) const = default;
};

/// GF(p^r) with modulus the lexicographically smallest monic irreducible of
/// degree r (coefficients compared constant term first).
class Field {
 public:
  /// Throws std::invalid_argument if p is not prime, r is outside [1, 8], or
  /// p^r does not fit in 32 bits.
  Field(std::uint32_t p, unsigned r);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return r_; }
  std::uint64_t order() const { return q_; }
  /// Monic modulus of degree r, constant term first (length r + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  PolyFp modulus_poly() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t k) const;
  FieldElement from_index(std::uint64_t index) const;
  std::uint64_t index(const FieldElement& a) const;
  std::vector<FieldElement> elements() const;

  bool is_zero(const FieldElement& a) const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  /// Throws std::domain_error for a == 0.
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;
  /// a -> a^p
  FieldElement frobenius(const FieldElement& a) const { return pow(a, p_); }
  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(const FieldElement& a) const;
  /// Generator of the multiplicative group with the smallest index.
  FieldElement primitive_element() const;

  std::string to_string(const FieldElement& a) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

 private:
  void check(const FieldElement& a) const;

  std::uint32_t p_;
  unsigned r_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
};

Field make_field(std::uint32_t p, unsigned r);

bool is_prime(std::uint64_t n);

/// If q = p^r for a prime p, returns {p, r}; otherwise {0, 0}.
std::pair<std::uint32_t, unsigned> prime_power(std::uint64_t q);

/// A point of P^{m-1}(F_q): nonzero coordinate vector whose first nonzero
/// coordinate is 1.
struct ProjPoint {
  std::vector<FieldElement> coords;

  auto operator<=>(const ProjPoint&) const = default;
  bool operator==(const ProjPoint&) const = default;
};

/// Scales v so that its first nonzero coordinate is 1. Throws
/// std::invalid_argument for the zero vector.
ProjPoint canonicalize(const Field& field, std::vector<FieldElement> v);

/// All (q^m - 1)/(q - 1) canonical points in increasing lexicographic order.
std::vector<ProjPoint> projective_points(const Field& field, unsigned m);

std::string to_string(const Field& field, const ProjPoint& pt);

}  // namespace heartlab::ff
