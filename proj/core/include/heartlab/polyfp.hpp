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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "heartlab/random.hpp"

namespace heartlab::ff {

/// Dense univariate polynomial over a prime field F_p, coefficients stored
/// constant term first and kept trimmed (no trailing zeros). p < 2^32.
class PolyFp {
 public:
  explicit PolyFp(std::uint64_t p) : p_(p) {}
  PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static PolyFp constant(std::uint64_t p, std::uint64_t c);
  static PolyFp x(std::uint64_t p);
  /// x^k
  static PolyFp monomial(std::uint64_t p, std::size_t k);

  std::uint64_t modulus() const { return p_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  PolyFp monic() const;
  PolyFp derivative() const;
  std::uint64_t eval(std::uint64_t x) const;
  std::string to_string() const;

  bool operator==(const PolyFp& o) const { return p_ == o.p_ && c_ == o.c_; }

  friend PolyFp operator+(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator-(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  PolyFp scaled(std::uint64_t c) const;

 private:
  void trim();

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b);
PolyFp operator%(const PolyFp& a, const PolyFp& b);
PolyFp operator/(const PolyFp& a, const PolyFp& b);

/// Monic gcd (zero if both inputs are zero).
PolyFp gcd(const PolyFp& a, const PolyFp& b);

PolyFp mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& m);
PolyFp powmod(const PolyFp& base, const boost::multiprecision::cpp_int& e, const PolyFp& m);

/// True iff gcd(f, f') == 1 (f nonconstant).
bool is_squarefree(const PolyFp& f);

/// Squarefree decomposition of a monic polynomial: pairs (g_i, i) with
/// f = prod g_i^i and each g_i squarefree and pairwise coprime.
std::vector<std::pair<PolyFp, unsigned>> squarefree_decomposition(const PolyFp& f);

/// Distinct-degree factorization of a monic squarefree f: pairs (g, d)
/// where g is the product of all irreducible factors of degree d.
std::vector<std::pair<PolyFp, unsigned>> distinct_degree_factorization(const PolyFp& f);

/// Splits a monic squarefree f whose irreducible factors all have degree d.
std::vector<PolyFp> equal_degree_factorization(const PolyFp& f, unsigned d, SplitMix64& rng);

/// Full factorization of a nonzero polynomial into monic irreducibles with
/// multiplicities, sorted by (degree, coefficients). The leading coefficient
/// is dropped.
std::vector<std::pair<PolyFp, unsigned>> factor(const PolyFp& f, std::uint64_t seed = 0);

/// Degrees of the irreducible factors of a squarefree polynomial, with
/// multiplicity, in increasing order.
std::vector<unsigned> factor_degrees(const PolyFp& f);

/// Ben-Or irreducibility test.
bool is_irreducible(const PolyFp& f);

}  // namespace heartlab::ff
