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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "heartlab/groupzoo.hpp"
#include "heartlab/permutation.hpp"

namespace heartlab::probe {

using Integer = boost::multiprecision::cpp_int;
using perm::CycleType;

/// Integer polynomial, constant term first, nonzero leading coefficient,
/// degree at least 1.
class IntPolynomial {
 public:
  /// Trailing zeros are dropped. Throws std::invalid_argument if the result
  /// has degree below 1.
  explicit IntPolynomial(std::vector<Integer> coeffs);

  std::size_t degree() const { return c_.size() - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& leading() const { return c_.back(); }

  /// Canonical text, highest degree first: "x^7-7*x+3".
  std::string to_string() const;

  bool operator==(const IntPolynomial&) const = default;

 private:
  std::vector<Integer> c_;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::invalid_argument("column " + std::to_string(position + 1) + ": " + message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: an optional pair of parentheses around a sum of signed terms.
/// A term is an integer, "x", "x^k", or an integer times x with or without
/// '*' ("2*x^3", "2x^3"). Whitespace is ignored and like terms are added.
/// Throws ParseError.
IntPolynomial parse_poly(std::string_view text);

/// Factor degrees of f mod p (the Frobenius cycle type), or nullopt when
/// f mod p has a repeated factor. Throws std::invalid_argument if p is not
/// prime or divides the leading coefficient.
std::optional<CycleType> cycle_type_mod_p(const IntPolynomial& f, std::uint64_t p);

inline constexpr std::uint64_t kExactEnumerationLimit = 1'000'000;

struct TypeSet {
  std::set<CycleType> types;
  bool exact = false;
};

/// Every cycle type of the group when its order is at most
/// kExactEnumerationLimit, otherwise the types seen in `budget`
/// product-replacement samples.
TypeSet group_cycle_types(const perm::PermGroup& group, std::size_t budget, std::uint64_t seed);

enum class Consistency { Consistent, Inconsistent, InsufficientData };

std::string to_string(Consistency c);

struct CandidateVerdict {
  zoo::GroupId group;
  Consistency verdict = Consistency::InsufficientData;
  bool exact = false;
  std::size_t type_count = 0;
  std::optional<CycleType> witness;
};

struct ProbeReport {
  IntPolynomial polynomial;
  std::vector<std::uint64_t> primes_used;
  std::vector<std::uint64_t> ramified_primes;
  std::map<CycleType, std::size_t> histogram;
  std::vector<CandidateVerdict> candidates;
  /// Some unramified prime left f irreducible, which implies irreducibility
  /// over Q.
  bool irreducibility_evidence = false;
};

inline constexpr std::size_t kDefaultSampleBudget = 2000;

/// Frobenius statistics over the first prime_count primes not dividing the
/// leading coefficient, compared with each candidate's cycle types.
/// Throws std::invalid_argument on a candidate of the wrong degree.
ProbeReport probe(const IntPolynomial& f, std::size_t prime_count, const std::vector<zoo::GroupId>& candidates,
                  std::uint64_t seed, std::size_t sample_budget = kDefaultSampleBudget);

}  // namespace heartlab::probe
