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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace heartlab::perm {

using Point = std::uint32_t;

/// Multiset of cycle lengths, stored sorted in decreasing order so that
/// equal types compare equal. Fixed points count as cycles of length 1.
struct CycleType {
  std::vector<std::uint32_t> lengths;

  CycleType() = default;
  explicit CycleType(std::vector<std::uint32_t> lens);

  std::size_t degree() const;
  std::string to_string() const;  // e.g. "[3,2]"

  auto operator<=>(const CycleType&) const = default;
  bool operator==(const CycleType&) const = default;
};

/// A bijection of {0, ..., n-1}.
///
/// Composition convention: compose(p, q)(x) = p(q(x)), i.e. q acts first.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  CycleType cycle_type() const;
  std::uint64_t order() const;
  bool is_even() const;

  /// Cycle notation without fixed points, "()" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// (p o q)(x) = p(q(x)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// g p g^-1
Permutation conjugate(const Permutation& p, const Permutation& g);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace heartlab::perm
