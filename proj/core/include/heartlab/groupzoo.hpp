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
#include <string_view>
#include <vector>

#include "heartlab/finitefield.hpp"
#include "heartlab/permgroup.hpp"

namespace heartlab::zoo {

using perm::BigInt;
using perm::PermGroup;

enum class Family { Symmetric, Alternating, Mathieu, PSL, PGL, Cyclic, Dihedral };

std::string_view family_name(Family f);

/// Names one of the supported permutation groups. Cyclic and dihedral groups
/// are present only as non-2-transitive controls.
struct GroupId {
  Family family = Family::Symmetric;
  unsigned n = 0;       // degree parameter for S, A, M, C, D
  unsigned m = 0;       // PSL/PGL dimension
  std::uint64_t q = 0;  // PSL/PGL field order

  static GroupId symmetric(unsigned n) { return {Family::Symmetric, n, 0, 0}; }
  static GroupId alternating(unsigned n) { return {Family::Alternating, n, 0, 0}; }
  static GroupId mathieu(unsigned n) { return {Family::Mathieu, n, 0, 0}; }
  static GroupId psl(unsigned m, std::uint64_t q) { return {Family::PSL, 0, m, q}; }
  static GroupId pgl(unsigned m, std::uint64_t q) { return {Family::PGL, 0, m, q}; }
  static GroupId cyclic(unsigned n) { return {Family::Cyclic, n, 0, 0}; }
  static GroupId dihedral(unsigned n) { return {Family::Dihedral, n, 0, 0}; }

  /// Parses "M11", "S7", "A9", "C5", "D7", "PSL(3,4)", "PGL(3,3)"
  /// (case-insensitive, whitespace ignored). Throws std::invalid_argument.
  static GroupId parse(std::string_view text);

  /// Throws std::invalid_argument if the parameters are outside the family's
  /// supported range.
  void validate() const;

  std::string to_string() const;
  unsigned natural_degree() const;
  BigInt expected_order() const;

  bool is_projective() const { return family == Family::PSL || family == Family::PGL; }
  /// Characteristic of F_q for PSL/PGL, 0 otherwise.
  std::uint32_t characteristic() const;
  bool is_simple_nonabelian() const;

  bool operator==(const GroupId&) const = default;
};

PermGroup symmetric(unsigned n);
PermGroup alternating(unsigned n);
PermGroup cyclic(unsigned n);
PermGroup dihedral(unsigned n);
/// n in {11, 12, 22, 23, 24}.
PermGroup mathieu(unsigned n);

/// PSL/PGL acting on the canonical points of P^{m-1}(F_q); point i of the
/// permutation action is points[i].
struct ProjectiveGroup {
  PermGroup group;
  ff::Field field;
  unsigned m;
  std::vector<ff::ProjPoint> points;
};

ProjectiveGroup psl(unsigned m, std::uint64_t q);
ProjectiveGroup pgl(unsigned m, std::uint64_t q);

BigInt psl_order(unsigned m, std::uint64_t q);
BigInt pgl_order(unsigned m, std::uint64_t q);

PermGroup build(const GroupId& id);

/// Largest q^m accepted by psl()/pgl().
inline constexpr std::uint64_t kMaxProjectiveSpace = 100000;

}  // namespace heartlab::zoo
