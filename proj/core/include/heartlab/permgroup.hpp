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
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "heartlab/permutation.hpp"
#include "heartlab/random.hpp"

namespace heartlab::perm {

using BigInt = boost::multiprecision::cpp_int;

/// One level of a stabilizer chain: the base point, the strong generators
/// fixing all earlier base points, and a transversal of the base point's
/// orbit under them.
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;                 // BFS order, orbit[0] == base
  std::vector<std::int32_t> orbit_index;    // point -> index into orbit, -1 if absent
  std::vector<Permutation> transversal;     // transversal[i](base) == orbit[i]
  std::vector<Permutation> transversal_inv;
};

/// Deterministic Schreier-Sims chain with base = moved points in increasing
/// order.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators);

  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::size_t degree() const { return degree_; }

  BigInt order() const;

  /// Sifts g through the chain and returns the residue together with the
  /// number of levels passed. g is a member iff the residue is the identity
  /// after passing every level.
  std::pair<Permutation, std::size_t> sift(const Permutation& g) const;

  bool contains(const Permutation& g) const;

  /// Visits every element exactly once as a product of transversal elements.
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;

  /// Uniformly distributed element (product of random transversal entries).
  Permutation uniform_element(SplitMix64& rng) const;

 private:
  void recompute_orbit(std::size_t level);

  std::size_t degree_;
  std::vector<ChainLevel> levels_;
};

/// A permutation group presented by generators. The stabilizer chain is built
/// on first use and shared between copies.
class PermGroup {
 public:
  /// Throws std::invalid_argument if generators is empty or degrees differ.
  explicit PermGroup(std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  const StabilizerChain& chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(const Permutation& p) const;

  /// Largest t such that the group is transitive on ordered t-tuples of
  /// distinct points.
  std::size_t transitivity_degree() const;
  bool is_transitive() const { return transitivity_degree() >= 1; }

  /// Orbit of a point under the generators, in BFS order.
  std::vector<Point> orbit(Point x) const;

 private:
  struct ChainCache {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<ChainCache> cache_;
};

/// Product-replacement ("rattle") sampler: a pool of slots seeded by the
/// generators, mixed for ten rounds, with an accumulator that multiplies in
/// the replaced slot on every step.
class ProductReplacement {
 public:
  ProductReplacement(const PermGroup& group, std::uint64_t seed);

  Permutation next();

  static constexpr std::size_t kMinSlots = 10;
  static constexpr std::size_t kMixingRounds = 10;

 private:
  void step();

  SplitMix64 rng_;
  std::vector<Permutation> slots_;
  Permutation accumulator_;
};

/// The first element drawn by a ProductReplacement seeded with seed.
Permutation random_element(const PermGroup& group, std::uint64_t seed);

}  // namespace heartlab::perm
