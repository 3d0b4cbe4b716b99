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

#include <doctest.h>

#include <set>
#include <stdexcept>

#include "heartlab/groupzoo.hpp"
#include "heartlab/permgroup.hpp"
#include "support/oracles.hpp"

using heartlab::SplitMix64;
using heartlab::perm::CycleType;
using heartlab::perm::PermGroup;
using heartlab::perm::Permutation;
using heartlab::perm::ProductReplacement;
namespace zoo = heartlab::zoo;

namespace {

oracle::Images images_of(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

std::vector<oracle::Images> generator_images(const PermGroup& g) {
  std::vector<oracle::Images> out;
  for (const auto& p : g.generators()) out.push_back(images_of(p));
  return out;
}

Permutation cyc(std::size_t n, std::initializer_list<std::initializer_list<heartlab::perm::Point>> c) {
  return Permutation::from_cycles(n, c);
}

}  // namespace

TEST_CASE("permutation validation and composition convention") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), std::invalid_argument);

  const auto p = cyc(5, {{0, 2, 4}, {1, 3}});
  CHECK(compose(Permutation::identity(5), p) == p);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(cyc(3, {{0, 1}}), cyc(3, {{0, 1}})).is_identity());

  // q acts first: (0 1 2) o (0 1) sends 0 -> 1 -> 2, 1 -> 0 -> 1, 2 -> 2 -> 0.
  const auto r = compose(cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}}));
  CHECK(r == Permutation({2, 1, 0}));
  for (heartlab::perm::Point x = 0; x < 3; ++x) CHECK(r(x) == cyc(3, {{0, 1, 2}})(cyc(3, {{0, 1}})(x)));
}

TEST_CASE("cycle types") {
  CHECK(Permutation::identity(5).cycle_type() == CycleType({1, 1, 1, 1, 1}));
  CHECK(cyc(5, {{0, 1, 2}, {3, 4}}).cycle_type() == CycleType({3, 2}));
  CHECK(cyc(5, {{0, 1, 2}, {3, 4}}).cycle_type().to_string() == "[3,2]");
  CHECK(cyc(5, {{0, 1, 2}, {3, 4}}).order() == 6);
  CHECK_FALSE(cyc(4, {{0, 1}}).is_even());

  // Every order-11 element of M11 is an 11-cycle, by closure enumeration.
  const auto m11 = zoo::mathieu(11);
  std::size_t order11 = 0;
  for (const auto& g : oracle::closure(generator_images(m11))) {
    Permutation p(std::vector<heartlab::perm::Point>(g.begin(), g.end()));
    if (p.order() == 11) {
      ++order11;
      CHECK(p.cycle_type() == CycleType({11}));
    }
  }
  CHECK(order11 == 1440);
}

TEST_CASE("cycle type is a conjugation invariant") {
  const auto m12 = zoo::mathieu(12);
  ProductReplacement pr(m12, 7);
  for (int i = 0; i < 200; ++i) {
    const auto p = pr.next();
    const auto g = pr.next();
    CHECK(conjugate(p, g).cycle_type() == p.cycle_type());
    CHECK(oracle::cycle_lengths(images_of(p)) == p.cycle_type().lengths);
  }
}

TEST_CASE("stabilizer chain orders and membership") {
  PermGroup s5({cyc(5, {{0, 1}}), cyc(5, {{0, 1, 2, 3, 4}})});
  CHECK(s5.order() == 120);
  const auto a5 = zoo::alternating(5);
  CHECK(a5.order() == 60);
  CHECK_FALSE(a5.contains(cyc(5, {{0, 1}})));
  CHECK(a5.contains(cyc(5, {{0, 1}, {2, 3}})));

  const auto m11 = zoo::mathieu(11);
  CHECK(m11.order() == 7920);
  CHECK(oracle::closure(generator_images(m11)).size() == 7920);

  CHECK(PermGroup::trivial(4).order() == 1);
  CHECK_THROWS_AS(PermGroup({}), std::invalid_argument);
  CHECK_THROWS_AS(PermGroup({Permutation::identity(3), Permutation::identity(4)}), std::invalid_argument);
}

TEST_CASE("chain order is the product of transversal sizes and agrees with closure") {
  const std::vector<PermGroup> groups{zoo::symmetric(6), zoo::alternating(7), zoo::mathieu(11), zoo::mathieu(12),
                                      zoo::psl(3, 2).group, zoo::psl(2, 8).group, zoo::pgl(2, 9).group,
                                      zoo::psl(3, 3).group, zoo::cyclic(9), zoo::dihedral(10)};
  for (const auto& g : groups) {
    heartlab::perm::BigInt product = 1;
    for (const auto& level : g.chain().levels()) product *= level.orbit.size();
    CHECK(product == g.order());
    CHECK(oracle::closure(generator_images(g)).size() == g.order());
    for (const auto& a : g.generators()) {
      CHECK(g.contains(a));
      for (const auto& b : g.generators()) CHECK(g.contains(compose(a, b)));
    }
  }
}

TEST_CASE("for_each_element visits each element once") {
  const auto g = zoo::psl(3, 2).group;
  std::set<Permutation> seen;
  g.chain().for_each_element([&](const Permutation& p) { seen.insert(p); });
  CHECK(seen.size() == 168);
}

TEST_CASE("transitivity degrees") {
  CHECK(zoo::symmetric(5).transitivity_degree() == 5);
  CHECK(zoo::cyclic(5).transitivity_degree() == 1);
  CHECK(zoo::alternating(5).transitivity_degree() == 3);
  CHECK(zoo::alternating(9).transitivity_degree() == 7);
  CHECK(PermGroup::trivial(3).transitivity_degree() == 0);

  const auto m11 = zoo::mathieu(11);
  CHECK(m11.transitivity_degree() == 4);
  CHECK(oracle::tuple_transitivity(oracle::closure(generator_images(m11))) == 4);
  CHECK(oracle::tuple_transitivity(oracle::closure(generator_images(zoo::alternating(5)))) == 3);
  CHECK(oracle::tuple_transitivity(oracle::closure(generator_images(zoo::dihedral(7)))) == 1);
}

TEST_CASE("transitivity degree divides the order by falling factorials") {
  const std::vector<PermGroup> groups{zoo::mathieu(22), zoo::mathieu(23), zoo::psl(3, 4).group,
                                      zoo::pgl(2, 16).group, zoo::alternating(8), zoo::dihedral(9)};
  for (const auto& g : groups) {
    const auto t = g.transitivity_degree();
    heartlab::perm::BigInt falling = 1;
    for (std::size_t i = 0; i < t; ++i) falling *= g.degree() - i;
    CHECK(g.order() % falling == 0);
  }
}

TEST_CASE("random elements") {
  CHECK(heartlab::perm::random_element(PermGroup::trivial(4), 3).is_identity());

  const auto s3 = zoo::symmetric(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(s3.contains(heartlab::perm::random_element(s3, seed)));
  CHECK(heartlab::perm::random_element(s3, 5) == heartlab::perm::random_element(s3, 5));

  const auto m11 = zoo::mathieu(11);
  ProductReplacement a(m11, 42);
  ProductReplacement b(m11, 42);
  for (int i = 0; i < 50; ++i) CHECK(a.next() == b.next());

  SplitMix64 rng(9);
  for (int i = 0; i < 50; ++i) CHECK(m11.contains(m11.chain().uniform_element(rng)));
}

TEST_CASE("M12 samples land in the exhaustive cycle-type set") {
  const auto m12 = zoo::mathieu(12);
  std::set<std::vector<std::uint32_t>> exhaustive;
  for (const auto& g : oracle::closure(generator_images(m12))) exhaustive.insert(oracle::cycle_lengths(g));

  ProductReplacement pr(m12, 0);
  std::set<std::vector<std::uint32_t>> sampled;
  for (int i = 0; i < 100000; ++i) sampled.insert(pr.next().cycle_type().lengths);
  for (const auto& t : sampled) CHECK(exhaustive.count(t) == 1);
  // Only the identity class is too small to expect in 10^5 draws.
  CHECK(sampled.size() + 1 >= exhaustive.size());
}

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
}
