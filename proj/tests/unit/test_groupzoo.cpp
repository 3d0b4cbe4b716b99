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

#include <numeric>
#include <stdexcept>

#include "heartlab/groupzoo.hpp"
#include "support/oracles.hpp"

namespace zoo = heartlab::zoo;
using heartlab::perm::BigInt;
using heartlab::perm::PermGroup;
using heartlab::perm::ProductReplacement;
using zoo::GroupId;

namespace {

BigInt falling(std::size_t n, std::size_t t) {
  BigInt out = 1;
  for (std::size_t i = 0; i < t; ++i) out *= n - i;
  return out;
}

/// Independent closed form for |PSL_m(F_q)|.
BigInt psl_formula(unsigned m, std::uint64_t q) {
  BigInt qq = q;
  BigInt order = pow(qq, m * (m - 1) / 2);
  for (unsigned i = 2; i <= m; ++i) order *= pow(qq, i) - 1;
  return order / std::gcd<std::uint64_t>(m, q - 1);
}

}  // namespace

TEST_CASE("symmetric and alternating groups") {
  CHECK(zoo::symmetric(5).order() == 120);
  CHECK(zoo::symmetric(2).order() == 2);
  const auto a5 = zoo::alternating(5);
  CHECK(a5.order() == 60);
  CHECK(a5.transitivity_degree() == 3);
  CHECK(zoo::alternating(9).transitivity_degree() == 7);
  CHECK(zoo::symmetric(9).transitivity_degree() == 9);
  for (unsigned n = 3; n <= 12; ++n) {
    CHECK(zoo::symmetric(n).order() == GroupId::symmetric(n).expected_order());
    CHECK(zoo::alternating(n).order() == GroupId::alternating(n).expected_order());
    const auto an = zoo::alternating(n);
    for (const auto& g : an.generators()) CHECK(g.is_even());
  }
  CHECK_THROWS_AS(zoo::symmetric(1), std::invalid_argument);
  CHECK_THROWS_AS(zoo::alternating(2), std::invalid_argument);
}

TEST_CASE("control families") {
  for (unsigned n = 5; n <= 24; ++n) {
    CHECK(zoo::cyclic(n).order() == n);
    CHECK(zoo::dihedral(n).order() == 2 * n);
    CHECK(zoo::cyclic(n).transitivity_degree() == 1);
    CHECK(zoo::dihedral(n).transitivity_degree() == 1);
  }
}

TEST_CASE("Mathieu groups") {
  const std::vector<std::tuple<unsigned, unsigned long, std::size_t>> expected{
      {11, 7920, 4}, {12, 95040, 5}, {22, 443520, 3}, {23, 10200960, 4}, {24, 244823040, 5}};
  for (auto [n, order, t] : expected) {
    CAPTURE(n);
    const auto g = zoo::mathieu(n);
    CHECK(g.degree() == n);
    CHECK(g.order() == order);
    CHECK(g.transitivity_degree() == t);
    CHECK(g.order() % falling(n, t) == 0);
  }
  CHECK(zoo::mathieu(23).order() == 23 * zoo::mathieu(22).order());
  CHECK_THROWS_AS(zoo::mathieu(13), std::invalid_argument);

  for (unsigned n : {11U, 12U}) {
    std::vector<oracle::Images> gens;
    const auto g = zoo::mathieu(n);
    for (const auto& p : g.generators()) gens.emplace_back(p.images().begin(), p.images().end());
    const auto all = oracle::closure(gens);
    CHECK(all.size() == g.order());
    CHECK(oracle::tuple_transitivity(all) == g.transitivity_degree());
  }

  // M24: chain order equals 24*23*22*21*20 times the order of the stabilizer
  // of the first five base points.
  const auto m24 = zoo::mathieu(24);
  const auto& levels = m24.chain().levels();
  BigInt tail = 1;
  for (std::size_t i = 5; i < levels.size(); ++i) tail *= levels[i].orbit.size();
  CHECK(m24.order() == falling(24, 5) * tail);
}

TEST_CASE("Mathieu groups are not collapsed by normal closure") {
  for (unsigned n : {11U, 12U, 22U, 23U, 24U}) {
    const auto g = zoo::mathieu(n);
    ProductReplacement pr(g, n);
    auto x = pr.next();
    while (x.is_identity()) x = pr.next();
    std::vector<heartlab::perm::Permutation> conjugates;
    for (int i = 0; i < 6; ++i) conjugates.push_back(conjugate(x, pr.next()));
    CHECK(PermGroup(conjugates).order() == g.order());
  }
}

TEST_CASE("projective linear groups") {
  const auto l32 = zoo::psl(3, 2);
  CHECK(l32.group.degree() == 7);
  CHECK(l32.group.order() == 168);
  std::vector<oracle::Images> gens;
  for (const auto& p : l32.group.generators()) gens.emplace_back(p.images().begin(), p.images().end());
  CHECK(oracle::closure(gens).size() == 168);
  CHECK(zoo::psl(3, 4).group.degree() == 21);
  CHECK(zoo::psl(3, 4).group.order() == 20160);
  CHECK(zoo::psl(4, 3).group.degree() == 40);
  CHECK(zoo::psl(4, 3).group.order() == 6065280);
  CHECK(zoo::psl(3, 4).points.size() == 21);
  CHECK_THROWS_AS(zoo::psl(2, 6), std::invalid_argument);
  CHECK_THROWS_AS(zoo::psl(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(zoo::psl(2, 1ULL << 17), std::invalid_argument);
}

TEST_CASE("projective group orders, double transitivity and PSL inside PGL") {
  for (unsigned m = 2; m <= 6; ++m) {
    for (std::uint64_t q = 2; q <= 101; ++q) {
      if (heartlab::ff::prime_power(q).first == 0) continue;
      const auto id = GroupId::psl(m, q);
      if (id.natural_degree() > 100) continue;
      CAPTURE(m);
      CAPTURE(q);
      const auto s = zoo::psl(m, q);
      const auto g = zoo::pgl(m, q);
      CHECK(s.group.order() == psl_formula(m, q));
      CHECK(g.group.order() == psl_formula(m, q) * std::gcd<std::uint64_t>(m, q - 1));
      CHECK(s.group.order() == zoo::psl_order(m, q));
      CHECK(g.group.order() == zoo::pgl_order(m, q));
      CHECK(s.group.transitivity_degree() >= 2);
      for (const auto& x : s.group.generators()) CHECK(g.group.contains(x));
      if (std::gcd<std::uint64_t>(m, q - 1) == 1) {
        for (const auto& x : g.group.generators()) CHECK(s.group.contains(x));
      }
    }
  }
}

TEST_CASE("group specification strings") {
  CHECK(GroupId::parse("M11") == GroupId::mathieu(11));
  CHECK(GroupId::parse("m24") == GroupId::mathieu(24));
  CHECK(GroupId::parse("S7") == GroupId::symmetric(7));
  CHECK(GroupId::parse("A9") == GroupId::alternating(9));
  CHECK(GroupId::parse("PSL(3,4)") == GroupId::psl(3, 4));
  CHECK(GroupId::parse(" pgl( 3 , 3 ) ") == GroupId::pgl(3, 3));
  CHECK(GroupId::parse("C5") == GroupId::cyclic(5));
  CHECK(GroupId::parse("D7") == GroupId::dihedral(7));
  for (const auto* bad : {"", "M13", "PSL(3,6)", "PSL(3)", "X5", "S", "PSL(1,2)", "A2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(GroupId::parse(bad), std::invalid_argument);
  }
  for (const auto& id : {GroupId::mathieu(22), GroupId::psl(4, 3), GroupId::pgl(2, 8), GroupId::symmetric(6),
                         GroupId::dihedral(9)}) {
    CHECK(GroupId::parse(id.to_string()) == id);
    CHECK(zoo::build(id).order() == id.expected_order());
    CHECK(zoo::build(id).degree() == id.natural_degree());
  }
  CHECK(GroupId::psl(3, 4).characteristic() == 2);
  CHECK(GroupId::psl(2, 3).is_simple_nonabelian() == false);
  CHECK(GroupId::pgl(3, 4).is_simple_nonabelian() == false);
  CHECK(GroupId::mathieu(11).is_simple_nonabelian());
}
