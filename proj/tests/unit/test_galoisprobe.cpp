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

#include <algorithm>
#include <stdexcept>

#include "heartlab/galoisprobe.hpp"
#include "heartlab/random.hpp"
#include "support/oracles.hpp"

using namespace heartlab::probe;
using heartlab::zoo::GroupId;
namespace zoo = heartlab::zoo;

namespace {

std::vector<std::int64_t> reduce(const IntPolynomial& f, std::int64_t p) {
  std::vector<std::int64_t> out;
  for (const auto& c : f.coeffs()) {
    Integer r = c % p;
    if (r < 0) r += p;
    out.push_back(static_cast<std::int64_t>(r));
  }
  return out;
}

std::vector<std::uint32_t> descending(std::vector<std::size_t> v) {
  std::sort(v.rbegin(), v.rend());
  return {v.begin(), v.end()};
}

bool is_odd_type(const CycleType& t) {
  std::size_t transpositions = 0;
  for (auto len : t.lengths) transpositions += len - 1;
  return transpositions % 2 == 1;
}

std::vector<oracle::Images> generator_images(const heartlab::perm::PermGroup& g) {
  std::vector<oracle::Images> out;
  for (const auto& p : g.generators()) out.emplace_back(p.images().begin(), p.images().end());
  return out;
}

IntPolynomial random_poly(heartlab::SplitMix64& rng) {
  const std::size_t deg = 1 + rng.below(9);
  std::vector<Integer> c(deg + 1);
  for (auto& x : c) x = static_cast<long>(rng.below(41)) - 20;
  if (c.back() == 0) c.back() = 1;
  if (rng.below(8) == 0) c[0] = Integer("123456789012345678901234567890") * (rng.coin() ? 1 : -1);
  return IntPolynomial(c);
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(parse_poly("x^7-7*x+3").coeffs() == std::vector<Integer>{3, -7, 0, 0, 0, 0, 0, 1});
  CHECK(parse_poly("2*x^2").coeffs() == std::vector<Integer>{0, 0, 2});
  CHECK(parse_poly("2x^2") == parse_poly("2*x^2"));
  CHECK(parse_poly("x^4+1").coeffs() == std::vector<Integer>{1, 0, 0, 0, 1});
  CHECK(parse_poly(" ( x^2 - x + x ) ") == parse_poly("x^2"));
  CHECK(parse_poly("-x+x^3").coeffs() == std::vector<Integer>{0, -1, 0, 1});
  CHECK(parse_poly("x^2 + 99999999999999999999999").coeffs().front() == Integer("99999999999999999999999"));
  CHECK(parse_poly("x^7-7*x+3").to_string() == "x^7-7*x+3");
  CHECK(parse_poly("-2*x^3+x").to_string() == "-2*x^3+x");

  for (const auto* bad : {"", "x^", "x^-2", "2.5*x", "x/2", "y^2+1", "x^2+", "(x^2", "x^2)", "7", "x^2 x", "x**2",
                          "x^100001"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_poly(bad), ParseError);
  }
  try {
    parse_poly("x^2+1.5");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("column ", 0) == 0);
    CHECK(std::string(e.what()).find("non-integer") != std::string::npos);
  }
  CHECK_THROWS_AS(IntPolynomial({Integer(4), Integer(0)}), std::invalid_argument);
}

TEST_CASE("parse and print round-trip on a corpus") {
  heartlab::SplitMix64 rng(100);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_poly(rng);
    CAPTURE(f.to_string());
    CHECK(parse_poly(f.to_string()) == f);
  }
}

TEST_CASE("cycle types mod p") {
  const auto cubic = parse_poly("x^3-2");
  REQUIRE(cycle_type_mod_p(cubic, 5).has_value());
  CHECK(*cycle_type_mod_p(cubic, 5) == CycleType({2, 1}));
  CHECK(oracle::roots({3, 0, 0, 1}, 5) == std::vector<std::int64_t>{3});
  CHECK_FALSE(cycle_type_mod_p(parse_poly("x^2+1"), 2).has_value());
  CHECK(*cycle_type_mod_p(parse_poly("x^2+1"), 5) == CycleType({1, 1}));
  CHECK(oracle::roots({1, 0, 1}, 5) == std::vector<std::int64_t>{2, 3});
  CHECK_THROWS_AS(cycle_type_mod_p(parse_poly("3*x^2+1"), 3), std::invalid_argument);
  CHECK_THROWS_AS(cycle_type_mod_p(parse_poly("x^2+1"), 9), std::invalid_argument);
}

TEST_CASE("cycle types agree with exhaustive factor search") {
  heartlab::SplitMix64 rng(12);
  const std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Integer> c(2 + rng.below(4));
    for (auto& x : c) x = static_cast<long>(rng.below(31)) - 15;
    c.back() = 1;
    const IntPolynomial f(c);
    for (auto p : primes) {
      const auto t = cycle_type_mod_p(f, static_cast<std::uint64_t>(p));
      const auto reduced = reduce(f, p);
      const auto degrees = oracle::factor_degrees_small(reduced, p);
      // f mod p is squarefree exactly when no factor degree repeats with the
      // same factor; compare against the discriminant instead.
      std::vector<Integer> ic(c.begin(), c.end());
      const bool ramified = oracle::discriminant(ic) % p == 0;
      CHECK(t.has_value() == !ramified);
      if (t) CHECK(t->lengths == descending(degrees));
    }
  }
}

TEST_CASE("group cycle type sets") {
  const auto c5 = group_cycle_types(zoo::cyclic(5), 10, 0);
  CHECK(c5.exact);
  CHECK(c5.types == std::set<CycleType>{CycleType({1, 1, 1, 1, 1}), CycleType({5})});

  const auto s4 = group_cycle_types(zoo::symmetric(4), 10, 0);
  CHECK(s4.exact);
  CHECK(s4.types.size() == 5);

  const auto m11 = zoo::mathieu(11);
  const auto t = group_cycle_types(m11, 10, 0);
  CHECK(t.exact);
  std::set<CycleType> expected;
  for (const auto& g : oracle::closure(generator_images(m11))) expected.insert(CycleType(oracle::cycle_lengths(g)));
  CHECK(t.types == expected);
  CHECK(t.types.count(CycleType({11})) == 1);
  CHECK(t.types.count(CycleType({8, 2, 1})) == 1);

  const auto big = group_cycle_types(zoo::mathieu(23), 500, 0);
  CHECK_FALSE(big.exact);
  CHECK_FALSE(big.types.empty());
  const auto m23 = zoo::mathieu(23);
  for (const auto& ct : big.types) CHECK(ct.degree() == 23);
}

TEST_CASE("x^4+1 never stays irreducible") {
  const auto f = parse_poly("x^4+1");
  const auto report = probe(f, 50, {GroupId::symmetric(4)}, 0);
  CHECK_FALSE(report.irreducibility_evidence);
  CHECK(report.primes_used.size() == 50);
  CHECK(report.ramified_primes == std::vector<std::uint64_t>{2});
  for (std::int64_t p = 3; p < 250; ++p) {
    if (!heartlab::ff::is_prime(static_cast<std::uint64_t>(p))) continue;
    CHECK(oracle::factor_degrees_small({1, 0, 0, 0, 1}, p) != std::vector<std::size_t>{4});
  }
  CHECK(report.candidates.front().verdict == Consistency::Consistent);
}

TEST_CASE("x^2+1 against S2") {
  const auto report = probe(parse_poly("x^2+1"), 30, {GroupId::symmetric(2)}, 0);
  CHECK(report.candidates.front().verdict == Consistency::Consistent);
  for (const auto& [type, count] : report.histogram) {
    CHECK((type == CycleType({1, 1}) || type == CycleType({2})));
  }
  CHECK(report.irreducibility_evidence);
}

TEST_CASE("an odd Frobenius type rules out A5 for x^5-x-1") {
  const auto f = parse_poly("x^5-x-1");
  const auto report = probe(f, 100, {GroupId::alternating(5), GroupId::symmetric(5)}, 0);
  REQUIRE(report.candidates.size() == 2);
  const auto& a5 = report.candidates[0];
  CHECK(a5.verdict == Consistency::Inconsistent);
  REQUIRE(a5.witness.has_value());
  CHECK(is_odd_type(*a5.witness));
  CHECK(report.candidates[1].verdict == Consistency::Consistent);

  // The witness type actually occurs: find a prime where the exhaustive
  // search produces it.
  bool found = false;
  for (auto p : report.primes_used) {
    if (std::find(report.ramified_primes.begin(), report.ramified_primes.end(), p) != report.ramified_primes.end()) {
      continue;
    }
    const auto deg = oracle::factor_degrees_small({-1, -1, 0, 0, 0, 1}, static_cast<std::int64_t>(p));
    found = found || descending(deg) == a5.witness->lengths;
  }
  CHECK(found);
  const auto a5types = group_cycle_types(zoo::alternating(5), 10, 0);
  CHECK(a5types.types.count(*a5.witness) == 0);
}

TEST_CASE("report invariants") {
  const std::vector<std::pair<std::string, std::vector<GroupId>>> corpus{
      {"x^5-x-1", {GroupId::symmetric(5), GroupId::alternating(5), GroupId::cyclic(5), GroupId::dihedral(5)}},
      {"x^7-7*x+3", {GroupId::psl(3, 2), GroupId::alternating(7)}},
      {"x^11-3*x+1", {GroupId::mathieu(11)}},
      {"3*x^4+x+1", {GroupId::symmetric(4)}},
      {"x^6+x^3+1", {GroupId::symmetric(6)}},
      {"x^23-x-1", {GroupId::mathieu(23)}},
  };
  for (const auto& [text, candidates] : corpus) {
    CAPTURE(text);
    const auto f = parse_poly(text);
    const auto report = probe(f, 40, candidates, 0);
    CHECK(report.primes_used.size() == 40);
    std::size_t total = 0;
    for (const auto& [type, count] : report.histogram) {
      CHECK(type.degree() == f.degree());
      total += count;
    }
    CHECK(total == report.primes_used.size() - report.ramified_primes.size());
    for (auto p : report.primes_used) CHECK(f.leading() % p != 0);

    std::vector<Integer> c(f.coeffs().begin(), f.coeffs().end());
    const auto disc = oracle::discriminant(c);
    for (auto p : report.primes_used) {
      const bool ram = std::find(report.ramified_primes.begin(), report.ramified_primes.end(), p) !=
                       report.ramified_primes.end();
      CHECK(ram == (disc % p == 0));
    }

    for (const auto& v : report.candidates) {
      if (v.verdict == Consistency::Inconsistent) {
        CHECK(v.exact);
        REQUIRE(v.witness.has_value());
        CHECK(report.histogram.count(*v.witness) == 1);
        CHECK(group_cycle_types(zoo::build(v.group), 10, 0).types.count(*v.witness) == 0);
      }
      if (!v.exact) CHECK(v.verdict != Consistency::Inconsistent);
    }

    const auto again = probe(f, 40, candidates, 0);
    CHECK(again.histogram == report.histogram);
    CHECK(again.primes_used == report.primes_used);
    CHECK(again.candidates.size() == report.candidates.size());
    for (std::size_t i = 0; i < again.candidates.size(); ++i) {
      CHECK(again.candidates[i].verdict == report.candidates[i].verdict);
      CHECK(again.candidates[i].witness == report.candidates[i].witness);
    }
  }
  CHECK_THROWS_AS(probe(parse_poly("x^5-x-1"), 10, {GroupId::mathieu(11)}, 0), std::invalid_argument);
}

TEST_CASE("discriminant oracle sanity") {
  // disc(x^2 + b x + c) = b^2 - 4c; disc(x^3 - 2) = -108.
  CHECK(oracle::discriminant({Integer(3), Integer(5), Integer(1)}) == 13);
  CHECK(oracle::discriminant({Integer(-2), Integer(0), Integer(0), Integer(1)}) == 108);
  CHECK(oracle::resultant({Integer(-1), Integer(1)}, {Integer(-2), Integer(1)}) == -1);
}
