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

#include "heartlab/auditor.hpp"
#include "heartlab/citations.hpp"

using namespace heartlab::audit;
using heartlab::rep::Decomposition;
using heartlab::rep::Verdict;
using heartlab::zoo::GroupId;

namespace {

Evidence good_evidence(std::size_t t, std::size_t heart_dim) {
  Evidence ev;
  ev.transitivity_degree = t;
  ev.heart_dimension = heart_dim;
  ev.endo_dimension = 1;
  ev.irreducibility = Verdict::Irreducible;
  ev.indecomposability = Decomposition::Indecomposable;
  return ev;
}

void check_citations(const UnboundedCertificate& cert) {
  CHECK_FALSE(cert.steps.empty());
  for (const auto& step : cert.steps) {
    CHECK_FALSE(step.citations.empty());
    for (const auto& key : step.citations) {
      CAPTURE(key);
      CHECK(is_citation(key));
    }
  }
}

}  // namespace

TEST_CASE("genus") {
  CHECK(genus_of(23) == 11);
  CHECK(genus_of(22) == 10);
  CHECK(genus_of(21) == 10);
  CHECK(genus_of(5) == 2);
  for (unsigned n = 5; n <= 100; ++n) {
    CHECK(genus_of(n) >= 2);
    CHECK(2 * genus_of(n) + (n % 2 == 1 ? 1U : 2U) == n);
  }
  CHECK_THROWS_AS(genus_of(4), std::invalid_argument);
}

TEST_CASE("cyclotomic obstruction") {
  CHECK(cyclotomic_obstruction(7, 3));
  CHECK_FALSE(cyclotomic_obstruction(2, 1));
  CHECK_FALSE(cyclotomic_obstruction(11, 10));
  CHECK(cyclotomic_obstruction(11, 9));
  CHECK_THROWS_AS(cyclotomic_obstruction(9, 3), std::invalid_argument);
  CHECK_THROWS_AS(cyclotomic_obstruction(7, 0), std::invalid_argument);
}

TEST_CASE("minimal projective degree bounds") {
  CHECK(min_projective_degree_bound(GroupId::mathieu(23)).min_cplx_proj_degree == 22);
  CHECK(min_projective_degree_bound(GroupId::mathieu(22)).min_cplx_proj_degree == 10);
  CHECK(min_projective_degree_bound(GroupId::mathieu(11)).min_cplx_proj_degree == 10);
  CHECK(min_projective_degree_bound(GroupId::psl(3, 8)).min_cplx_proj_degree == 72);
  CHECK(min_projective_degree_bound(GroupId::psl(4, 3)).min_cplx_proj_degree == 26);
  CHECK(min_projective_degree_bound(GroupId::psl(3, 3)).min_cplx_proj_degree == 12);
  CHECK(min_projective_degree_bound(GroupId::psl(4, 4)).min_cplx_proj_degree == 84);
  CHECK(min_projective_degree_bound(GroupId::psl(2, 16)).min_cplx_proj_degree == 15);
  CHECK(min_projective_degree_bound(GroupId::alternating(9)).min_cplx_proj_degree == 8);
  CHECK(min_projective_degree_bound(GroupId::alternating(12)).min_cplx_proj_degree == 10);
  CHECK_THROWS_AS(min_projective_degree_bound(GroupId::psl(3, 4)), NoFactError);
  CHECK_THROWS_AS(min_projective_degree_bound(GroupId::psl(2, 9)), NoFactError);
  CHECK_THROWS_AS(min_projective_degree_bound(GroupId::alternating(7)), NoFactError);

  const auto m22 = min_projective_degree_bound(GroupId::mathieu(22));
  CHECK(m22.has_flag(Flag::NoLinearAtMinDegree));
  CHECK(m22.has_flag(Flag::NoRealRepAtDegreeG));
  const auto l44 = min_projective_degree_bound(GroupId::psl(4, 4));
  CHECK(l44.has_flag(Flag::LieTypeChar2));
  CHECK(l44.cover_rule == CoverRule::KleidmanLiebeckM4);
}

TEST_CASE("bundled fact table invariants") {
  const auto& table = bundled_fact_table();
  CHECK(table.size() >= 9);
  for (const auto& rec : table) {
    CHECK_FALSE(rec.citations.empty());
    for (const auto& key : rec.citations) CHECK(is_citation(key));
    const bool char2 = std::find(rec.flags.begin(), rec.flags.end(), Flag::LieTypeChar2) != rec.flags.end();
    CHECK(char2 == (rec.cover_rule == CoverRule::KleidmanLiebeckM4));
    if (rec.bound == BoundExpr::Constant) CHECK(rec.bound_constant >= 2);
  }
}

TEST_CASE("citation registry") {
  std::set<std::string_view> keys;
  for (const auto& c : kCitations) {
    CHECK(keys.insert(c.key).second);
    CHECK_FALSE(c.reference.empty());
    CHECK(reference_for(c.key) == c.reference);
  }
  CHECK(is_citation("atlas"));
  CHECK_FALSE(is_citation("nonexistent"));
  CHECK_THROWS_AS(reference_for("nonexistent"), std::out_of_range);
}

TEST_CASE("fact table parse errors") {
  const std::string good = "fact\tmathieu\tn=11\t10\t-\tfeit_tits_transfer\tatlas\n";
  CHECK(parse_fact_table(good).size() == 1);
  CHECK(parse_fact_table("# comment\n\n" + good).front().line == 3);
  const std::vector<std::string> bad{
      "fact\tmathieu\tn=11\t10\t-\tfeit_tits_transfer\n",
      "fuct\tmathieu\tn=11\t10\t-\tfeit_tits_transfer\tatlas\n",
      "fact\tsuzuki\tq=8\t14\t-\tfeit_tits_transfer\tatlas\n",
      "fact\tmathieu\tn=11\t1\t-\tfeit_tits_transfer\tatlas\n",
      "fact\tmathieu\tn=11\tq^2\t-\tfeit_tits_transfer\tatlas\n",
      "fact\tmathieu\tn=11\t10\tshiny\tfeit_tits_transfer\tatlas\n",
      "fact\tmathieu\tn=11\t10\t-\tmagic\tatlas\n",
      "fact\tmathieu\tn=11\t10\t-\tfeit_tits_transfer\tnot-a-key\n",
      "fact\tmathieu\tn=11\t10\t-\tfeit_tits_transfer\t\n",
      "fact\tmathieu\tz=11\t10\t-\tfeit_tits_transfer\tatlas\n",
      "fact\tpsl\tq=even;m>=3\t(q^m-q)/(q-1)\tlie_type_char2\tfeit_tits_transfer\tatlas\n",
      "fact\tpsl\tq=even;m>=3\t(q^m-q)/(q-1)\t-\tkleidman_liebeck_m4\tatlas\n",
  };
  for (const auto& text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_fact_table("# header\n" + text), FactTableError);
    try {
      parse_fact_table("# header\n" + text);
    } catch (const FactTableError& e) {
      CHECK(e.line() == 2);
    }
  }
}

TEST_CASE("a custom fact table changes the certificate") {
  const auto table = parse_fact_table("fact\tmathieu\tn=23\t5\t-\tfeit_tits_transfer\tatlas,feit-tits\n");
  const auto cert = check_unbounded(GroupId::mathieu(23), 11, table);
  CHECK_FALSE(cert.complete);
  CHECK(cert.failure.find("does not exceed") != std::string::npos);
  CHECK_FALSE(check_unbounded(GroupId::mathieu(24), 11, table).complete);
  CHECK_FALSE(find_fact(GroupId::mathieu(24), table).has_value());
}

TEST_CASE("unboundedness certificates") {
  const auto m23 = check_unbounded(GroupId::mathieu(23), 11);
  CHECK(m23.complete);
  CHECK(m23.rule == "R1");
  check_citations(m23);

  const auto m22 = check_unbounded(GroupId::mathieu(22), 10);
  CHECK(m22.complete);
  CHECK(m22.rule == "R3");
  check_citations(m22);

  const auto l44 = check_unbounded(GroupId::psl(4, 4), 42);
  CHECK(l44.complete);
  CHECK(l44.rule == "R2");
  check_citations(l44);

  const auto r0 = check_unbounded(GroupId::alternating(5), 2);
  CHECK(r0.complete);
  CHECK(r0.rule == "R0");
  check_citations(r0);

  const auto r4 = check_unbounded(GroupId::psl(3, 2), 3);
  CHECK(r4.complete);
  CHECK(r4.rule == "R4");
  check_citations(r4);

  CHECK_FALSE(check_unbounded(GroupId::mathieu(23), 22).complete);
  CHECK_FALSE(check_unbounded(GroupId::psl(2, 11), 5).complete);
}

TEST_CASE("m = 4 inequality in characteristic 2") {
  for (std::uint64_t q : {4ULL, 8ULL, 16ULL}) {
    CHECK((q * q * q + q * q + q) / 2 < q * q * q);
  }
  // g = q^3 breaks the inequality even when the degree bound exceeds g.
  const auto cert = check_unbounded(GroupId::psl(4, 4), 64);
  CHECK_FALSE(cert.complete);
}

TEST_CASE("simple subgroups and exclusions") {
  CHECK(simple_subgroup(GroupId::symmetric(7)) == GroupId::alternating(7));
  CHECK(simple_subgroup(GroupId::pgl(3, 4)) == GroupId::psl(3, 4));
  CHECK(simple_subgroup(GroupId::mathieu(12)) == GroupId::mathieu(12));
  CHECK_FALSE(simple_subgroup(GroupId::cyclic(7)).has_value());
  CHECK_FALSE(simple_subgroup(GroupId::dihedral(7)).has_value());
  CHECK(exclusion_reason(GroupId::psl(2, 2)).has_value());
  CHECK(exclusion_reason(GroupId::pgl(4, 2)).has_value());
  CHECK(exclusion_reason(GroupId::psl(3, 4)).has_value());
  CHECK_FALSE(exclusion_reason(GroupId::psl(3, 2)).has_value());
  CHECK_FALSE(exclusion_reason(GroupId::psl(4, 4)).has_value());
  CHECK_FALSE(exclusion_reason(GroupId::psl(4, 3)).has_value());
}

TEST_CASE("audit examples") {
  const auto m23 = audit(GroupId::mathieu(23), 23);
  CHECK(m23.status == Status::Certified);
  CHECK(m23.branch == "i");
  CHECK(m23.genus == 11);
  check_citations(m23.unbounded);

  const auto l34 = audit(GroupId::psl(3, 4), 21);
  CHECK(l34.status == Status::Excluded);
  CHECK(l34.reason.find("(m,q)=(3,4)") != std::string::npos);

  const auto l33 = audit(GroupId::psl(3, 3), 13);
  CHECK(l33.status == Status::Certified);
  CHECK(l33.branch == "i");

  const auto m24 = audit(GroupId::mathieu(24), 24);
  CHECK(m24.status == Status::Certified);
  CHECK(m24.branch == "ii");

  const auto l43 = audit(GroupId::psl(4, 3), 40);
  CHECK(l43.status == Status::Certified);
  CHECK(l43.branch == "iii");
  CHECK(l43.genus == 19);

  CHECK(audit(GroupId::psl(2, 2), 3).status == Status::Excluded);
  CHECK(audit(GroupId::cyclic(7), 7).status == Status::Inconclusive);
  CHECK(audit(GroupId::psl(2, 7), 8).status == Status::Inconclusive);
  CHECK_THROWS_AS(audit(GroupId::mathieu(23), 24), std::invalid_argument);
  CHECK_THROWS_AS(audit(GroupId::symmetric(4), 4), std::invalid_argument);
}

TEST_CASE("audits are deterministic") {
  const auto a = audit(GroupId::mathieu(22), 22, 5);
  const auto b = audit(GroupId::mathieu(22), 22, 5);
  CHECK(a.status == b.status);
  CHECK(a.reason == b.reason);
  CHECK(a.unbounded.rule == b.unbounded.rule);
  CHECK(a.evidence.witness_dimension == b.evidence.witness_dimension);
}

TEST_CASE("degrading any evidence field prevents certification") {
  const std::vector<std::tuple<GroupId, unsigned, std::size_t>> cases{
      {GroupId::mathieu(23), 23, 4}, {GroupId::mathieu(24), 24, 5}, {GroupId::psl(4, 3), 40, 2},
      {GroupId::alternating(9), 9, 7}};
  for (const auto& [id, n, t] : cases) {
    CAPTURE(id.to_string());
    const auto base = good_evidence(t, 2 * genus_of(n));
    REQUIRE(decide(id, n, base).status == Status::Certified);

    std::vector<Evidence> degraded(7, base);
    degraded[0].transitivity_degree.reset();
    degraded[1].heart_dimension.reset();
    degraded[2].endo_dimension.reset();
    degraded[3].irreducibility = Verdict::Inconclusive;
    degraded[4].indecomposability = Decomposition::Inconclusive;
    degraded[5].endo_dimension = 2;
    degraded[6].indecomposability = Decomposition::Decomposable;
    for (std::size_t i = 0; i < degraded.size(); ++i) {
      CAPTURE(i);
      const auto r = decide(id, n, degraded[i]);
      CHECK(r.status != Status::Certified);
    }
  }
}
