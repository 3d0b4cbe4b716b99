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

#include "heartlab/auditor.hpp"

#include <stdexcept>

#include "heartlab/citations.hpp"
#include "heartlab/finitefield.hpp"

namespace heartlab::audit {

namespace {

std::vector<std::string> keys(std::initializer_list<std::string_view> list) {
  std::vector<std::string> out;
  for (auto k : list) out.emplace_back(k);
  return out;
}

std::vector<std::string> without(const std::vector<std::string>& cites, std::string_view key) {
  std::vector<std::string> out;
  for (const auto& c : cites) {
    if (c != key) out.push_back(c);
  }
  return out;
}

std::uint64_t cube(std::uint64_t q) { return q * q * q; }

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Certified: return "certified";
    case Status::Excluded: return "excluded";
    case Status::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

unsigned genus_of(unsigned n) {
  if (n < 5) throw std::invalid_argument("genus needs n >= 5");
  return n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2;
}

bool cyclotomic_obstruction(std::uint64_t ell0, std::uint64_t dim) {
  if (!ff::is_prime(ell0)) throw std::invalid_argument("cyclotomic obstruction needs a prime order");
  if (dim < 1) throw std::invalid_argument("cyclotomic obstruction needs dim >= 1");
  return ell0 - 1 > dim;
}

std::optional<zoo::GroupId> simple_subgroup(const zoo::GroupId& id) {
  zoo::GroupId s = id;
  if (id.family == zoo::Family::Symmetric) s = zoo::GroupId::alternating(id.n);
  if (id.family == zoo::Family::PGL) s = zoo::GroupId::psl(id.m, id.q);
  if (!s.is_simple_nonabelian()) return std::nullopt;
  return s;
}

std::optional<std::string> exclusion_reason(const zoo::GroupId& id) {
  if (!id.is_projective() || id.q % 2 != 0) return std::nullopt;
  static constexpr std::pair<unsigned, std::uint64_t> kExcluded[] = {{2, 2}, {4, 2}, {3, 4}};
  for (const auto& [m, q] : kExcluded) {
    if (id.m == m && id.q == q) {
      return "(m,q)=(" + std::to_string(m) + "," + std::to_string(q) + ") is on the exclusion list for L_m(2^r)";
    }
  }
  return std::nullopt;
}

UnboundedCertificate check_unbounded(const zoo::GroupId& simple, unsigned g) {
  return check_unbounded(simple, g, bundled_fact_table());
}

UnboundedCertificate check_unbounded(const zoo::GroupId& simple, unsigned g, const std::vector<FactRecord>& table) {
  UnboundedCertificate cert;
  const std::string gs = std::to_string(g);
  if (g < 2) {
    cert.failure = "genus below 2";
    return cert;
  }
  if (g == 2) {
    cert.complete = true;
    cert.rule = "R0";
    cert.steps.push_back({"R0", "g = 2: finite subgroups of SL(2,R) are abelian, so every perfect group maps trivially "
                                "to PSL(2,R) and PSL(1,C) is trivial",
                          keys({cite("sl2r-finite-subgroups")})});
    return cert;
  }
  const auto order = simple.expected_order();
  if (g == 3 && order % 7 == 0) {
    cert.complete = true;
    cert.rule = "R4";
    cert.steps.push_back({"R4", "a nontrivial image of a minimal cover in PSL(2,C) would be a perfect nonsolvable "
                                "finite subgroup other than A5, and there is none",
                          keys({cite("suzuki")})});
    cert.steps.push_back({"R4", "7 divides the order, and cyclotomic_obstruction(7, 3) holds: SL(3,Q) has no element of "
                                "order 7",
                          keys({cite("cyclotomic-degree")})});
    if (!cyclotomic_obstruction(7, 3)) throw std::logic_error("cyclotomic obstruction inconsistent");
    return cert;
  }
  const auto fact = find_fact(simple, table);
  if (!fact) {
    cert.failure = "no fact record for " + simple.to_string() + " at g = " + gs;
    return cert;
  }
  const std::uint64_t bound = fact->min_cplx_proj_degree;
  const std::string bs = std::to_string(bound);
  const std::string source = "fact table line " + std::to_string(fact->source_line);

  if (bound == g && fact->has_flag(Flag::NoLinearAtMinDegree) && fact->has_flag(Flag::NoRealRepAtDegreeG)) {
    cert.complete = true;
    cert.rule = "R3";
    cert.steps.push_back({"R3", "nontrivial complex projective representations have degree >= " + bs + " = g and none of degree " +
                                    bs + " is linear, so maps to PGL(" + std::to_string(g - 1) + ",C) are trivial (" + source + ")",
                          without(fact->citations, "feit-tits")});
    cert.steps.push_back({"R3", "the double cover has no real representation of degree " + gs +
                                    ", so maps to PSL(" + gs + ",R) are trivial",
                          keys({cite("atlas")})});
    cert.steps.push_back({"R3", "Feit-Tits transfer to minimal covers", keys({cite("feit-tits")})});
    return cert;
  }
  if (bound <= g) {
    cert.failure = "degree bound " + bs + " does not exceed g = " + gs + " (" + source + ")";
    return cert;
  }
  if (fact->has_flag(Flag::LieTypeChar2)) {
    cert.steps.push_back({"R2", "nontrivial complex projective representations have degree >= " + bs + " > g = " + gs +
                                    " (" + source + ")",
                          without(fact->citations, "kleidman-liebeck")});
    if (simple.m == 4) {
      const std::uint64_t q3 = cube(simple.q);
      if (g >= q3) {
        cert.failure = "m = 4 requires g < q^3, but g = " + gs + " >= " + std::to_string(q3);
        return cert;
      }
      cert.steps.push_back({"R2", "m = 4 and g = " + gs + " < q^3 = " + std::to_string(q3),
                            keys({cite("kleidman-liebeck")})});
    }
    cert.steps.push_back({"R2", "Kleidman-Liebeck: a minimal cover embedding in PGL(g,C) forces L_m(q) to embed there",
                          keys({cite("kleidman-liebeck")})});
    cert.complete = true;
    cert.rule = "R2";
    return cert;
  }
  cert.steps.push_back({"R1", "nontrivial complex projective representations have degree >= " + bs + " > g = " + gs + " (" +
                                  source + ")",
                        without(fact->citations, "feit-tits")});
  cert.steps.push_back({"R1", "Feit-Tits transfer to minimal covers", keys({cite("feit-tits")})});
  cert.complete = true;
  cert.rule = "R1";
  return cert;
}

Evidence gather_evidence(const zoo::GroupId& id, std::uint64_t seed) {
  Evidence ev;
  const auto group = zoo::build(id);
  ev.transitivity_degree = group.transitivity_degree();
  const auto h = rep::heart(group);
  ev.heart_dimension = h.dimension();
  ev.endo_dimension = rep::endomorphism_algebra(h).dimension();
  const auto irr = rep::is_irreducible(h, seed);
  ev.irreducibility = irr.verdict;
  if (irr.witness) ev.witness_dimension = irr.witness->dimension();
  ev.indecomposability = rep::is_indecomposable(h).verdict;
  return ev;
}

AuditReport decide(const zoo::GroupId& id, unsigned n, const Evidence& ev) {
  AuditReport r;
  r.group = id;
  r.n = n;
  r.evidence = ev;
  r.simple = simple_subgroup(id);
  if (n >= 5) r.genus = genus_of(n);
  if (auto why = exclusion_reason(id)) {
    r.status = Status::Excluded;
    r.reason = *why;
    return r;
  }
  r.genus = genus_of(n);
  if (!r.simple) {
    r.status = Status::Inconclusive;
    r.reason = id.to_string() + " contains no simple non-abelian group covered by the audit";
    return r;
  }
  std::vector<std::string> failures;
  const auto t = ev.transitivity_degree;
  if (n % 2 == 1) {
    r.branch = "i";
    r.branch_requirements.push_back("n odd and 2-transitive");
    if (!t) {
      failures.push_back("transitivity degree unknown");
    } else if (*t < 2) {
      failures.push_back("not 2-transitive");
    }
  } else if (t && *t >= 3) {
    r.branch = "ii";
    r.branch_requirements.push_back("n even and 3-transitive");
  } else {
    r.branch = "iii";
    r.branch_requirements.push_back("n even and End(Q) = F_2");
    if (!t) failures.push_back("transitivity degree unknown");
  }
  r.branch_requirements.push_back("End(Q) = F_2");
  if (!ev.endo_dimension) {
    failures.push_back("endomorphism dimension unknown");
  } else if (*ev.endo_dimension != 1) {
    failures.push_back("endomorphism algebra has dimension " + std::to_string(*ev.endo_dimension));
  }
  if (!ev.heart_dimension) {
    failures.push_back("heart dimension unknown");
  } else if (*ev.heart_dimension != 2 * r.genus) {
    failures.push_back("heart dimension " + std::to_string(*ev.heart_dimension) + " differs from 2g");
  }
  if (ev.irreducibility == rep::Verdict::Inconclusive) failures.push_back("MeatAxe inconclusive");
  if (ev.indecomposability == rep::Decomposition::Inconclusive) failures.push_back("indecomposability inconclusive");
  if (ev.indecomposability == rep::Decomposition::Decomposable) failures.push_back("heart is decomposable");

  r.unbounded = check_unbounded(*r.simple, r.genus);
  if (!r.unbounded.complete) failures.push_back("unboundedness: " + r.unbounded.failure);

  if (failures.empty()) {
    r.status = Status::Certified;
    r.reason = "branch (" + r.branch + ") hypotheses hold for " + r.simple->to_string() + " and rule " + r.unbounded.rule +
               " certifies " + std::to_string(r.genus) + "-unboundedness";
    return r;
  }
  r.status = Status::Inconclusive;
  for (std::size_t i = 0; i < failures.size(); ++i) r.reason += (i ? "; " : "") + failures[i];
  return r;
}

AuditReport audit(const zoo::GroupId& id, unsigned n, std::uint64_t seed) {
  id.validate();
  if (n != id.natural_degree()) {
    throw std::invalid_argument("degree " + std::to_string(n) + " does not match " + id.to_string() + " of degree " +
                                std::to_string(id.natural_degree()));
  }
  if (exclusion_reason(id)) return decide(id, n, Evidence{});
  if (n < 5) throw std::invalid_argument("the audit needs degree n >= 5");
  const auto simple = simple_subgroup(id);
  return decide(id, n, gather_evidence(simple ? *simple : id, seed));
}

}  // namespace heartlab::audit
