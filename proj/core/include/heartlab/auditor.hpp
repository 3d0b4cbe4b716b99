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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heartlab/fact_table.hpp"
#include "heartlab/groupzoo.hpp"
#include "heartlab/modrep.hpp"

namespace heartlab::audit {

/// A fact-table record resolved for one simple group.
struct GroupFact {
  zoo::GroupId group;
  std::uint64_t min_cplx_proj_degree = 0;
  std::vector<Flag> flags;
  CoverRule cover_rule = CoverRule::FeitTitsTransfer;
  std::vector<std::string> citations;
  std::size_t source_line = 0;

  bool has_flag(Flag f) const;
};

class NoFactError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// The table compiled into the library.
const std::vector<FactRecord>& bundled_fact_table();

/// First matching record for a simple group, or nullopt.
std::optional<GroupFact> find_fact(const zoo::GroupId& simple, const std::vector<FactRecord>& table);
std::optional<GroupFact> find_fact(const zoo::GroupId& simple);

/// Lower bound on the degree of a nontrivial complex projective
/// representation. Throws NoFactError outside the table.
GroupFact min_projective_degree_bound(const zoo::GroupId& simple);

/// (n-1)/2 for odd n, (n-2)/2 for even n. Throws std::invalid_argument for
/// n < 5.
unsigned genus_of(unsigned n);

/// True iff ell0 - 1 > dim, i.e. GL(dim, Q) has no element of order ell0.
/// Throws std::invalid_argument unless ell0 is prime and dim >= 1.
bool cyclotomic_obstruction(std::uint64_t ell0, std::uint64_t dim);

/// The simple non-abelian group whose hypotheses are checked: A_n inside S_n,
/// PSL inside PGL. nullopt for groups without one.
std::optional<zoo::GroupId> simple_subgroup(const zoo::GroupId& id);

/// Reason string if the group is on the exclusion list for L_m(2^r).
std::optional<std::string> exclusion_reason(const zoo::GroupId& id);

struct RuleStep {
  std::string rule;
  std::string statement;
  std::vector<std::string> citations;
};

/// Ordered rule chain showing that every minimal 2-cover of the group has no
/// nontrivial homomorphism into PSL(g-1, C), PSL(g, Q) or PSL(g, R).
struct UnboundedCertificate {
  bool complete = false;
  std::string rule;  // R0..R4 when complete
  std::vector<RuleStep> steps;
  std::string failure;
};

UnboundedCertificate check_unbounded(const zoo::GroupId& simple, unsigned g);
UnboundedCertificate check_unbounded(const zoo::GroupId& simple, unsigned g, const std::vector<FactRecord>& table);

struct Evidence {
  std::optional<std::size_t> transitivity_degree;
  std::optional<std::size_t> heart_dimension;
  std::optional<std::size_t> endo_dimension;
  rep::Verdict irreducibility = rep::Verdict::Inconclusive;
  std::optional<std::size_t> witness_dimension;
  rep::Decomposition indecomposability = rep::Decomposition::Inconclusive;
};

enum class Status { Certified, Excluded, Inconclusive };

std::string to_string(Status s);

struct AuditReport {
  zoo::GroupId group;
  std::optional<zoo::GroupId> simple;
  unsigned n = 0;
  unsigned genus = 0;
  std::string branch;  // "i", "ii", "iii", or empty
  std::vector<std::string> branch_requirements;
  Evidence evidence;
  UnboundedCertificate unbounded;
  Status status = Status::Inconclusive;
  std::string reason;
};

/// Evidence for the heart of the given group's permutation action.
Evidence gather_evidence(const zoo::GroupId& id, std::uint64_t seed = 1);

/// Verdict from precomputed evidence. Any missing or inconclusive evidence
/// field rules out certification.
AuditReport decide(const zoo::GroupId& id, unsigned n, const Evidence& evidence);

/// Full audit. Throws std::invalid_argument if n is not the natural degree
/// of id or if n < 5 for a group that is not excluded.
AuditReport audit(const zoo::GroupId& id, unsigned n, std::uint64_t seed = 1);

}  // namespace heartlab::audit
