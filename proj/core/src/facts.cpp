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

#include <algorithm>

#include "heartlab/auditor.hpp"
#include "heartlab/facts_tsv.hpp"

namespace heartlab::audit {

bool GroupFact::has_flag(Flag f) const { return std::find(flags.begin(), flags.end(), f) != flags.end(); }

const std::vector<FactRecord>& bundled_fact_table() {
  static const std::vector<FactRecord> table = parse_fact_table(kBundledFacts);
  return table;
}

std::optional<GroupFact> find_fact(const zoo::GroupId& simple, const std::vector<FactRecord>& table) {
  std::string family;
  FactParams params;
  switch (simple.family) {
    case zoo::Family::Mathieu:
      family = "mathieu";
      params.n = simple.n;
      break;
    case zoo::Family::Alternating:
      family = "alternating";
      params.n = simple.n;
      break;
    case zoo::Family::PSL:
      family = "psl";
      params.n = simple.natural_degree();
      params.m = simple.m;
      params.q = simple.q;
      break;
    default:
      return std::nullopt;
  }
  for (const auto& r : table) {
    if (r.family != family || !r.matches(params)) continue;
    return GroupFact{simple, r.evaluate_bound(params), r.flags, r.cover_rule, r.citations, r.line};
  }
  return std::nullopt;
}

std::optional<GroupFact> find_fact(const zoo::GroupId& simple) { return find_fact(simple, bundled_fact_table()); }

GroupFact min_projective_degree_bound(const zoo::GroupId& simple) {
  auto f = find_fact(simple);
  if (!f) throw NoFactError("no fact record for " + simple.to_string());
  return *f;
}

}  // namespace heartlab::audit
