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

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string_view>

namespace heartlab::audit {

struct Citation {
  std::string_view key;
  std::string_view reference;
};

inline constexpr std::array kCitations{
    Citation{"atlas", "J. H. Conway et al., ATLAS of Finite Groups, Oxford, 1985"},
    Citation{"tiep-zalesskii",
             "P. H. Tiep, A. E. Zalesskii, Minimal characters of the finite classical groups, "
             "Comm. Algebra 24 (1996)"},
    Citation{"wagner",
             "A. Wagner, The faithful linear representations of least degree of S_n and A_n over a field "
             "of characteristic 2, Math. Z. 151 (1976)"},
    Citation{"feit-tits",
             "W. Feit, J. Tits, Projective representations of minimum degree of group extensions, "
             "Canad. J. Math. 30 (1978)"},
    Citation{"kleidman-liebeck",
             "P. Kleidman, M. Liebeck, On a theorem of Feit and Tits, Proc. Amer. Math. Soc. 107 (1989), "
             "Th. 3"},
    Citation{"klemm",
             "M. Klemm, Ueber die Reduktion von Permutationsmoduln, Math. Z. 143 (1975), Satz 4"},
    Citation{"mortimer",
             "B. Mortimer, The modular permutation representations of the known doubly transitive "
             "groups, Proc. London Math. Soc. 41 (1980)"},
    Citation{"suzuki", "M. Suzuki, Group Theory I, Springer, 1982, Th. 6.17"},
    Citation{"sl2r-finite-subgroups",
             "finite subgroups of SL(2,R) are cyclic, so a perfect group maps trivially to PSL(2,R)"},
    Citation{"cyclotomic-degree",
             "[Q(zeta_p):Q] = p-1, so GL(d,Q) has no element of prime order p when p-1 > d"},
};

constexpr bool is_citation(std::string_view key) {
  return std::any_of(kCitations.begin(), kCitations.end(), [&](const Citation& c) { return c.key == key; });
}

/// Citation key checked at compile time.
consteval std::string_view cite(std::string_view key) {
  if (!is_citation(key)) throw std::logic_error("unknown citation key");
  return key;
}

/// Throws std::out_of_range for an unknown key.
constexpr std::string_view reference_for(std::string_view key) {
  for (const auto& c : kCitations) {
    if (c.key == key) return c.reference;
  }
  throw std::out_of_range("unknown citation key");
}

}  // namespace heartlab::audit
