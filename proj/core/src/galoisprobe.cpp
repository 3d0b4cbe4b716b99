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

#include "heartlab/galoisprobe.hpp"

#include <cctype>

#include "heartlab/finitefield.hpp"
#include "heartlab/permgroup.hpp"
#include "heartlab/polyfp.hpp"

namespace heartlab::probe {

namespace {

constexpr std::size_t kMaxExponent = 100000;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  IntPolynomial run() {
    skip_ws();
    const bool paren = peek() == '(';
    if (paren) ++i_;
    std::map<std::size_t, Integer> terms;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++i_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coeff, exp] = term();
      terms[exp] += sign * coeff;
      skip_ws();
      if (at_end() || peek() == ')') break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected '") + peek() + "'");
    }
    if (paren) {
      if (peek() != ')') fail("expected ')'");
      ++i_;
      skip_ws();
    } else if (!at_end()) {
      fail("unbalanced ')'");
    }
    if (!at_end()) fail("trailing input");
    std::size_t top = 0;
    for (const auto& [e, c] : terms) {
      if (c != 0) top = std::max(top, e);
    }
    std::vector<Integer> coeffs(top + 1);
    for (const auto& [e, c] : terms) {
      if (e <= top) coeffs[e] = c;
    }
    if (top == 0) throw ParseError(0, "polynomial must have degree at least 1");
    return IntPolynomial(std::move(coeffs));
  }

 private:
  char peek() const { return at_end() ? '\0' : s_[i_]; }
  bool at_end() const { return i_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) out.push_back(s_[i_++]);
    return out;
  }

  std::pair<Integer, std::size_t> term() {
    skip_ws();
    Integer coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(digits());
      has_coeff = true;
      if (peek() == '.' || peek() == '/') fail("non-integer coefficient");
      skip_ws();
      if (peek() == '*') {
        ++i_;
        skip_ws();
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (peek() != 'x') {
      if (!has_coeff) fail(at_end() ? "unexpected end of input" : std::string("unexpected '") + peek() + "'");
      return {coeff, 0};
    }
    ++i_;
    skip_ws();
    std::size_t exp = 1;
    if (peek() == '^') {
      ++i_;
      skip_ws();
      const std::size_t at = i_;
      const std::string e = digits();
      if (e.empty()) fail("expected an exponent");
      if (e.size() > 6 || std::stoul(e) > kMaxExponent) throw ParseError(at, "exponent too large");
      exp = std::stoul(e);
    }
    return {coeff, exp};
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

std::uint64_t reduce_mod(const Integer& c, std::uint64_t p) {
  Integer r = c % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.size() < 2) throw std::invalid_argument("polynomial must have degree at least 1");
}

std::string IntPolynomial::to_string() const {
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Integer& c = c_[k];
    if (c == 0) continue;
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += 'x';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

IntPolynomial parse_poly(std::string_view text) { return Parser(text).run(); }

std::optional<CycleType> cycle_type_mod_p(const IntPolynomial& f, std::uint64_t p) {
  if (!ff::is_prime(p) || p >= (std::uint64_t{1} << 32)) throw std::invalid_argument("modulus must be a prime below 2^32");
  if (reduce_mod(f.leading(), p) == 0) throw std::invalid_argument("prime divides the leading coefficient");
  std::vector<std::uint64_t> coeffs;
  coeffs.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) coeffs.push_back(reduce_mod(c, p));
  const ff::PolyFp g = ff::PolyFp(p, std::move(coeffs)).monic();
  if (!ff::is_squarefree(g)) return std::nullopt;
  const auto degrees = ff::factor_degrees(g);
  return CycleType(std::vector<std::uint32_t>(degrees.begin(), degrees.end()));
}

TypeSet group_cycle_types(const perm::PermGroup& group, std::size_t budget, std::uint64_t seed) {
  TypeSet out;
  if (group.order() <= kExactEnumerationLimit) {
    out.exact = true;
    group.chain().for_each_element([&](const perm::Permutation& g) { out.types.insert(g.cycle_type()); });
    return out;
  }
  perm::ProductReplacement sampler(group, seed);
  for (std::size_t i = 0; i < budget; ++i) out.types.insert(sampler.next().cycle_type());
  return out;
}

std::string to_string(Consistency c) {
  switch (c) {
    case Consistency::Consistent: return "consistent";
    case Consistency::Inconsistent: return "inconsistent";
    case Consistency::InsufficientData: return "insufficient_data";
  }
  return "insufficient_data";
}

ProbeReport probe(const IntPolynomial& f, std::size_t prime_count, const std::vector<zoo::GroupId>& candidates,
                  std::uint64_t seed, std::size_t sample_budget) {
  for (const auto& id : candidates) {
    id.validate();
    if (id.natural_degree() != f.degree()) {
      throw std::invalid_argument("candidate " + id.to_string() + " has degree " + std::to_string(id.natural_degree()) +
                                  " but the polynomial has degree " + std::to_string(f.degree()));
    }
  }
  ProbeReport report{f, {}, {}, {}, {}, false};
  for (std::uint64_t p = 2; report.primes_used.size() < prime_count; ++p) {
    if (!ff::is_prime(p) || reduce_mod(f.leading(), p) == 0) continue;
    report.primes_used.push_back(p);
    const auto type = cycle_type_mod_p(f, p);
    if (!type) {
      report.ramified_primes.push_back(p);
      continue;
    }
    ++report.histogram[*type];
    if (type->lengths.size() == 1) report.irreducibility_evidence = true;
  }
  for (const auto& id : candidates) {
    CandidateVerdict v;
    v.group = id;
    const TypeSet set = group_cycle_types(zoo::build(id), sample_budget, seed);
    v.exact = set.exact;
    v.type_count = set.types.size();
    if (report.histogram.empty()) {
      report.candidates.push_back(v);
      continue;
    }
    std::optional<CycleType> missing;
    for (const auto& [type, count] : report.histogram) {
      if (!set.types.contains(type)) {
        missing = type;
        break;
      }
    }
    if (!missing) {
      v.verdict = Consistency::Consistent;
    } else if (set.exact) {
      v.verdict = Consistency::Inconsistent;
      v.witness = missing;
    }
    report.candidates.push_back(v);
  }
  return report;
}

}  // namespace heartlab::probe
