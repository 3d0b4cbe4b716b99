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

#include "heartlab/finitefield.hpp"

#include <sstream>
#include <stdexcept>

namespace heartlab::ff {

std::strong_ordering FieldElement::operator<=>(const FieldElement& o) const {
  if (auto c = coeffs.size() <=> o.coeffs.size(); c != 0) return c;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (auto c = coeffs[i] <=> o.coeffs[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {static_cast<std::uint32_t>(q), 1};
  unsigned r = 0;
  while (q % p == 0) {
    q /= p;
    ++r;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), r};
}

namespace {

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned r) {
  // Candidate monic polynomials enumerated with c_0 as the most significant
  // digit, so the first irreducible one is the lexicographically smallest.
  std::vector<std::uint32_t> low(r, 0);
  for (;;) {
    std::vector<std::uint64_t> c(low.begin(), low.end());
    c.push_back(1);
    if (is_irreducible(PolyFp(p, c))) {
      std::vector<std::uint32_t> out(low);
      out.push_back(1);
      return out;
    }
    std::size_t k = r;
    while (k > 0) {
      --k;
      if (++low[k] < p) break;
      low[k] = 0;
      if (k == 0) throw std::logic_error("no irreducible polynomial found");
    }
  }
}

}  // namespace

Field::Field(std::uint32_t p, unsigned r) : p_(p), r_(r) {
  if (!is_prime(p)) throw std::invalid_argument("Field: characteristic " + std::to_string(p) + " is not prime");
  if (r < 1 || r > 8) throw std::invalid_argument("Field: extension degree must lie in [1, 8]");
  q_ = 1;
  for (unsigned i = 0; i < r; ++i) {
    q_ *= p;
    if (q_ >= (1ULL << 32)) throw std::invalid_argument("Field: order too large");
  }
  modulus_ = smallest_irreducible(p, r);
}

Field make_field(std::uint32_t p, unsigned r) { return Field(p, r); }

PolyFp Field::modulus_poly() const {
  return PolyFp(p_, std::vector<std::uint64_t>(modulus_.begin(), modulus_.end()));
}

void Field::check(const FieldElement& a) const {
  if (a.coeffs.size() != r_) throw std::invalid_argument("FieldElement: wrong field");
}

FieldElement Field::zero() const { return FieldElement{std::vector<std::uint32_t>(r_, 0)}; }

FieldElement Field::one() const {
  FieldElement e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElement Field::from_int(std::int64_t k) const {
  FieldElement e = zero();
  auto m = static_cast<std::int64_t>(p_);
  e.coeffs[0] = static_cast<std::uint32_t>(((k % m) + m) % m);
  return e;
}

FieldElement Field::from_index(std::uint64_t index) const {
  if (index >= q_) throw std::invalid_argument("Field::from_index: out of range");
  FieldElement e = zero();
  for (unsigned i = 0; i < r_; ++i) {
    e.coeffs[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

std::uint64_t Field::index(const FieldElement& a) const {
  check(a);
  std::uint64_t idx = 0;
  for (unsigned i = r_; i-- > 0;) idx = idx * p_ + a.coeffs[i];
  return idx;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(from_index(i));
  return out;
}

bool Field::is_zero(const FieldElement& a) const {
  check(a);
  for (auto c : a.coeffs) {
    if (c) return false;
  }
  return true;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement r = zero();
  for (unsigned i = 0; i < r_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  FieldElement r = zero();
  for (unsigned i = 0; i < r_; ++i) r.coeffs[i] = (a.coeffs[i] + p_ - b.coeffs[i]) % p_;
  return r;
}

FieldElement Field::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  const std::uint64_t p = p_;
  std::vector<std::uint64_t> prod(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i) {
    if (!a.coeffs[i]) continue;
    for (unsigned j = 0; j < r_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % p;
    }
  }
  // Reduce with the monic modulus: x^r = -(m_0 + ... + m_{r-1} x^{r-1}).
  for (std::size_t k = prod.size(); k-- > r_;) {
    std::uint64_t c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (unsigned j = 0; j < r_; ++j) {
      prod[k - r_ + j] = (prod[k - r_ + j] + (p - c) * modulus_[j]) % p;
    }
  }
  FieldElement out = zero();
  for (unsigned i = 0; i < r_; ++i) out.coeffs[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement Field::inv(const FieldElement& a) const {
  if (is_zero(a)) throw std::domain_error("Field::inv: zero has no inverse");
  return pow(a, q_ - 2);
}

std::uint64_t Field::multiplicative_order(const FieldElement& a) const {
  if (is_zero(a)) throw std::domain_error("Field::multiplicative_order: zero");
  std::uint64_t n = q_ - 1;
  std::uint64_t ord = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    while (n % d == 0) n /= d;
    while (ord % d == 0 && pow(a, ord / d) == one()) ord /= d;
  }
  if (n > 1) {
    while (ord % n == 0 && pow(a, ord / n) == one()) ord /= n;
  }
  return ord;
}

FieldElement Field::primitive_element() const {
  for (std::uint64_t i = 1; i < q_; ++i) {
    FieldElement a = from_index(i);
    if (multiplicative_order(a) == q_ - 1) return a;
  }
  throw std::logic_error("Field: no primitive element");
}

std::string Field::to_string(const FieldElement& a) const {
  if (r_ == 1) return std::to_string(a.coeffs[0]);
  return std::to_string(index(a));
}

ProjPoint canonicalize(const Field& field, std::vector<FieldElement> v) {
  std::size_t lead = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!field.is_zero(v[i])) {
      lead = i;
      break;
    }
  }
  if (lead == v.size()) throw std::invalid_argument("canonicalize: zero vector");
  FieldElement s = field.inv(v[lead]);
  for (std::size_t i = lead; i < v.size(); ++i) v[i] = field.mul(s, v[i]);
  return ProjPoint{std::move(v)};
}

std::vector<ProjPoint> projective_points(const Field& field, unsigned m) {
  if (m < 2) throw std::invalid_argument("projective_points: m must be at least 2");
  const std::uint64_t q = field.order();
  std::vector<ProjPoint> pts;
  // The leading 1 sits at position `lead`; everything before it is zero and
  // everything after runs over all q^(m-1-lead) tails in lexicographic order.
  // Points with an earlier leading 1 have a zero where later ones have a 1,
  // so iterating lead from m-1 down to 0 yields increasing order.
  for (unsigned lead = m; lead-- > 0;) {
    const unsigned tail = m - 1 - lead;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < tail; ++i) count *= q;
    for (std::uint64_t t = 0; t < count; ++t) {
      std::vector<FieldElement> coords(m, field.zero());
      coords[lead] = field.one();
      std::uint64_t rest = t;
      for (unsigned i = m; i-- > lead + 1;) {
        coords[i] = field.from_index(rest % q);
        rest /= q;
      }
      pts.push_back(ProjPoint{std::move(coords)});
    }
  }
  return pts;
}

std::string to_string(const Field& field, const ProjPoint& pt) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < pt.coords.size(); ++i) {
    if (i) os << ':';
    os << field.to_string(pt.coords[i]);
  }
  os << ')';
  return os.str();
}

}  // namespace heartlab::ff
