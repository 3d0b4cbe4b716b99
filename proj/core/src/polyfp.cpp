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

#include "heartlab/polyfp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heartlab::ff {

using boost::multiprecision::cpp_int;

namespace {

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }
std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

void require_same_field(const PolyFp& a, const PolyFp& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("PolyFp: mismatched characteristic");
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("mod_inverse: zero has no inverse");
  return mod_pow(a, p - 2, p);
}

PolyFp::PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2 || p >= (1ULL << 32)) throw std::invalid_argument("PolyFp: modulus out of range");
  for (auto& c : c_) c %= p_;
  trim();
}

PolyFp PolyFp::constant(std::uint64_t p, std::uint64_t c) { return PolyFp(p, {c}); }
PolyFp PolyFp::x(std::uint64_t p) { return PolyFp(p, {0, 1}); }
PolyFp PolyFp::monomial(std::uint64_t p, std::size_t k) {
  std::vector<std::uint64_t> c(k + 1, 0);
  c[k] = 1;
  return PolyFp(p, std::move(c));
}

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFp PolyFp::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inverse(leading(), p_));
}

PolyFp PolyFp::scaled(std::uint64_t c) const {
  PolyFp r(p_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = mulm(c_[i], c % p_, p_);
  r.trim();
  return r;
}

PolyFp PolyFp::derivative() const {
  PolyFp r(p_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = mulm(c_[i], i % p_, p_);
  r.trim();
  return r;
}

std::uint64_t PolyFp::eval(std::uint64_t x) const {
  std::uint64_t r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = addm(mulm(r, x % p_, p_), c_[i], p_);
  return r;
}

std::string PolyFp::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) {
      if (c_[i] != 1) os << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
  require_same_field(a, b);
  PolyFp r(a.p_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = addm(a[i], b[i], a.p_);
  r.trim();
  return r;
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
  require_same_field(a, b);
  PolyFp r(a.p_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = subm(a[i], b[i], a.p_);
  r.trim();
  return r;
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  require_same_field(a, b);
  PolyFp r(a.p_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::uint64_t p = a.p_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r.c_[i + j] = (r.c_[i + j] + a.c_[i] * b.c_[j]) % p;
    }
  }
  r.trim();
  return r;
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("PolyFp: division by zero polynomial");
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {PolyFp(p), a};
  std::vector<std::uint64_t> quo(rem.size() - db, 0);
  const std::uint64_t inv = mod_inverse(b.leading(), p);
  for (std::size_t k = rem.size(); k-- > db;) {
    std::uint64_t coef = mulm(rem[k], inv, p);
    if (coef == 0) continue;
    quo[k - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k - db + j] = subm(rem[k - db + j], mulm(coef, bc[j], p), p);
    }
  }
  rem.resize(db);
  return {PolyFp(p, std::move(quo)), PolyFp(p, std::move(rem))};
}

PolyFp operator%(const PolyFp& a, const PolyFp& b) { return divmod(a, b).second; }
PolyFp operator/(const PolyFp& a, const PolyFp& b) { return divmod(a, b).first; }

PolyFp gcd(const PolyFp& a, const PolyFp& b) {
  PolyFp x = a, y = b;
  while (!y.is_zero()) {
    PolyFp r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyFp mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& m) { return (a * b) % m; }

PolyFp powmod(const PolyFp& base, const cpp_int& e, const PolyFp& m) {
  PolyFp result = PolyFp::constant(m.modulus(), 1) % m;
  PolyFp b = base % m;
  if (e == 0) return result;
  const auto bits = boost::multiprecision::msb(e);
  for (std::size_t i = bits + 1; i-- > 0;) {
    result = mulmod(result, result, m);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = mulmod(result, b, m);
  }
  return result;
}

bool is_squarefree(const PolyFp& f) {
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {

/// g(x^p) -> g(x) over a prime field, where f' == 0 guarantees the shape.
PolyFp pth_root(const PolyFp& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return PolyFp(p, std::move(c));
}

}  // namespace

std::vector<std::pair<PolyFp, unsigned>> squarefree_decomposition(const PolyFp& f_in) {
  std::vector<std::pair<PolyFp, unsigned>> out;
  PolyFp f = f_in.monic();
  if (f.degree() < 1) return out;
  const std::uint64_t p = f.modulus();
  PolyFp d = f.derivative();
  if (d.is_zero()) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(f))) out.emplace_back(g, m * static_cast<unsigned>(p));
    return out;
  }
  PolyFp c = gcd(f, d);
  PolyFp w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    PolyFp y = gcd(w, c);
    PolyFp fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(c.monic()))) {
      out.emplace_back(g, m * static_cast<unsigned>(p));
    }
  }
  return out;
}

std::vector<std::pair<PolyFp, unsigned>> distinct_degree_factorization(const PolyFp& f_in) {
  std::vector<std::pair<PolyFp, unsigned>> out;
  PolyFp f = f_in.monic();
  const std::uint64_t p = f.modulus();
  const PolyFp x = PolyFp::x(p);
  PolyFp h = x % f;
  unsigned i = 1;
  while (f.degree() >= 2 * static_cast<long>(i)) {
    h = powmod(h, p, f);
    PolyFp g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

std::vector<PolyFp> equal_degree_factorization(const PolyFp& f_in, unsigned d, SplitMix64& rng) {
  PolyFp f = f_in.monic();
  const std::uint64_t p = f.modulus();
  if (f.degree() <= static_cast<long>(d)) return {f};
  const auto n = static_cast<std::size_t>(f.degree());
  cpp_int half = (boost::multiprecision::pow(cpp_int(p), d) - 1) / 2;
  for (;;) {
    std::vector<std::uint64_t> coeffs(n);
    for (auto& c : coeffs) c = rng.below(p);
    PolyFp a(p, std::move(coeffs));
    if (a.degree() < 1) continue;
    PolyFp g = gcd(a, f);
    if (g.degree() < 1) {
      PolyFp t(p);
      if (p == 2) {
        PolyFp s = a;
        t = a;
        for (unsigned k = 1; k < d; ++k) {
          s = mulmod(s, s, f);
          t = t + s;
        }
      } else {
        t = powmod(a, half, f) - PolyFp::constant(p, 1);
      }
      g = gcd(t, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree_factorization(g, d, rng);
      auto right = equal_degree_factorization(f / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<std::pair<PolyFp, unsigned>> factor(const PolyFp& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  SplitMix64 rng(seed);
  std::vector<std::pair<PolyFp, unsigned>> out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [block, deg] : distinct_degree_factorization(part)) {
      for (auto& g : equal_degree_factorization(block, deg, rng)) out.emplace_back(g, mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
  });
  return out;
}

std::vector<unsigned> factor_degrees(const PolyFp& f) {
  std::vector<unsigned> degs;
  for (const auto& [g, d] : distinct_degree_factorization(f)) {
    for (long k = 0; k < g.degree() / static_cast<long>(d); ++k) degs.push_back(d);
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

bool is_irreducible(const PolyFp& f_in) {
  if (f_in.degree() < 1) return false;
  PolyFp f = f_in.monic();
  const std::uint64_t p = f.modulus();
  const PolyFp x = PolyFp::x(p);
  PolyFp h = x % f;
  for (long i = 1; 2 * i <= f.degree(); ++i) {
    h = powmod(h, p, f);
    if (gcd(h - x, f).degree() > 0) return false;
  }
  return true;
}

}  // namespace heartlab::ff
