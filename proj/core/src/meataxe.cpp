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
#include <stdexcept>
#include <utility>
#include <vector>

#include "heartlab/modrep.hpp"
#include "heartlab/random.hpp"

namespace heartlab::rep {

using ff::PolyFp;

PolyFp characteristic_polynomial(const ModMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  const std::uint64_t p = a.ell();
  std::vector<std::vector<std::uint64_t>> h(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h[i][j] = a.get(i, j);
  }
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const std::uint64_t inv = ff::mod_inverse(h[j + 1][j], p);
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h[k][j] == 0) continue;
      const std::uint64_t m = h[k][j] * inv % p;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = (h[k][c] + (p - m) * h[j + 1][c]) % p;
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = (h[r][j + 1] + m * h[r][k]) % p;
    }
  }
  // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik (prod_{m=i+1..k} h_{m,m-1}) p_i
  std::vector<PolyFp> polys{PolyFp::constant(p, 1)};
  const PolyFp x = PolyFp::x(p);
  for (std::size_t k = 0; k < n; ++k) {
    PolyFp next = (x - PolyFp::constant(p, h[k][k])) * polys[k];
    std::uint64_t prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = prod * h[i + 1][i] % p;
      if (prod == 0) break;
      const std::uint64_t c = h[i][k] * prod % p;
      if (c) next = next - polys[i].scaled(c);
    }
    polys.push_back(std::move(next));
  }
  return polys.back();
}

ModMatrix evaluate(const PolyFp& f, const ModMatrix& a) {
  const std::uint32_t ell = a.ell();
  ModMatrix out(ell, a.rows(), a.cols());
  const ModMatrix id = ModMatrix::identity(ell, a.rows());
  for (long i = f.degree(); i >= 0; --i) {
    out = out * a;
    if (const auto c = f[static_cast<std::size_t>(i)] % ell) out = out + id.scaled(static_cast<std::uint32_t>(c));
  }
  return out;
}

namespace {

class ThetaSource {
 public:
  ThetaSource(const GModuleRep& rep, std::uint64_t seed) : rep_(rep), rng_(seed) {
    for (const auto& g : rep.generators()) inverses_.push_back(*linalg::inverse(g));
  }

  ModMatrix next(std::size_t attempt) {
    const std::uint32_t ell = rep_.ell();
    const std::size_t d = rep_.dimension();
    if (attempt % 2 == 1 && !rep_.generators().empty()) {
      const std::size_t t = rep_.generators().size();
      const std::size_t i = rng_.below(t);
      const std::size_t j = rng_.below(t);
      ModMatrix w = ModMatrix::identity(ell, d);
      ModMatrix w_inv = w;
      const std::size_t len = 1 + rng_.below(4);
      for (std::size_t s = 0; s < len; ++s) {
        const std::size_t g = rng_.below(t);
        w = w * rep_.generators()[g];
        w_inv = inverses_[g] * w_inv;
      }
      return rep_.generators()[i] + w_inv * rep_.generators()[j] * w;
    }
    ModMatrix theta(ell, d, d);
    const std::size_t terms = 2 + rng_.below(3);
    for (std::size_t s = 0; s < terms; ++s) {
      const auto c = static_cast<std::uint32_t>(1 + rng_.below(ell - 1));
      theta = theta + random_word().scaled(c);
    }
    return theta;
  }

 private:
  ModMatrix random_word() {
    const std::size_t d = rep_.dimension();
    ModMatrix w = ModMatrix::identity(rep_.ell(), d);
    if (rep_.generators().empty()) return w;
    const std::size_t len = rng_.below(5);
    for (std::size_t s = 0; s < len; ++s) w = w * rep_.generators()[rng_.below(rep_.generators().size())];
    return w;
  }

  const GModuleRep& rep_;
  SplitMix64 rng_;
  std::vector<ModMatrix> inverses_;
};

}  // namespace

IrreducibilityResult is_irreducible(const GModuleRep& rep, std::uint64_t seed) {
  IrreducibilityResult out;
  const std::size_t d = rep.dimension();
  if (d == 0) throw std::invalid_argument("MeatAxe needs a nonzero module");
  if (d == 1) {
    out.verdict = Verdict::Irreducible;
    return out;
  }
  std::vector<ModMatrix> transposed;
  for (const auto& g : rep.generators()) transposed.push_back(g.transpose());
  ThetaSource source(rep, seed);
  for (std::size_t attempt = 0; attempt < kMeatAxeAttempts; ++attempt) {
    out.attempts = attempt + 1;
    const ModMatrix theta = source.next(attempt);
    const auto factors = ff::factor(characteristic_polynomial(theta), seed + attempt);
    for (const auto& [p, mult] : factors) {
      const ModMatrix n = evaluate(p, theta);
      const Subspace null = linalg::left_kernel(n);
      const Subspace w = linalg::spin({null.basis().front()}, rep.generators());
      if (w.dimension() < d) {
        out.verdict = Verdict::Reducible;
        out.witness = w;
        return out;
      }
      if (null.dimension() != static_cast<std::size_t>(p.degree())) continue;
      const Subspace right = linalg::kernel(n);
      const Subspace u = linalg::spin({right.basis().front()}, transposed);
      if (u.dimension() < d) {
        out.verdict = Verdict::Reducible;
        out.witness = linalg::kernel(u.basis_matrix());
        return out;
      }
      out.verdict = Verdict::Irreducible;
      return out;
    }
  }
  out.verdict = Verdict::Inconclusive;
  return out;
}

}  // namespace heartlab::rep
