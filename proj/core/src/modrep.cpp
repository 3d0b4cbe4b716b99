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

#include "heartlab/modrep.hpp"

#include <stdexcept>
#include <utility>

namespace heartlab::rep {

using linalg::inverse;
using linalg::inverse_mod;

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Permutation: return "permutation";
    case Provenance::SumZero: return "sum-zero";
    case Provenance::Heart: return "heart";
    case Provenance::Submodule: return "submodule";
    case Provenance::Quotient: return "quotient";
    case Provenance::DirectSum: return "direct-sum";
    case Provenance::Explicit: return "explicit";
  }
  return "explicit";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Irreducible: return "irreducible";
    case Verdict::Reducible: return "reducible";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(Decomposition d) {
  switch (d) {
    case Decomposition::Indecomposable: return "indecomposable";
    case Decomposition::Decomposable: return "decomposable";
    case Decomposition::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

GModuleRep::GModuleRep(std::uint32_t ell, std::size_t dimension, std::vector<ModMatrix> generator_images,
                       Provenance provenance)
    : ell_(ell), dim_(dimension), gens_(std::move(generator_images)), provenance_(provenance) {
  for (const auto& g : gens_) {
    if (g.ell() != ell || g.rows() != dim_ || g.cols() != dim_) {
      throw std::invalid_argument("generator image has the wrong shape");
    }
    if (linalg::rank(g) != dim_) throw std::invalid_argument("generator image is singular");
  }
}

ModMatrix permutation_matrix(const perm::Permutation& p, std::uint32_t ell) {
  const std::size_t n = p.degree();
  ModMatrix m(ell, n, n);
  for (std::size_t j = 0; j < n; ++j) m.set(p(static_cast<perm::Point>(j)), j, 1);
  return m;
}

GModuleRep permutation_module(const perm::PermGroup& group, std::uint32_t ell) {
  std::vector<ModMatrix> gens;
  for (const auto& g : group.generators()) gens.push_back(permutation_matrix(g, ell));
  return GModuleRep(ell, group.degree(), std::move(gens), Provenance::Permutation);
}

Subspace sum_zero_subspace(std::size_t n, std::uint32_t ell) {
  if (n < 2) throw std::invalid_argument("sum-zero hyperplane needs n >= 2");
  std::vector<ModVector> rows;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    ModVector v = ModVector::unit(ell, n, i);
    v.set(n - 1, ell - 1);
    rows.push_back(std::move(v));
  }
  return Subspace::span(ell, n, rows);
}

GModuleRep sum_zero_module(const perm::PermGroup& group, std::uint32_t ell) {
  auto sub = submodule(permutation_module(group, ell), sum_zero_subspace(group.degree(), ell));
  return GModuleRep(ell, sub.dimension(), sub.generators(), Provenance::SumZero);
}

GModuleRep heart(const perm::PermGroup& group) {
  const std::size_t n = group.degree();
  if (n < 3) throw std::invalid_argument("heart needs degree at least 3");
  GModuleRep sz = sum_zero_module(group, 2);
  if (n % 2 == 1) return GModuleRep(2, sz.dimension(), sz.generators(), Provenance::Heart);
  const Subspace constants = Subspace::span(2, n - 1, {ModVector::ones(2, n - 1)});
  auto q = quotient(sz, constants);
  return GModuleRep(2, q.dimension(), q.generators(), Provenance::Heart);
}

GModuleRep submodule(const GModuleRep& rep, const Subspace& w) {
  if (w.ell() != rep.ell() || w.ambient() != rep.dimension()) throw std::invalid_argument("subspace shape mismatch");
  if (!verify_submodule_witness(rep, w)) throw std::invalid_argument("subspace is not invariant");
  const std::size_t k = w.dimension();
  std::vector<ModMatrix> gens;
  for (const auto& a : rep.generators()) {
    std::vector<ModVector> rows;
    rows.reserve(k);
    for (const auto& b : w.basis()) rows.push_back(w.coordinates(b * a));
    gens.push_back(ModMatrix::from_rows(rep.ell(), k, std::move(rows)));
  }
  return GModuleRep(rep.ell(), k, std::move(gens), Provenance::Submodule);
}

GModuleRep quotient(const GModuleRep& rep, const Subspace& w) {
  if (w.ell() != rep.ell() || w.ambient() != rep.dimension()) throw std::invalid_argument("subspace shape mismatch");
  if (!verify_submodule_witness(rep, w)) throw std::invalid_argument("subspace is not invariant");
  const std::size_t d = rep.dimension();
  std::vector<bool> is_pivot(d, false);
  for (auto p : w.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < d; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  const std::size_t k = free_cols.size();
  std::vector<ModMatrix> gens;
  for (const auto& a : rep.generators()) {
    ModMatrix img(rep.ell(), k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const ModVector r = w.reduce(a.row(free_cols[i]));
      for (std::size_t j = 0; j < k; ++j) {
        if (const auto x = r.get(free_cols[j])) img.set(i, j, x);
      }
    }
    gens.push_back(std::move(img));
  }
  return GModuleRep(rep.ell(), k, std::move(gens), Provenance::Quotient);
}

GModuleRep direct_sum(const GModuleRep& a, const GModuleRep& b) {
  if (a.ell() != b.ell() || a.generators().size() != b.generators().size()) {
    throw std::invalid_argument("direct sum needs matching field and generator count");
  }
  const std::size_t da = a.dimension();
  const std::size_t d = da + b.dimension();
  std::vector<ModMatrix> gens;
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    ModMatrix m(a.ell(), d, d);
    const auto& x = a.generators()[g];
    const auto& y = b.generators()[g];
    for (std::size_t i = 0; i < da; ++i) {
      for (std::size_t j = 0; j < da; ++j) m.set(i, j, x.get(i, j));
    }
    for (std::size_t i = 0; i < b.dimension(); ++i) {
      for (std::size_t j = 0; j < b.dimension(); ++j) m.set(da + i, da + j, y.get(i, j));
    }
    gens.push_back(std::move(m));
  }
  return GModuleRep(a.ell(), d, std::move(gens), Provenance::DirectSum);
}

namespace {

ModVector flatten(const ModMatrix& m) {
  ModVector v(m.ell(), m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (const auto x = m.get(i, j)) v.set(i * m.cols() + j, x);
    }
  }
  return v;
}

ModMatrix unflatten(const ModVector& v, std::size_t d) {
  ModMatrix m(v.ell(), d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (const auto x = v.get(i * d + j)) m.set(i, j, x);
    }
  }
  return m;
}

EndoAlgebra canonical_algebra(std::uint32_t ell, std::size_t d, const std::vector<ModMatrix>& mats) {
  Subspace s(ell, d * d);
  for (const auto& m : mats) s.insert(flatten(m));
  EndoAlgebra out{ell, d, {}};
  for (const auto& r : s.basis()) out.basis.push_back(unflatten(r, d));
  return out;
}

}  // namespace

EndoAlgebra endomorphism_algebra(const GModuleRep& rep) {
  const std::uint32_t ell = rep.ell();
  const std::size_t d = rep.dimension();
  const auto& gens = rep.generators();
  if (d == 0) return {ell, 0, {}};
  if (gens.empty()) {
    std::vector<ModMatrix> all;
    for (std::size_t i = 0; i < d * d; ++i) all.push_back(unflatten(ModVector::unit(ell, d * d, i), d));
    return canonical_algebra(ell, d, all);
  }

  // Spanning forest of the spin: basis vector i is either a seed or
  // parent[i] * gens[via[i]].
  constexpr std::size_t kSeed = static_cast<std::size_t>(-1);
  std::vector<ModVector> basis;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via;
  std::vector<std::size_t> seeds;
  std::vector<std::vector<bool>> tree_edge;
  Subspace span(ell, d);
  for (std::size_t k = 0; k < d && basis.size() < d; ++k) {
    ModVector e = ModVector::unit(ell, d, k);
    if (!span.insert(e)) continue;
    seeds.push_back(basis.size());
    basis.push_back(e);
    parent.push_back(kSeed);
    via.push_back(kSeed);
    tree_edge.emplace_back(gens.size(), false);
    for (std::size_t i = basis.size() - 1; i < basis.size(); ++i) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        ModVector w = basis[i] * gens[g];
        if (!span.insert(w)) continue;
        tree_edge[i][g] = true;
        basis.push_back(std::move(w));
        parent.push_back(i);
        via.push_back(g);
        tree_edge.emplace_back(gens.size(), false);
      }
    }
  }
  const ModMatrix s = ModMatrix::from_rows(ell, d, basis);
  const ModMatrix s_inv = *inverse(s);

  // Y_u for each unknown u = (seed, coordinate): rows are images of the basis.
  const std::size_t unknowns = seeds.size() * d;
  std::vector<ModMatrix> ys;
  ys.reserve(unknowns);
  for (std::size_t si = 0; si < seeds.size(); ++si) {
    for (std::size_t k = 0; k < d; ++k) {
      ModMatrix y(ell, d, d);
      for (std::size_t i = 0; i < d; ++i) {
        if (parent[i] == kSeed) {
          if (i == seeds[si]) y.row(i) = ModVector::unit(ell, d, k);
        } else {
          y.row(i) = y.row(parent[i]) * gens[via[i]];
        }
      }
      ys.push_back(std::move(y));
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> constraints;
  std::vector<ModVector> coords;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (tree_edge[i][g]) continue;
      constraints.emplace_back(i, g);
      coords.push_back((basis[i] * gens[g]) * s_inv);
    }
  }

  std::vector<ModMatrix> result;
  if (constraints.empty()) {
    result = ys;
  } else {
    ModMatrix system(ell, unknowns, constraints.size() * d);
    for (std::size_t u = 0; u < unknowns; ++u) {
      ModVector row(ell, 0);
      for (std::size_t c = 0; c < constraints.size(); ++c) {
        const auto [i, g] = constraints[c];
        ModVector lhs = coords[c] * ys[u];
        lhs -= ys[u].row(i) * gens[g];
        row = row.concat(lhs);
      }
      system.row(u) = std::move(row);
    }
    const Subspace lambdas = linalg::left_kernel(system);
    for (const auto& lambda : lambdas.basis()) {
      ModMatrix y(ell, d, d);
      for (std::size_t u = 0; u < unknowns; ++u) {
        if (const auto c = lambda.get(u)) y = y + ys[u].scaled(c);
      }
      result.push_back(std::move(y));
    }
  }
  for (auto& y : result) y = s_inv * y;
  return canonical_algebra(ell, d, result);
}

EndoAlgebra endomorphism_algebra_direct(const GModuleRep& rep) {
  const std::uint32_t ell = rep.ell();
  const std::size_t d = rep.dimension();
  const std::size_t n = d * d;
  std::vector<ModVector> equations;
  for (const auto& a : rep.generators()) {
    // (A X - X A)_{ij} = sum_k A_ik X_kj - X_ik A_kj
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        ModVector eq(ell, n);
        for (std::size_t k = 0; k < d; ++k) {
          if (const auto x = a.get(i, k)) eq.set(k * d + j, (eq.get(k * d + j) + x) % ell);
          if (const auto x = a.get(k, j)) eq.set(i * d + k, (eq.get(i * d + k) + ell - x) % ell);
        }
        if (!eq.is_zero()) equations.push_back(std::move(eq));
      }
    }
  }
  Subspace sol = equations.empty() ? Subspace::whole(ell, n)
                                   : linalg::kernel(ModMatrix::from_rows(ell, n, std::move(equations)));
  EndoAlgebra out{ell, d, {}};
  for (const auto& r : sol.basis()) out.basis.push_back(unflatten(r, d));
  return out;
}

bool verify_submodule_witness(const GModuleRep& rep, const Subspace& w) {
  for (const auto& a : rep.generators()) {
    if (!w.is_invariant_under(a)) return false;
  }
  return true;
}

bool verify_idempotent_witness(const GModuleRep& rep, const ModMatrix& x) {
  const std::size_t d = rep.dimension();
  if (x.rows() != d || x.cols() != d || x.ell() != rep.ell()) return false;
  if (!(x * x == x)) return false;
  const Subspace image = Subspace::span(rep.ell(), d, x.row_vectors());
  const Subspace ker = linalg::left_kernel(x);
  if (image.dimension() + ker.dimension() != d) return false;
  Subspace sum = image;
  for (const auto& r : ker.basis()) sum.insert(r);
  if (sum.dimension() != d) return false;
  return verify_submodule_witness(rep, image) && verify_submodule_witness(rep, ker);
}

IndecomposabilityResult is_indecomposable(const GModuleRep& rep) {
  IndecomposabilityResult out;
  const auto endo = endomorphism_algebra(rep);
  const std::size_t k = endo.dimension();
  const std::uint32_t ell = rep.ell();
  const std::size_t d = rep.dimension();
  out.endo_dimension = k;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= ell;
    if (total > kIdempotentSearchCap) return out;
  }
  const ModMatrix zero(ell, d, d);
  const ModMatrix id = ModMatrix::identity(ell, d);
  std::vector<std::uint32_t> digits(k, 0);
  ModMatrix x = zero;
  for (std::uint64_t step = 1; step < total; ++step) {
    // Base-ell counter; x tracks sum digits[i] * basis[i].
    std::size_t i = 0;
    while (digits[i] == ell - 1) {
      digits[i] = 0;
      x = x - endo.basis[i].scaled(ell - 1);
      ++i;
    }
    ++digits[i];
    x = x + endo.basis[i];
    if (x == id || !(x * x == x)) continue;
    out.verdict = Decomposition::Decomposable;
    out.idempotent = x;
    return out;
  }
  out.verdict = Decomposition::Indecomposable;
  return out;
}

std::optional<bool> is_absolutely_irreducible(const GModuleRep& rep, std::uint64_t seed) {
  const auto irr = is_irreducible(rep, seed);
  if (irr.verdict == Verdict::Inconclusive) return std::nullopt;
  if (irr.verdict == Verdict::Reducible) return false;
  return endomorphism_algebra(rep).dimension() == 1;
}

}  // namespace heartlab::rep
