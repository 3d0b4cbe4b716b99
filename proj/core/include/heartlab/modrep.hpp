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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heartlab/modlinalg.hpp"
#include "heartlab/permgroup.hpp"
#include "heartlab/polyfp.hpp"

namespace heartlab::rep {

using linalg::ModMatrix;
using linalg::ModVector;
using linalg::Subspace;

enum class Provenance { Permutation, SumZero, Heart, Submodule, Quotient, DirectSum, Explicit };

std::string to_string(Provenance p);

/// A representation of a finitely generated group on F_ell^d, given by the
/// images of the generators acting on row vectors from the right.
class GModuleRep {
 public:
  /// Throws std::invalid_argument if an image is not an invertible d x d
  /// matrix over F_ell.
  GModuleRep(std::uint32_t ell, std::size_t dimension, std::vector<ModMatrix> generator_images,
             Provenance provenance = Provenance::Explicit);

  std::uint32_t ell() const { return ell_; }
  std::size_t dimension() const { return dim_; }
  const std::vector<ModMatrix>& generators() const { return gens_; }
  Provenance provenance() const { return provenance_; }

 private:
  std::uint32_t ell_;
  std::size_t dim_;
  std::vector<ModMatrix> gens_;
  Provenance provenance_;
};

/// P with e_i P = e_{p^{-1}(i)}, so that p -> P is a homomorphism for the
/// composition (p q)(x) = p(q(x)).
ModMatrix permutation_matrix(const perm::Permutation& p, std::uint32_t ell);

GModuleRep permutation_module(const perm::PermGroup& group, std::uint32_t ell);

/// Echelon basis {e_i + e_{n-1} : i < n-1} of the coordinate-sum-zero
/// hyperplane of F_ell^n.
Subspace sum_zero_subspace(std::size_t n, std::uint32_t ell);

GModuleRep sum_zero_module(const perm::PermGroup& group, std::uint32_t ell);

/// Sum-zero module for odd n, sum-zero modulo constants for even n (ell = 2).
/// Throws std::invalid_argument if the degree is below 3.
GModuleRep heart(const perm::PermGroup& group);

/// Action on an invariant subspace W, in the echelon basis of W.
GModuleRep submodule(const GModuleRep& rep, const Subspace& w);

/// Action on V / W with the unit vectors at the non-pivot columns of W as
/// coset representatives.
GModuleRep quotient(const GModuleRep& rep, const Subspace& w);

/// Block-diagonal sum; both reps need the same field and generator count.
GModuleRep direct_sum(const GModuleRep& a, const GModuleRep& b);

struct EndoAlgebra {
  std::uint32_t ell = 2;
  std::size_t degree = 0;
  /// Canonical basis: the reduced echelon basis of the flattened matrices.
  std::vector<ModMatrix> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// Commutant of the generator images. Unknowns are the images of the spin
/// seeds; every non-tree edge of the spinning process contributes one
/// vector equation.
EndoAlgebra endomorphism_algebra(const GModuleRep& rep);

/// Commutant from the full linear system in d^2 unknowns.
EndoAlgebra endomorphism_algebra_direct(const GModuleRep& rep);

enum class Verdict { Irreducible, Reducible, Inconclusive };

std::string to_string(Verdict v);

struct IrreducibilityResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Subspace> witness;
  std::size_t attempts = 0;
};

/// Randomised MeatAxe with Norton's irreducibility criterion. Deterministic
/// for a fixed seed.
IrreducibilityResult is_irreducible(const GModuleRep& rep, std::uint64_t seed = 1);

inline constexpr std::size_t kMeatAxeAttempts = 200;

/// nullopt when the MeatAxe is inconclusive.
std::optional<bool> is_absolutely_irreducible(const GModuleRep& rep, std::uint64_t seed = 1);

enum class Decomposition { Indecomposable, Decomposable, Inconclusive };

std::string to_string(Decomposition d);

struct IndecomposabilityResult {
  Decomposition verdict = Decomposition::Inconclusive;
  std::size_t endo_dimension = 0;
  std::optional<ModMatrix> idempotent;
};

/// Largest ell^k the idempotent search will enumerate.
inline constexpr std::uint64_t kIdempotentSearchCap = std::uint64_t{1} << 20;

IndecomposabilityResult is_indecomposable(const GModuleRep& rep);

/// x^2 = x, image and kernel invariant under every generator, and
/// image + kernel = whole space.
bool verify_idempotent_witness(const GModuleRep& rep, const ModMatrix& x);

/// Every generator maps W into W.
bool verify_submodule_witness(const GModuleRep& rep, const Subspace& w);

/// Characteristic polynomial det(x I - A) via reduction to Hessenberg form.
ff::PolyFp characteristic_polynomial(const ModMatrix& a);

/// f(A) by Horner's rule.
ModMatrix evaluate(const ff::PolyFp& f, const ModMatrix& a);

}  // namespace heartlab::rep
