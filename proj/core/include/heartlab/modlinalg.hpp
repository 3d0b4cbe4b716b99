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
#include <span>
#include <string>
#include <vector>

namespace heartlab::linalg {

/// Row vector over a prime field F_ell (ell <= 257). ell == 2 is stored as
/// packed 64-bit words; odd ell uses one 16-bit entry per coordinate.
class ModVector {
 public:
  ModVector() = default;
  ModVector(std::uint32_t ell, std::size_t length);

  static ModVector unit(std::uint32_t ell, std::size_t length, std::size_t i);
  static ModVector from_values(std::uint32_t ell, std::span<const std::uint32_t> values);
  static ModVector ones(std::uint32_t ell, std::size_t length);

  std::uint32_t ell() const { return ell_; }
  std::size_t size() const { return len_; }

  std::uint32_t get(std::size_t i) const {
    if (ell_ == 2) return static_cast<std::uint32_t>((bits_[i >> 6] >> (i & 63)) & 1U);
    return vals_[i];
  }
  void set(std::size_t i, std::uint32_t v);

  bool is_zero() const;
  /// Index of the first nonzero coordinate, size() if the vector is zero.
  std::size_t first_nonzero() const;
  std::size_t weight() const;

  /// this += c * w
  void axpy(std::uint32_t c, const ModVector& w);
  void scale(std::uint32_t c);
  ModVector& operator+=(const ModVector& w) {
    axpy(1, w);
    return *this;
  }
  ModVector& operator-=(const ModVector& w) {
    axpy(ell_ - 1, w);
    return *this;
  }

  std::uint32_t dot(const ModVector& w) const;

  /// Concatenation of this and w.
  ModVector concat(const ModVector& w) const;
  ModVector slice(std::size_t begin, std::size_t end) const;

  /// ell == 2 only: coordinates packed four per hex digit, coordinate 0 as
  /// the most significant bit of the first digit, padded with zero bits.
  std::string to_hex() const;
  std::string to_string() const;

  std::span<const std::uint64_t> words() const { return bits_; }

  bool operator==(const ModVector& o) const {
    return ell_ == o.ell_ && len_ == o.len_ && bits_ == o.bits_ && vals_ == o.vals_;
  }

 private:
  std::uint32_t ell_ = 2;
  std::size_t len_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint16_t> vals_;
};

/// Dense matrix over F_ell stored as rows. Row vectors act on the right:
/// v -> v * M.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::uint32_t ell, std::size_t rows, std::size_t cols);

  static ModMatrix identity(std::uint32_t ell, std::size_t n);
  /// Throws std::invalid_argument if the rows differ in length or field.
  static ModMatrix from_rows(std::uint32_t ell, std::size_t cols, std::vector<ModVector> rows);
  static ModMatrix from_values(std::uint32_t ell, std::size_t rows, std::size_t cols,
                               std::span<const std::uint32_t> row_major);

  std::uint32_t ell() const { return ell_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const ModVector& row(std::size_t i) const { return rows_[i]; }
  ModVector& row(std::size_t i) { return rows_[i]; }
  const std::vector<ModVector>& row_vectors() const { return rows_; }

  std::uint32_t get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, std::uint32_t v) { rows_[i].set(j, v); }

  ModMatrix transpose() const;
  ModMatrix scaled(std::uint32_t c) const;
  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const ModMatrix& o) const {
    return ell_ == o.ell_ && cols_ == o.cols_ && rows_ == o.rows_;
  }

 private:
  std::uint32_t ell_ = 2;
  std::size_t cols_ = 0;
  std::vector<ModVector> rows_;
};

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
ModMatrix operator+(const ModMatrix& a, const ModMatrix& b);
ModMatrix operator-(const ModMatrix& a, const ModMatrix& b);
/// v * M
ModVector operator*(const ModVector& v, const ModMatrix& m);

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t ell);

/// Subspace of F_ell^n held as a fully reduced row-echelon basis: pivots are
/// 1, strictly increasing, and every other basis row is zero in each pivot
/// column. Equal subspaces therefore have identical bases.
class Subspace {
 public:
  Subspace(std::uint32_t ell, std::size_t ambient);

  static Subspace span(std::uint32_t ell, std::size_t ambient, const std::vector<ModVector>& vectors);
  static Subspace whole(std::uint32_t ell, std::size_t ambient);

  std::uint32_t ell() const { return ell_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<ModVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  ModMatrix basis_matrix() const;

  /// Residue of v after clearing every pivot column.
  ModVector reduce(ModVector v) const;
  bool contains(const ModVector& v) const { return reduce(v).is_zero(); }
  /// Coordinates of v in the basis (the entries of v in the pivot columns).
  /// Throws std::invalid_argument if v is not in the subspace.
  ModVector coordinates(const ModVector& v) const;

  /// Adds v, keeping the basis reduced. Returns false if v was already in
  /// the span.
  bool insert(ModVector v);

  /// W * A ⊆ W
  bool is_invariant_under(const ModMatrix& a) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const {
    return ell_ == o.ell_ && ambient_ == o.ambient_ && rows_ == o.rows_;
  }

 private:
  std::uint32_t ell_;
  std::size_t ambient_;
  std::vector<ModVector> rows_;
  std::vector<std::size_t> pivots_;
};

struct Echelon {
  ModMatrix reduced;  // nonzero rows only, fully reduced
  std::vector<std::size_t> pivots;
};

Echelon rref(const ModMatrix& m);
std::size_t rank(const ModMatrix& m);
/// {x : M x^T = 0}, as a subspace of F_ell^cols.
Subspace kernel(const ModMatrix& m);
/// {v : v M = 0}, as a subspace of F_ell^rows.
Subspace left_kernel(const ModMatrix& m);
/// Some x with M x^T = b^T, or nullopt. Throws on dimension mismatch.
std::optional<ModVector> solve(const ModMatrix& m, const ModVector& b);
std::optional<ModMatrix> inverse(const ModMatrix& m);

/// Smallest subspace containing the seeds and closed under v -> v A for every
/// action A. Candidates are sifted against a growing semi-echelon basis.
Subspace spin(const std::vector<ModVector>& seeds, const std::vector<ModMatrix>& actions);

}  // namespace heartlab::linalg
