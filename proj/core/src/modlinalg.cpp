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

#include "heartlab/modlinalg.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace heartlab::linalg {

namespace {

void check_ell(std::uint32_t ell) {
  if (ell < 2 || ell > 257) throw std::invalid_argument("field size must lie in [2, 257]");
  for (std::uint32_t d = 2; d * d <= ell; ++d) {
    if (ell % d == 0) throw std::invalid_argument("field size must be prime");
  }
}

std::size_t word_count(std::size_t len) { return (len + 63) / 64; }

void require_same(const ModVector& a, const ModVector& b) {
  if (a.ell() != b.ell() || a.size() != b.size()) {
    throw std::invalid_argument("vector shape mismatch");
  }
}

}  // namespace

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t ell) {
  a %= ell;
  if (a == 0) throw std::domain_error("zero has no inverse");
  std::int64_t t = 0, new_t = 1, r = ell, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += ell;
  return static_cast<std::uint32_t>(t);
}

ModVector::ModVector(std::uint32_t ell, std::size_t length) : ell_(ell), len_(length) {
  check_ell(ell);
  if (ell == 2) {
    bits_.assign(word_count(length), 0);
  } else {
    vals_.assign(length, 0);
  }
}

ModVector ModVector::unit(std::uint32_t ell, std::size_t length, std::size_t i) {
  ModVector v(ell, length);
  v.set(i, 1);
  return v;
}

ModVector ModVector::from_values(std::uint32_t ell, std::span<const std::uint32_t> values) {
  ModVector v(ell, values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v.set(i, values[i] % ell);
  return v;
}

ModVector ModVector::ones(std::uint32_t ell, std::size_t length) {
  ModVector v(ell, length);
  for (std::size_t i = 0; i < length; ++i) v.set(i, 1);
  return v;
}

void ModVector::set(std::size_t i, std::uint32_t v) {
  if (i >= len_) throw std::out_of_range("vector index out of range");
  v %= ell_;
  if (ell_ == 2) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v) {
      bits_[i >> 6] |= mask;
    } else {
      bits_[i >> 6] &= ~mask;
    }
  } else {
    vals_[i] = static_cast<std::uint16_t>(v);
  }
}

bool ModVector::is_zero() const {
  if (ell_ == 2) return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
  return std::all_of(vals_.begin(), vals_.end(), [](std::uint16_t x) { return x == 0; });
}

std::size_t ModVector::first_nonzero() const {
  if (ell_ == 2) {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      if (bits_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits_[w]));
    }
    return len_;
  }
  for (std::size_t i = 0; i < len_; ++i) {
    if (vals_[i]) return i;
  }
  return len_;
}

std::size_t ModVector::weight() const {
  if (ell_ == 2) {
    std::size_t n = 0;
    for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  return static_cast<std::size_t>(std::count_if(vals_.begin(), vals_.end(), [](auto x) { return x != 0; }));
}

void ModVector::axpy(std::uint32_t c, const ModVector& w) {
  require_same(*this, w);
  c %= ell_;
  if (c == 0) return;
  if (ell_ == 2) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= w.bits_[i];
    return;
  }
  for (std::size_t i = 0; i < len_; ++i) {
    if (w.vals_[i]) vals_[i] = static_cast<std::uint16_t>((vals_[i] + c * w.vals_[i]) % ell_);
  }
}

void ModVector::scale(std::uint32_t c) {
  c %= ell_;
  if (c == 1) return;
  if (ell_ == 2) {
    std::fill(bits_.begin(), bits_.end(), 0);
    return;
  }
  for (auto& x : vals_) x = static_cast<std::uint16_t>((x * c) % ell_);
}

std::uint32_t ModVector::dot(const ModVector& w) const {
  require_same(*this, w);
  if (ell_ == 2) {
    std::uint32_t parity = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) parity ^= std::popcount(bits_[i] & w.bits_[i]) & 1;
    return parity;
  }
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < len_; ++i) acc += static_cast<std::uint64_t>(vals_[i]) * w.vals_[i];
  return static_cast<std::uint32_t>(acc % ell_);
}

ModVector ModVector::concat(const ModVector& w) const {
  if (ell_ != w.ell_) throw std::invalid_argument("field mismatch");
  ModVector out(ell_, len_ + w.len_);
  if (ell_ == 2) {
    std::copy(bits_.begin(), bits_.end(), out.bits_.begin());
    for (std::size_t i = 0; i < w.len_; ++i) {
      if (w.get(i)) out.set(len_ + i, 1);
    }
    return out;
  }
  std::copy(vals_.begin(), vals_.end(), out.vals_.begin());
  std::copy(w.vals_.begin(), w.vals_.end(), out.vals_.begin() + static_cast<std::ptrdiff_t>(len_));
  return out;
}

ModVector ModVector::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > len_) throw std::out_of_range("bad slice");
  ModVector out(ell_, end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    if (const auto x = get(i)) out.set(i - begin, x);
  }
  return out;
}

std::string ModVector::to_hex() const {
  if (ell_ != 2) throw std::logic_error("hex encoding is defined for ell = 2 only");
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve((len_ + 3) / 4);
  for (std::size_t i = 0; i < len_; i += 4) {
    unsigned nibble = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      nibble <<= 1;
      if (i + k < len_) nibble |= get(i + k);
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

std::string ModVector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < len_; ++i) {
    if (i) os << ' ';
    os << get(i);
  }
  os << ']';
  return os.str();
}

ModMatrix::ModMatrix(std::uint32_t ell, std::size_t rows, std::size_t cols)
    : ell_(ell), cols_(cols), rows_(rows, ModVector(ell, cols)) {
  check_ell(ell);
}

ModMatrix ModMatrix::identity(std::uint32_t ell, std::size_t n) {
  ModMatrix m(ell, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ModMatrix ModMatrix::from_rows(std::uint32_t ell, std::size_t cols, std::vector<ModVector> rows) {
  check_ell(ell);
  for (const auto& r : rows) {
    if (r.ell() != ell || r.size() != cols) throw std::invalid_argument("row shape mismatch");
  }
  ModMatrix m;
  m.ell_ = ell;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

ModMatrix ModMatrix::from_values(std::uint32_t ell, std::size_t rows, std::size_t cols,
                                 std::span<const std::uint32_t> row_major) {
  if (row_major.size() != rows * cols) throw std::invalid_argument("value count mismatch");
  ModMatrix m(ell, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, row_major[i * cols + j]);
  }
  return m;
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix t(ell_, cols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    for (std::size_t j = r.first_nonzero(); j < cols_; ++j) {
      if (const auto x = r.get(j)) t.set(j, i, x);
    }
  }
  return t;
}

ModMatrix ModMatrix::scaled(std::uint32_t c) const {
  ModMatrix out = *this;
  for (auto& r : out.rows_) r.scale(c);
  return out;
}

bool ModMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const ModVector& r) { return r.is_zero(); });
}

bool ModMatrix::is_identity() const {
  if (rows_.size() != cols_) return false;
  for (std::size_t i = 0; i < cols_; ++i) {
    if (rows_[i].first_nonzero() != i || rows_[i].get(i) != 1 || rows_[i].weight() != 1) return false;
  }
  return true;
}

ModVector operator*(const ModVector& v, const ModMatrix& m) {
  if (v.ell() != m.ell() || v.size() != m.rows()) throw std::invalid_argument("vector-matrix shape mismatch");
  ModVector out(m.ell(), m.cols());
  for (std::size_t i = v.first_nonzero(); i < v.size(); ++i) {
    if (const auto c = v.get(i)) out.axpy(c, m.row(i));
  }
  return out;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.ell() != b.ell() || a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  std::vector<ModVector> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i) * b);
  return ModMatrix::from_rows(a.ell(), b.cols(), std::move(rows));
}

ModMatrix operator+(const ModMatrix& a, const ModMatrix& b) {
  if (a.ell() != b.ell() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  ModMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out.row(i) += b.row(i);
  return out;
}

ModMatrix operator-(const ModMatrix& a, const ModMatrix& b) {
  if (a.ell() != b.ell() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  ModMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out.row(i) -= b.row(i);
  return out;
}

Subspace::Subspace(std::uint32_t ell, std::size_t ambient) : ell_(ell), ambient_(ambient) { check_ell(ell); }

Subspace Subspace::span(std::uint32_t ell, std::size_t ambient, const std::vector<ModVector>& vectors) {
  Subspace s(ell, ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::whole(std::uint32_t ell, std::size_t ambient) {
  Subspace s(ell, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.rows_.push_back(ModVector::unit(ell, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

ModMatrix Subspace::basis_matrix() const { return ModMatrix::from_rows(ell_, ambient_, rows_); }

ModVector Subspace::reduce(ModVector v) const {
  if (v.ell() != ell_ || v.size() != ambient_) throw std::invalid_argument("vector shape mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (const auto c = v.get(pivots_[k])) v.axpy(ell_ - c, rows_[k]);
  }
  return v;
}

ModVector Subspace::coordinates(const ModVector& v) const {
  if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
  ModVector out(ell_, rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) out.set(k, v.get(pivots_[k]));
  return out;
}

bool Subspace::insert(ModVector v) {
  v = reduce(std::move(v));
  const std::size_t p = v.first_nonzero();
  if (p == ambient_) return false;
  v.scale(inverse_mod(v.get(p), ell_));
  for (auto& r : rows_) {
    if (const auto c = r.get(p)) r.axpy(ell_ - c, v);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::is_invariant_under(const ModMatrix& a) const {
  if (a.ell() != ell_ || a.rows() != ambient_ || a.cols() != ambient_) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  return std::all_of(rows_.begin(), rows_.end(), [&](const ModVector& r) { return contains(r * a); });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ell_ != ell_ || other.ambient_ != ambient_) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const ModVector& r) { return contains(r); });
}

Echelon rref(const ModMatrix& m) {
  std::vector<ModVector> rows = m.row_vectors();
  const std::uint32_t ell = m.ell();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel].get(c) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    rows[r].scale(inverse_mod(rows[r].get(c), ell));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      if (const auto x = rows[i].get(c)) rows[i].axpy(ell - x, rows[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return {ModMatrix::from_rows(ell, m.cols(), std::move(rows)), std::move(pivots)};
}

std::size_t rank(const ModMatrix& m) { return rref(m).pivots.size(); }

Subspace kernel(const ModMatrix& m) {
  const auto e = rref(m);
  const std::uint32_t ell = m.ell();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<ModVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    ModVector x = ModVector::unit(ell, n, f);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      if (const auto c = e.reduced.get(k, f)) x.set(e.pivots[k], ell - c);
    }
    basis.push_back(std::move(x));
  }
  return Subspace::span(ell, n, basis);
}

Subspace left_kernel(const ModMatrix& m) {
  const std::uint32_t ell = m.ell();
  const std::size_t rows = m.rows();
  std::vector<ModVector> work;
  std::vector<ModVector> tags;
  work.reserve(rows);
  tags.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    work.push_back(m.row(i));
    tags.push_back(ModVector::unit(ell, rows, i));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && work[sel].get(c) == 0) ++sel;
    if (sel == rows) continue;
    std::swap(work[r], work[sel]);
    std::swap(tags[r], tags[sel]);
    const auto inv = inverse_mod(work[r].get(c), ell);
    work[r].scale(inv);
    tags[r].scale(inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (const auto x = work[i].get(c)) {
        work[i].axpy(ell - x, work[r]);
        tags[i].axpy(ell - x, tags[r]);
      }
    }
    ++r;
  }
  Subspace s(ell, rows);
  for (std::size_t i = r; i < rows; ++i) s.insert(tags[i]);
  return s;
}

std::optional<ModVector> solve(const ModMatrix& m, const ModVector& b) {
  if (b.ell() != m.ell() || b.size() != m.rows()) throw std::invalid_argument("right-hand side shape mismatch");
  const std::uint32_t ell = m.ell();
  std::vector<ModVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i).concat(ModVector(ell, 1)));
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i].set(m.cols(), b.get(i));
  const auto e = rref(ModMatrix::from_rows(ell, m.cols() + 1, std::move(rows)));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  ModVector x(ell, m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x.set(e.pivots[k], e.reduced.get(k, m.cols()));
  return x;
}

std::optional<ModMatrix> inverse(const ModMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::uint32_t ell = m.ell();
  const std::size_t n = m.rows();
  std::vector<ModVector> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(m.row(i).concat(ModVector::unit(ell, n, i)));
  const auto e = rref(ModMatrix::from_rows(ell, 2 * n, std::move(rows)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  std::vector<ModVector> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(e.reduced.row(i).slice(n, 2 * n));
  return ModMatrix::from_rows(ell, n, std::move(out));
}

Subspace spin(const std::vector<ModVector>& seeds, const std::vector<ModMatrix>& actions) {
  if (seeds.empty()) throw std::invalid_argument("spin needs at least one seed");
  const std::uint32_t ell = seeds.front().ell();
  const std::size_t n = seeds.front().size();
  for (const auto& a : actions) {
    if (a.ell() != ell || a.rows() != n || a.cols() != n) throw std::invalid_argument("action shape mismatch");
  }
  std::vector<ModVector> rows;
  std::vector<std::size_t> pivots;
  std::deque<std::size_t> pending;
  auto sift = [&](ModVector v) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (const auto c = v.get(pivots[k])) v.axpy(ell - c, rows[k]);
    }
    const std::size_t p = v.first_nonzero();
    if (p == n) return;
    v.scale(inverse_mod(v.get(p), ell));
    rows.push_back(std::move(v));
    pivots.push_back(p);
    pending.push_back(rows.size() - 1);
  };
  for (const auto& s : seeds) {
    if (s.ell() != ell || s.size() != n) throw std::invalid_argument("seed shape mismatch");
    sift(s);
  }
  while (!pending.empty() && rows.size() < n) {
    const std::size_t k = pending.front();
    pending.pop_front();
    for (const auto& a : actions) {
      sift(rows[k] * a);
      if (rows.size() == n) break;
    }
  }
  return Subspace::span(ell, n, rows);
}

}  // namespace heartlab::linalg
