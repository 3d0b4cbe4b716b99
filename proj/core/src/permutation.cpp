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

#include "heartlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heartlab::perm {

CycleType::CycleType(std::vector<std::uint32_t> lens) : lengths(std::move(lens)) {
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
}

std::size_t CycleType::degree() const {
  return std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i) os << ',';
    os << lengths[i];
  }
  os << ']';
  return os.str();
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("Permutation: images do not form a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> cs;
  for (const auto& c : cycles) cs.emplace_back(c);
  return from_cycles(degree, cs);
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point a = c[i];
      if (a >= degree || used[a]) {
        throw std::invalid_argument("Permutation::from_cycles: cycles are not disjoint or out of range");
      }
      used[a] = true;
      img[a] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

CycleType Permutation::cycle_type() const {
  std::vector<std::uint32_t> lens;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lens.push_back(len);
  }
  return CycleType(std::move(lens));
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (auto len : cycle_type().lengths) ord = std::lcm(ord, std::uint64_t{len});
  return ord;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (auto len : cycle_type().lengths) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    bool first = true;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) os << ',';
      os << x;
      first = false;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<Point> img(p.degree());
  auto pi = p.images();
  auto qi = q.images();
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = pi[qi[x]];
  return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  return compose(compose(g, p), g.inverse());
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace heartlab::perm
