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

#include "heartlab/permgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace heartlab::perm {

namespace {

bool fixes_prefix(const Permutation& g, const std::vector<Point>& base, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (g(base[i]) != base[i]) return false;
  }
  return true;
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators)
    : degree_(degree) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("StabilizerChain: degree mismatch");
    if (!g.is_identity()) gens.push_back(g);
  }

  std::vector<Point> base;
  for (Point x = 0; x < degree; ++x) {
    bool moved = std::any_of(gens.begin(), gens.end(), [x](const Permutation& g) { return g(x) != x; });
    if (moved) base.push_back(x);
  }

  levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels_[i].base = base[i];
    for (const auto& g : gens) {
      if (fixes_prefix(g, base, i)) levels_[i].generators.push_back(g);
    }
    recompute_orbit(i);
  }

  // Work from the deepest level upwards. A level is complete once every
  // Schreier generator sifts to the identity through the levels below it.
  // A nontrivial residue stopping at level j joins the generators of the
  // levels in between and the scan resumes at j.
  std::size_t i = levels_.size();
  while (i > 0) {
    --i;
    bool restarted = false;
    ChainLevel& lvl = levels_[i];
    for (std::size_t a = 0; a < lvl.orbit.size() && !restarted; ++a) {
      for (std::size_t s = 0; s < lvl.generators.size(); ++s) {
        const Permutation& gen = levels_[i].generators[s];
        const Permutation& ua = levels_[i].transversal[a];
        Point gamma = gen(levels_[i].orbit[a]);
        auto gi = static_cast<std::size_t>(levels_[i].orbit_index[gamma]);
        Permutation sg = compose(gen, ua);
        if (sg == levels_[i].transversal[gi]) continue;
        Permutation h = compose(levels_[i].transversal_inv[gi], sg);

        std::size_t l = i + 1;
        for (; l < levels_.size(); ++l) {
          Point beta = h(levels_[l].base);
          std::int32_t idx = levels_[l].orbit_index[beta];
          if (idx < 0) break;
          h = compose(levels_[l].transversal_inv[static_cast<std::size_t>(idx)], h);
        }
        if (l == levels_.size()) continue;  // residue fixes every base point, so it is trivial

        for (std::size_t k = i + 1; k <= l; ++k) {
          levels_[k].generators.push_back(h);
          recompute_orbit(k);
        }
        i = l + 1;
        restarted = true;
        break;
      }
    }
  }
}

void StabilizerChain::recompute_orbit(std::size_t level) {
  ChainLevel& lvl = levels_[level];
  lvl.orbit.assign(1, lvl.base);
  lvl.orbit_index.assign(degree_, -1);
  lvl.orbit_index[lvl.base] = 0;
  lvl.transversal.assign(1, Permutation::identity(degree_));
  lvl.transversal_inv.assign(1, Permutation::identity(degree_));
  for (std::size_t a = 0; a < lvl.orbit.size(); ++a) {
    for (const auto& g : lvl.generators) {
      Point y = g(lvl.orbit[a]);
      if (lvl.orbit_index[y] >= 0) continue;
      lvl.orbit_index[y] = static_cast<std::int32_t>(lvl.orbit.size());
      lvl.orbit.push_back(y);
      Permutation t = compose(g, lvl.transversal[a]);
      lvl.transversal_inv.push_back(t.inverse());
      lvl.transversal.push_back(std::move(t));
    }
  }
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const auto& lvl : levels_) n *= lvl.orbit.size();
  return n;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("sift: degree mismatch");
  Permutation h = g;
  std::size_t l = 0;
  for (; l < levels_.size(); ++l) {
    std::int32_t idx = levels_[l].orbit_index[h(levels_[l].base)];
    if (idx < 0) break;
    h = compose(levels_[l].transversal_inv[static_cast<std::size_t>(idx)], h);
  }
  return {std::move(h), l};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, passed] = sift(g);
  return passed == levels_.size() && residue.is_identity();
}

void StabilizerChain::for_each_element(const std::function<void(const Permutation&)>& visit) const {
  std::function<void(std::size_t, const Permutation&)> rec = [&](std::size_t l, const Permutation& prefix) {
    if (l == levels_.size()) {
      visit(prefix);
      return;
    }
    for (const auto& t : levels_[l].transversal) rec(l + 1, compose(prefix, t));
  };
  rec(0, Permutation::identity(degree_));
}

Permutation StabilizerChain::uniform_element(SplitMix64& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (const auto& lvl : levels_) {
    g = compose(g, lvl.transversal[rng.below(lvl.transversal.size())]);
  }
  return g;
}

PermGroup::PermGroup(std::vector<Permutation> generators)
    : generators_(std::move(generators)), cache_(std::make_shared<ChainCache>()) {
  if (generators_.empty()) throw std::invalid_argument("PermGroup: at least one generator required");
  degree_ = generators_.front().degree();
  if (degree_ == 0) throw std::invalid_argument("PermGroup: degree must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup: generators differ in degree");
  }
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup({Permutation::identity(degree)});
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain = std::make_unique<StabilizerChain>(degree_, generators_);
  });
  return *cache_->chain;
}

bool PermGroup::contains(const Permutation& p) const { return chain().contains(p); }

std::size_t PermGroup::transitivity_degree() const {
  const auto& levels = chain().levels();
  if (levels.empty()) return degree_ == 1 ? 1 : 0;
  std::size_t t = 0;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k].base != k || levels[k].orbit.size() != degree_ - k) break;
    ++t;
  }
  return t;
}

std::vector<Point> PermGroup::orbit(Point x) const {
  std::vector<Point> orb{x};
  std::vector<bool> seen(degree_, false);
  seen[x] = true;
  for (std::size_t a = 0; a < orb.size(); ++a) {
    for (const auto& g : generators_) {
      Point y = g(orb[a]);
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  }
  return orb;
}

ProductReplacement::ProductReplacement(const PermGroup& group, std::uint64_t seed)
    : rng_(seed), accumulator_(Permutation::identity(group.degree())) {
  const auto& gens = group.generators();
  std::size_t n = std::max(kMinSlots, gens.size());
  slots_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) slots_.push_back(gens[i % gens.size()]);
  for (std::size_t r = 0; r < kMixingRounds * slots_.size(); ++r) step();
}

void ProductReplacement::step() {
  std::size_t n = slots_.size();
  std::size_t i = rng_.below(n);
  std::size_t j = rng_.below(n - 1);
  if (j >= i) ++j;
  if (rng_.coin()) {
    slots_[i] = compose(slots_[i], slots_[j]);
  } else {
    slots_[i] = compose(slots_[i], slots_[j].inverse());
  }
  accumulator_ = compose(accumulator_, slots_[i]);
}

Permutation ProductReplacement::next() {
  step();
  return accumulator_;
}

Permutation random_element(const PermGroup& group, std::uint64_t seed) {
  ProductReplacement pr(group, seed);
  return pr.next();
}

}  // namespace heartlab::perm
