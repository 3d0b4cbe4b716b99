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

#include "heartlab/groupzoo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace heartlab::zoo {

using perm::Permutation;
using perm::Point;

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Symmetric: return "symmetric";
    case Family::Alternating: return "alternating";
    case Family::Mathieu: return "mathieu";
    case Family::PSL: return "psl";
    case Family::PGL: return "pgl";
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
  }
  return "unknown";
}

namespace {

[[noreturn]] void bad_spec(std::string_view text, const std::string& why) {
  throw std::invalid_argument("invalid group specification '" + std::string(text) + "': " + why);
}

unsigned parse_uint(std::string_view digits, std::string_view text) {
  if (digits.empty() || digits.size() > 9) bad_spec(text, "expected a positive integer");
  unsigned v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) bad_spec(text, "expected a positive integer");
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  return v;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

Permutation cycle_on(unsigned n, unsigned first, unsigned last) {
  std::vector<Point> c;
  for (unsigned i = first; i <= last; ++i) c.push_back(i);
  return Permutation::from_cycles(n, {c});
}

/// Cycles written with points 1..n as in the standard generator lists.
Permutation one_based(unsigned n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<std::vector<Point>> zero;
  for (const auto& c : cycles) {
    std::vector<Point> z;
    for (Point x : c) z.push_back(x - 1);
    zero.push_back(std::move(z));
  }
  return Permutation::from_cycles(n, zero);
}

}  // namespace

GroupId GroupId::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  if (s.empty()) bad_spec(text, "empty");
  GroupId id;
  auto projective = [&](std::string_view prefix, Family fam) -> bool {
    if (s.rfind(prefix, 0) != 0) return false;
    std::string_view rest(s);
    rest.remove_prefix(prefix.size());
    if (rest.size() < 5 || rest.front() != '(' || rest.back() != ')') bad_spec(text, "expected " + std::string(prefix) + "(m,q)");
    rest = rest.substr(1, rest.size() - 2);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) bad_spec(text, "expected " + std::string(prefix) + "(m,q)");
    id.family = fam;
    id.m = parse_uint(rest.substr(0, comma), text);
    id.q = parse_uint(rest.substr(comma + 1), text);
    return true;
  };
  if (!projective("PSL", Family::PSL) && !projective("PGL", Family::PGL)) {
    switch (s[0]) {
      case 'S': id.family = Family::Symmetric; break;
      case 'A': id.family = Family::Alternating; break;
      case 'M': id.family = Family::Mathieu; break;
      case 'C': id.family = Family::Cyclic; break;
      case 'D': id.family = Family::Dihedral; break;
      default: bad_spec(text, "unknown family");
    }
    id.n = parse_uint(std::string_view(s).substr(1), text);
  }
  id.validate();
  return id;
}

void GroupId::validate() const {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("unsupported group " + to_string() + ": " + why);
  };
  switch (family) {
    case Family::Symmetric:
      if (n < 2) fail("need n >= 2");
      break;
    case Family::Alternating:
      if (n < 3) fail("need n >= 3");
      break;
    case Family::Cyclic:
      if (n < 2) fail("need n >= 2");
      break;
    case Family::Dihedral:
      if (n < 3) fail("need n >= 3");
      break;
    case Family::Mathieu:
      if (n != 11 && n != 12 && n != 22 && n != 23 && n != 24) fail("Mathieu degree must be 11, 12, 22, 23 or 24");
      break;
    case Family::PSL:
    case Family::PGL: {
      if (m < 2) fail("need m >= 2");
      if (ff::prime_power(q).first == 0) fail("q is not a prime power");
      std::uint64_t qm = 1;
      for (unsigned i = 0; i < m; ++i) {
        qm *= q;
        if (qm > kMaxProjectiveSpace) fail("q^m exceeds " + std::to_string(kMaxProjectiveSpace));
      }
      if (ff::prime_power(q).second > 8) fail("extension degree above 8");
      break;
    }
  }
}

std::string GroupId::to_string() const {
  switch (family) {
    case Family::Symmetric: return "S" + std::to_string(n);
    case Family::Alternating: return "A" + std::to_string(n);
    case Family::Mathieu: return "M" + std::to_string(n);
    case Family::Cyclic: return "C" + std::to_string(n);
    case Family::Dihedral: return "D" + std::to_string(n);
    case Family::PSL: return "PSL(" + std::to_string(m) + "," + std::to_string(q) + ")";
    case Family::PGL: return "PGL(" + std::to_string(m) + "," + std::to_string(q) + ")";
  }
  return "?";
}

unsigned GroupId::natural_degree() const {
  if (is_projective()) return static_cast<unsigned>((ipow(q, m) - 1) / (q - 1));
  return n;
}

std::uint32_t GroupId::characteristic() const {
  return is_projective() ? ff::prime_power(q).first : 0;
}

bool GroupId::is_simple_nonabelian() const {
  switch (family) {
    case Family::Alternating: return n >= 5;
    case Family::Mathieu: return true;
    case Family::PSL: return !(m == 2 && (q == 2 || q == 3));
    default: return false;
  }
}

BigInt psl_order(unsigned m, std::uint64_t q) {
  BigInt order = 1;
  for (unsigned i = 0; i < m * (m - 1) / 2; ++i) order *= q;
  for (unsigned i = 2; i <= m; ++i) order *= BigInt(ipow(q, i)) - 1;
  std::uint64_t g = std::gcd(static_cast<std::uint64_t>(m), q - 1);
  return order / g;
}

BigInt pgl_order(unsigned m, std::uint64_t q) {
  return psl_order(m, q) * std::gcd(static_cast<std::uint64_t>(m), q - 1);
}

BigInt GroupId::expected_order() const {
  auto factorial = [](unsigned k) {
    BigInt f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (family) {
    case Family::Symmetric: return factorial(n);
    case Family::Alternating: return factorial(n) / 2;
    case Family::Cyclic: return n;
    case Family::Dihedral: return 2 * BigInt(n);
    case Family::Mathieu:
      switch (n) {
        case 11: return 7920;
        case 12: return 95040;
        case 22: return 443520;
        case 23: return 10200960;
        default: return 244823040;
      }
    case Family::PSL: return psl_order(m, q);
    case Family::PGL: return pgl_order(m, q);
  }
  return 0;
}

PermGroup symmetric(unsigned n) {
  GroupId::symmetric(n).validate();
  return PermGroup({Permutation::from_cycles(n, {{0, 1}}), cycle_on(n, 0, n - 1)});
}

PermGroup alternating(unsigned n) {
  GroupId::alternating(n).validate();
  Permutation three = Permutation::from_cycles(n, {{0, 1, 2}});
  Permutation big = (n % 2 == 1) ? cycle_on(n, 0, n - 1) : cycle_on(n, 1, n - 1);
  return PermGroup({three, big});
}

PermGroup cyclic(unsigned n) {
  GroupId::cyclic(n).validate();
  return PermGroup({cycle_on(n, 0, n - 1)});
}

PermGroup dihedral(unsigned n) {
  GroupId::dihedral(n).validate();
  std::vector<Point> refl(n);
  for (unsigned i = 0; i < n; ++i) refl[i] = (n - i) % n;
  return PermGroup({cycle_on(n, 0, n - 1), Permutation(refl)});
}

PermGroup mathieu(unsigned n) {
  GroupId::mathieu(n).validate();
  // Generator lists as distributed with GAP's MathieuGroup(n), 1-based.
  switch (n) {
    case 11:
      return PermGroup({one_based(11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}),
                        one_based(11, {{3, 7, 11, 8}, {4, 10, 5, 6}})});
    case 12:
      return PermGroup({one_based(12, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}),
                        one_based(12, {{3, 7, 11, 8}, {4, 10, 5, 6}}),
                        one_based(12, {{1, 12}, {2, 11}, {3, 6}, {4, 8}, {5, 9}, {7, 10}})});
    case 22:
      return PermGroup({one_based(22, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
                                       {12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22}}),
                        one_based(22, {{1, 4, 5, 9, 3}, {2, 8, 10, 7, 6}, {12, 15, 16, 20, 14},
                                       {13, 19, 21, 18, 17}}),
                        one_based(22, {{1, 21}, {2, 10, 8, 6}, {3, 13, 4, 17}, {5, 19, 9, 18},
                                       {11, 22}, {12, 14, 16, 20}})});
    case 23:
      return PermGroup({one_based(23, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18,
                                        19, 20, 21, 22, 23}}),
                        one_based(23, {{3, 17, 10, 7, 9}, {4, 13, 14, 19, 5}, {8, 18, 11, 12, 23},
                                       {15, 20, 22, 21, 16}})});
    default:
      return PermGroup({one_based(24, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18,
                                        19, 20, 21, 22, 23}}),
                        one_based(24, {{3, 17, 10, 7, 9}, {4, 13, 14, 19, 5}, {8, 18, 11, 12, 23},
                                       {15, 20, 22, 21, 16}}),
                        one_based(24, {{1, 24}, {2, 23}, {3, 12}, {4, 16}, {5, 18}, {6, 10},
                                       {7, 20}, {8, 14}, {9, 21}, {11, 17}, {13, 22}, {15, 19}})});
  }
}

namespace {

using Matrix = std::vector<std::vector<ff::FieldElement>>;

Matrix identity_matrix(const ff::Field& f, unsigned m) {
  Matrix a(m, std::vector<ff::FieldElement>(m, f.zero()));
  for (unsigned i = 0; i < m; ++i) a[i][i] = f.one();
  return a;
}

class PointIndex {
 public:
  PointIndex(const ff::Field& f, const std::vector<ff::ProjPoint>& pts) : field_(f) {
    for (std::size_t i = 0; i < pts.size(); ++i) index_.emplace(key(pts[i].coords), static_cast<Point>(i));
  }

  Point at(const ff::ProjPoint& p) const { return index_.at(key(p.coords)); }

 private:
  std::uint64_t key(const std::vector<ff::FieldElement>& v) const {
    std::uint64_t k = 0;
    for (const auto& c : v) k = k * field_.order() + field_.index(c);
    return k;
  }

  const ff::Field& field_;
  std::map<std::uint64_t, Point> index_;
};

/// Permutation of point indices induced by v -> A v on column vectors.
Permutation action(const ff::Field& f, const Matrix& a, const std::vector<ff::ProjPoint>& pts,
                   const PointIndex& index) {
  const std::size_t m = a.size();
  std::vector<Point> img(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<ff::FieldElement> w(m, f.zero());
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) w[r] = f.add(w[r], f.mul(a[r][c], pts[i].coords[c]));
    }
    img[i] = index.at(ff::canonicalize(f, std::move(w)));
  }
  return Permutation(std::move(img));
}

ProjectiveGroup projective(unsigned m, std::uint64_t q, bool full_linear) {
  auto [p, r] = ff::prime_power(q);
  ff::Field field(p, r);
  auto pts = ff::projective_points(field, m);
  PointIndex index(field, pts);
  const ff::FieldElement omega = field.primitive_element();

  std::vector<Permutation> gens;
  // Transvections I + c E_{01} for c running over the F_p-basis 1, w, ..., w^(r-1).
  // Conjugating by the signed cycle below moves them into every root
  // subgroup, and the root subgroups generate SL_m(q).
  ff::FieldElement c = field.one();
  for (unsigned k = 0; k < r; ++k) {
    Matrix t = identity_matrix(field, m);
    t[0][1] = c;
    gens.push_back(action(field, t, pts, index));
    c = field.mul(c, omega);
  }
  // e_i -> e_{i+1}, e_{m-1} -> (-1)^(m-1) e_0; determinant 1.
  Matrix w(m, std::vector<ff::FieldElement>(m, field.zero()));
  for (unsigned i = 0; i + 1 < m; ++i) w[i + 1][i] = field.one();
  w[0][m - 1] = (m % 2 == 1) ? field.one() : field.neg(field.one());
  gens.push_back(action(field, w, pts, index));

  if (full_linear) {
    Matrix d = identity_matrix(field, m);
    d[0][0] = omega;
    gens.push_back(action(field, d, pts, index));
  }
  return ProjectiveGroup{PermGroup(std::move(gens)), field, m, std::move(pts)};
}

}  // namespace

ProjectiveGroup psl(unsigned m, std::uint64_t q) {
  GroupId::psl(m, q).validate();
  return projective(m, q, false);
}

ProjectiveGroup pgl(unsigned m, std::uint64_t q) {
  GroupId::pgl(m, q).validate();
  return projective(m, q, true);
}

PermGroup build(const GroupId& id) {
  id.validate();
  switch (id.family) {
    case Family::Symmetric: return symmetric(id.n);
    case Family::Alternating: return alternating(id.n);
    case Family::Mathieu: return mathieu(id.n);
    case Family::Cyclic: return cyclic(id.n);
    case Family::Dihedral: return dihedral(id.n);
    case Family::PSL: return psl(id.m, id.q).group;
    case Family::PGL: return pgl(id.m, id.q).group;
  }
  throw std::logic_error("build: unknown family");
}

}  // namespace heartlab::zoo
