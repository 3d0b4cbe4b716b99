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

#include <charconv>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "heartlab/citations.hpp"

namespace heartlab::audit {

enum class Flag { NoLinearAtMinDegree, NoRealRepAtDegreeG, LieTypeChar2, WagnerChar2Bound };
enum class CoverRule { FeitTitsTransfer, KleidmanLiebeckM4, Order7Cyclotomic, G2Automatic };

inline constexpr std::string_view flag_name(Flag f) {
  switch (f) {
    case Flag::NoLinearAtMinDegree: return "no_linear_at_min_degree";
    case Flag::NoRealRepAtDegreeG: return "no_real_rep_at_degree_g";
    case Flag::LieTypeChar2: return "lie_type_char2";
    case Flag::WagnerChar2Bound: return "wagner_char2_bound";
  }
  return "";
}

inline constexpr std::string_view cover_rule_name(CoverRule r) {
  switch (r) {
    case CoverRule::FeitTitsTransfer: return "feit_tits_transfer";
    case CoverRule::KleidmanLiebeckM4: return "kleidman_liebeck_m4";
    case CoverRule::Order7Cyclotomic: return "order7_cyclotomic";
    case CoverRule::G2Automatic: return "g2_automatic";
  }
  return "";
}

/// Parameters a scope clause or bound expression may refer to. Unused ones
/// are zero.
struct FactParams {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t q = 0;
};

class FactTableError : public std::runtime_error {
 public:
  FactTableError(std::size_t line, const std::string& what)
      : std::runtime_error("facts line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// One clause of a scope: "n=11", "m>=3", "q=even", "(m,q)!=(3,4)".
struct ScopeClause {
  enum class Var { N, M, Q, MQ } var = Var::N;
  enum class Op { Eq, Ne, Ge, Gt, Le, Lt, Even, Odd } op = Op::Eq;
  std::uint64_t value = 0;
  std::uint64_t value2 = 0;

  bool matches(const FactParams& p) const {
    if (var == Var::MQ) {
      const bool eq = p.m == value && p.q == value2;
      return op == Op::Eq ? eq : !eq;
    }
    const std::uint64_t x = var == Var::N ? p.n : var == Var::M ? p.m : p.q;
    switch (op) {
      case Op::Eq: return x == value;
      case Op::Ne: return x != value;
      case Op::Ge: return x >= value;
      case Op::Gt: return x > value;
      case Op::Le: return x <= value;
      case Op::Lt: return x < value;
      case Op::Even: return x % 2 == 0;
      case Op::Odd: return x % 2 == 1;
    }
    return false;
  }
};

/// Closed vocabulary of bound expressions.
enum class BoundExpr { Constant, PslEvenHigh, PslEvenLine, PslOdd, AlternatingWagner };

struct FactRecord {
  std::size_t line = 0;
  std::string family;
  std::string scope_text;
  std::vector<ScopeClause> scope;
  std::string bound_text;
  BoundExpr bound = BoundExpr::Constant;
  std::uint64_t bound_constant = 0;
  std::vector<Flag> flags;
  CoverRule cover_rule = CoverRule::FeitTitsTransfer;
  std::vector<std::string> citations;

  bool matches(const FactParams& p) const {
    for (const auto& c : scope) {
      if (!c.matches(p)) return false;
    }
    return true;
  }

  std::uint64_t evaluate_bound(const FactParams& p) const {
    auto pow = [](std::uint64_t b, std::uint64_t e) {
      std::uint64_t r = 1;
      while (e--) r *= b;
      return r;
    };
    switch (bound) {
      case BoundExpr::Constant: return bound_constant;
      case BoundExpr::PslEvenHigh: return (pow(p.q, p.m) - p.q) / (p.q - 1);
      case BoundExpr::PslEvenLine: return p.q - 1;
      case BoundExpr::PslOdd: return (pow(p.q, p.m) - 1) / (p.q - 1) - 1;
      case BoundExpr::AlternatingWagner: return 2 * ((p.n - 1) / 2);
    }
    return 0;
  }

  bool has_flag(Flag f) const {
    for (auto x : flags) {
      if (x == f) return true;
    }
    return false;
  }
};

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline std::optional<std::uint64_t> to_uint(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

inline ScopeClause parse_clause(std::string_view text, std::size_t line) {
  ScopeClause c;
  static constexpr std::pair<std::string_view, ScopeClause::Op> kOps[] = {
      {">=", ScopeClause::Op::Ge}, {"<=", ScopeClause::Op::Le}, {"!=", ScopeClause::Op::Ne},
      {">", ScopeClause::Op::Gt},  {"<", ScopeClause::Op::Lt},  {"=", ScopeClause::Op::Eq}};
  std::size_t pos = std::string_view::npos;
  std::string_view op_text;
  for (const auto& [tok, op] : kOps) {
    const auto at = text.find(tok);
    if (at != std::string_view::npos) {
      pos = at;
      op_text = tok;
      c.op = op;
      break;
    }
  }
  if (pos == std::string_view::npos) throw FactTableError(line, "scope clause without operator: " + std::string(text));
  const std::string_view lhs = text.substr(0, pos);
  const std::string_view rhs = text.substr(pos + op_text.size());
  if (lhs == "(m,q)") {
    if (c.op != ScopeClause::Op::Eq && c.op != ScopeClause::Op::Ne) {
      throw FactTableError(line, "pair clauses support = and != only");
    }
    c.var = ScopeClause::Var::MQ;
    if (rhs.size() < 5 || rhs.front() != '(' || rhs.back() != ')') throw FactTableError(line, "bad pair value");
    const auto parts = split(rhs.substr(1, rhs.size() - 2), ',');
    if (parts.size() != 2 || !to_uint(parts[0]) || !to_uint(parts[1])) throw FactTableError(line, "bad pair value");
    c.value = *to_uint(parts[0]);
    c.value2 = *to_uint(parts[1]);
    return c;
  }
  if (lhs == "n") {
    c.var = ScopeClause::Var::N;
  } else if (lhs == "m") {
    c.var = ScopeClause::Var::M;
  } else if (lhs == "q") {
    c.var = ScopeClause::Var::Q;
  } else {
    throw FactTableError(line, "unknown scope variable: " + std::string(lhs));
  }
  if (rhs == "even" || rhs == "odd") {
    if (c.op != ScopeClause::Op::Eq) throw FactTableError(line, "parity clauses use =");
    c.op = rhs == "even" ? ScopeClause::Op::Even : ScopeClause::Op::Odd;
    return c;
  }
  const auto v = to_uint(rhs);
  if (!v) throw FactTableError(line, "bad scope value: " + std::string(rhs));
  c.value = *v;
  return c;
}

}  // namespace detail

/// Parses the tab-separated fact table. Blank lines and lines starting with
/// '#' are skipped. Throws FactTableError naming the offending line.
inline std::vector<FactRecord> parse_fact_table(std::string_view text) {
  std::vector<FactRecord> out;
  std::size_t line_no = 0;
  for (auto line : detail::split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto cols = detail::split(line, '\t');
    if (cols.size() != 7) throw FactTableError(line_no, "expected 7 tab-separated fields");
    if (cols[0] != "fact") throw FactTableError(line_no, "unknown record kind: " + std::string(cols[0]));
    FactRecord r;
    r.line = line_no;
    r.family = std::string(cols[1]);
    if (r.family != "mathieu" && r.family != "psl" && r.family != "alternating") {
      throw FactTableError(line_no, "unknown family: " + r.family);
    }
    r.scope_text = std::string(cols[2]);
    for (auto clause : detail::split(cols[2], ';')) r.scope.push_back(detail::parse_clause(clause, line_no));
    r.bound_text = std::string(cols[3]);
    if (const auto v = detail::to_uint(cols[3])) {
      r.bound = BoundExpr::Constant;
      r.bound_constant = *v;
      if (*v < 2) throw FactTableError(line_no, "degree bound must be at least 2");
    } else if (cols[3] == "(q^m-q)/(q-1)") {
      r.bound = BoundExpr::PslEvenHigh;
    } else if (cols[3] == "q-1") {
      r.bound = BoundExpr::PslEvenLine;
    } else if (cols[3] == "(q^m-1)/(q-1)-1") {
      r.bound = BoundExpr::PslOdd;
    } else if (cols[3] == "2*floor((n-1)/2)") {
      r.bound = BoundExpr::AlternatingWagner;
    } else {
      throw FactTableError(line_no, "unknown bound expression: " + std::string(cols[3]));
    }
    if (cols[4] != "-") {
      for (auto f : detail::split(cols[4], ',')) {
        bool found = false;
        for (auto flag : {Flag::NoLinearAtMinDegree, Flag::NoRealRepAtDegreeG, Flag::LieTypeChar2,
                          Flag::WagnerChar2Bound}) {
          if (flag_name(flag) == f) {
            r.flags.push_back(flag);
            found = true;
          }
        }
        if (!found) throw FactTableError(line_no, "unknown flag: " + std::string(f));
      }
    }
    bool rule_found = false;
    for (auto rule : {CoverRule::FeitTitsTransfer, CoverRule::KleidmanLiebeckM4, CoverRule::Order7Cyclotomic,
                      CoverRule::G2Automatic}) {
      if (cover_rule_name(rule) == cols[5]) {
        r.cover_rule = rule;
        rule_found = true;
      }
    }
    if (!rule_found) throw FactTableError(line_no, "unknown cover rule: " + std::string(cols[5]));
    if ((r.cover_rule == CoverRule::KleidmanLiebeckM4) != r.has_flag(Flag::LieTypeChar2)) {
      throw FactTableError(line_no, "lie_type_char2 records must use kleidman_liebeck_m4 and vice versa");
    }
    for (auto key : detail::split(cols[6], ',')) {
      if (!is_citation(key)) throw FactTableError(line_no, "unknown citation key: " + std::string(key));
      r.citations.emplace_back(key);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace heartlab::audit
