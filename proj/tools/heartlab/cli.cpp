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

#include "heartlab/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>

#include "CLI11.hpp"
#include "heartlab/auditor.hpp"
#include "heartlab/citations.hpp"
#include "heartlab/galoisprobe.hpp"
#include "heartlab/groupzoo.hpp"
#include "heartlab/modrep.hpp"
#include "heartlab/version.hpp"

namespace heartlab::cli {

using nlohmann::json;

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json cycle_type_json(const perm::CycleType& t) { return json(t.lengths); }

json hex_rows(const std::vector<linalg::ModVector>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(r.to_hex());
  return out;
}

zoo::GroupId parse_group(const std::string& text) { return zoo::GroupId::parse(text); }

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(c);
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json evidence_json(const audit::Evidence& ev) {
  return {{"transitivity_degree", optional_json(ev.transitivity_degree)},
          {"heart_dimension", optional_json(ev.heart_dimension)},
          {"endo_dimension", optional_json(ev.endo_dimension)},
          {"irreducibility", rep::to_string(ev.irreducibility)},
          {"witness_dimension", optional_json(ev.witness_dimension)},
          {"indecomposability", rep::to_string(ev.indecomposability)}};
}

json certificate_json(const audit::UnboundedCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back({{"rule", s.rule}, {"statement", s.statement}, {"citations", s.citations}});
  return {{"complete", c.complete},
          {"rule", c.rule.empty() ? json(nullptr) : json(c.rule)},
          {"steps", steps},
          {"failure", c.failure.empty() ? json(nullptr) : json(c.failure)}};
}

}  // namespace

CommandResult cmd_audit(const std::string& group_spec, const AuditFlags& flags) {
  const auto id = parse_group(group_spec);
  const unsigned n = flags.degree.value_or(id.natural_degree());
  const auto r = audit::audit(id, n, flags.seed);

  CommandResult out;
  out.payload = {{"kind", "audit"},
                 {"group", id.to_string()},
                 {"simple_subgroup", r.simple ? json(r.simple->to_string()) : json(nullptr)},
                 {"n", r.n},
                 {"genus", r.genus},
                 {"condition_branch", r.branch.empty() ? json(nullptr) : json(r.branch)},
                 {"branch_requirements", r.branch_requirements},
                 {"evidence", evidence_json(r.evidence)},
                 {"unbounded_certificate", certificate_json(r.unbounded)},
                 {"seed", flags.seed},
                 {"verdict", {{"status", audit::to_string(r.status)}, {"reason", r.reason}}}};
  std::set<std::string> cites{std::string(audit::cite("klemm"))};
  if (r.status == audit::Status::Excluded) cites.insert(std::string(audit::cite("tiep-zalesskii")));
  for (const auto& s : r.unbounded.steps) cites.insert(s.citations.begin(), s.citations.end());
  out.citations.assign(cites.begin(), cites.end());
  out.summary = id.to_string() + " (n=" + std::to_string(n) + "): " + audit::to_string(r.status) + " - " + r.reason;
  switch (r.status) {
    case audit::Status::Certified: out.exit_code = kExitOk; break;
    case audit::Status::Excluded: out.exit_code = kExitExcluded; break;
    case audit::Status::Inconclusive: out.exit_code = kExitInconclusive; break;
  }
  return out;
}

CommandResult cmd_heart(const std::string& group_spec, const HeartFlags& flags) {
  const auto id = parse_group(group_spec);
  const auto group = zoo::build(id);
  const auto h = rep::heart(group);
  CommandResult out;
  out.payload = {{"kind", "heart"},
                 {"group", id.to_string()},
                 {"degree", group.degree()},
                 {"ell", h.ell()},
                 {"dimension", h.dimension()},
                 {"provenance", rep::to_string(h.provenance())},
                 {"seed", flags.seed}};
  out.summary = "heart of " + id.to_string() + ": dimension " + std::to_string(h.dimension());
  std::optional<std::size_t> endo_dim;
  if (flags.endo) {
    endo_dim = rep::endomorphism_algebra(h).dimension();
    out.payload["endo"] = {{"dimension", *endo_dim}};
    out.summary += ", End dimension " + std::to_string(*endo_dim);
    out.citations.emplace_back(audit::cite("klemm"));
  }
  if (flags.meataxe) {
    const auto irr = rep::is_irreducible(h, flags.seed);
    json m = {{"verdict", rep::to_string(irr.verdict)}, {"attempts", irr.attempts}, {"witness", nullptr}};
    if (irr.witness) {
      m["witness"] = {{"dimension", irr.witness->dimension()},
                      {"verified", rep::verify_submodule_witness(h, *irr.witness)},
                      {"rows", hex_rows(irr.witness->basis())}};
    }
    out.payload["meataxe"] = m;
    out.summary += ", " + rep::to_string(irr.verdict);
    if (irr.witness) out.summary += " (witness of dimension " + std::to_string(irr.witness->dimension()) + ")";
    out.citations.emplace_back(audit::cite("mortimer"));
    if (endo_dim) {
      json abs = nullptr;
      if (irr.verdict != rep::Verdict::Inconclusive) abs = irr.verdict == rep::Verdict::Irreducible && *endo_dim == 1;
      out.payload["absolutely_irreducible"] = abs;
    }
  }
  if (flags.indecomposable) {
    const auto ind = rep::is_indecomposable(h);
    json d = {{"verdict", rep::to_string(ind.verdict)}, {"endo_dimension", ind.endo_dimension}, {"idempotent", nullptr}};
    if (ind.idempotent) {
      d["idempotent"] = {{"verified", rep::verify_idempotent_witness(h, *ind.idempotent)},
                         {"rows", hex_rows(ind.idempotent->row_vectors())}};
    }
    out.payload["indecomposability"] = d;
    out.summary += ", " + rep::to_string(ind.verdict);
  }
  return out;
}

CommandResult cmd_probe(const ProbeFlags& flags) {
  if (flags.polynomials.empty()) throw std::invalid_argument("no polynomial given");
  if (flags.primes == 0) throw std::invalid_argument("--primes must be positive");
  std::vector<zoo::GroupId> candidates;
  for (const auto& c : flags.candidates) {
    for (const auto& part : split_top_level(c)) candidates.push_back(parse_group(part));
  }
  CommandResult out;
  json reports = json::array();
  for (const auto& text : flags.polynomials) {
    const auto f = probe::parse_poly(text);
    const auto r = probe::probe(f, flags.primes, candidates, flags.seed);
    json hist = json::array();
    std::size_t unramified = 0;
    for (const auto& [type, count] : r.histogram) {
      hist.push_back({{"cycle_type", cycle_type_json(type)}, {"count", count}});
      unramified += count;
    }
    json cands = json::array();
    for (const auto& c : r.candidates) {
      cands.push_back({{"group", c.group.to_string()},
                       {"verdict", probe::to_string(c.verdict)},
                       {"type_set", c.exact ? "exact" : "sampled"},
                       {"type_count", c.type_count},
                       {"witness", c.witness ? cycle_type_json(*c.witness) : json(nullptr)}});
      out.summary += f.to_string() + " vs " + c.group.to_string() + ": " + probe::to_string(c.verdict) + "\n";
    }
    std::vector<std::string> coeffs;
    for (const auto& c : f.coeffs()) coeffs.push_back(c.str());
    reports.push_back({{"polynomial", f.to_string()},
                       {"coefficients", coeffs},
                       {"degree", f.degree()},
                       {"primes_used", r.primes_used},
                       {"ramified_primes", r.ramified_primes},
                       {"unramified_count", unramified},
                       {"histogram", hist},
                       {"irreducibility_evidence", r.irreducibility_evidence},
                       {"candidates", cands}});
    out.summary += f.to_string() + ": " + std::to_string(unramified) + " unramified primes, irreducibility evidence " +
                   (r.irreducibility_evidence ? "yes" : "no") + "\n";
  }
  out.payload = {{"kind", "probe"},
                 {"seed", flags.seed},
                 {"note", "consistent means every observed Frobenius cycle type occurs in the candidate; "
                          "this is evidence for G contained in Gal(f), never proof"},
                 {"reports", reports}};
  if (!out.summary.empty() && out.summary.back() == '\n') out.summary.pop_back();
  return out;
}

CommandResult cmd_zoo() {
  CommandResult out;
  json families = json::array({
      {{"family", "symmetric"}, {"syntax", "Sn"}, {"degree", "n"}},
      {{"family", "alternating"}, {"syntax", "An"}, {"degree", "n"}},
      {{"family", "mathieu"}, {"syntax", "M11, M12, M22, M23, M24"}, {"degree", "n"}},
      {{"family", "psl"}, {"syntax", "PSL(m,q)"}, {"degree", "(q^m-1)/(q-1)"}},
      {{"family", "pgl"}, {"syntax", "PGL(m,q)"}, {"degree", "(q^m-1)/(q-1)"}},
      {{"family", "cyclic"}, {"syntax", "Cn"}, {"degree", "n"}},
      {{"family", "dihedral"}, {"syntax", "Dn"}, {"degree", "n"}},
  });
  json facts = json::array();
  std::set<std::string> cites;
  for (const auto& r : audit::bundled_fact_table()) {
    std::vector<std::string> flags;
    for (auto f : r.flags) flags.emplace_back(audit::flag_name(f));
    facts.push_back({{"line", r.line},
                     {"family", r.family},
                     {"scope", r.scope_text},
                     {"bound", r.bound_text},
                     {"flags", flags},
                     {"cover_rule", audit::cover_rule_name(r.cover_rule)},
                     {"citations", r.citations}});
    cites.insert(r.citations.begin(), r.citations.end());
  }
  out.payload = {{"kind", "zoo"},
                 {"families", families},
                 {"max_projective_space", zoo::kMaxProjectiveSpace},
                 {"facts", facts}};
  out.citations.assign(cites.begin(), cites.end());
  out.summary = std::to_string(facts.size()) + " fact records, " + std::to_string(families.size()) + " families";
  return out;
}

json envelope(const std::vector<std::string>& command, const CommandResult& result,
              std::optional<std::string> timestamp) {
  json cites = json::array();
  std::set<std::string> seen;
  for (const auto& key : result.citations) {
    if (!seen.insert(key).second) continue;
    cites.push_back({{"key", key}, {"reference", std::string(audit::reference_for(key))}});
  }
  return {{"tool", "heartlab"},
          {"version", kVersion},
          {"command", command},
          {"timestamp", timestamp ? json(*timestamp) : json(nullptr)},
          {"payload", result.payload},
          {"citations", cites}};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"heartlab: permutation groups, mod-2 hearts and endomorphism audits"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  bool stamp = false;
  app.add_flag("--stamp", stamp, "Record the current UTC time in the report");

  std::string group;
  AuditFlags audit_flags;
  auto* audit_cmd = app.add_subcommand("audit", "Audit a group against the endomorphism criteria");
  audit_cmd->add_option("group", group, "Group, e.g. M23 or PSL(3,3)")->required();
  audit_cmd->add_option("--degree", audit_flags.degree, "Degree n; defaults to the natural degree");
  audit_cmd->add_option("--seed", audit_flags.seed, "MeatAxe seed")->capture_default_str();

  HeartFlags heart_flags;
  auto* heart_cmd = app.add_subcommand("heart", "Build the mod-2 heart and analyse it");
  heart_cmd->add_option("group", group, "Group, e.g. M24")->required();
  heart_cmd->add_flag("--endo", heart_flags.endo, "Endomorphism algebra dimension");
  heart_cmd->add_flag("--meataxe", heart_flags.meataxe, "MeatAxe irreducibility test");
  heart_cmd->add_flag("--indecomposable", heart_flags.indecomposable, "Idempotent search");
  heart_cmd->add_option("--seed", heart_flags.seed, "MeatAxe seed")->capture_default_str();

  ProbeFlags probe_flags;
  std::string poly;
  std::string file;
  auto* probe_cmd = app.add_subcommand("probe", "Frobenius cycle types of an integer polynomial");
  auto* poly_opt = probe_cmd->add_option("poly", poly, "Polynomial, e.g. \"x^5-x-1\"");
  auto* file_opt = probe_cmd->add_option("--file", file, "File with one polynomial per line");
  poly_opt->excludes(file_opt);
  probe_cmd->add_option("--primes", probe_flags.primes, "Number of primes")->capture_default_str();
  probe_cmd->add_option("--candidates", probe_flags.candidates, "Candidate groups, comma-separated");
  probe_cmd->add_option("--seed", probe_flags.seed, "Sampling seed")->capture_default_str();

  auto* zoo_cmd = app.add_subcommand("zoo", "List supported groups and the fact table");

  std::vector<std::string> command{"heartlab"};
  for (int i = 1; i < argc; ++i) command.emplace_back(argv[i]);

  auto fail = [&](const std::string& message) {
    const CommandResult r{{{"kind", "error"}, {"message", message}}, {}, message, kExitUsage};
    out << envelope(command, r, std::nullopt).dump(2) << "\n";
    err << "heartlab: " << message << "\n";
    return kExitUsage;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(e.what());
  }

  try {
    CommandResult result;
    if (*audit_cmd) {
      result = cmd_audit(group, audit_flags);
    } else if (*heart_cmd) {
      result = cmd_heart(group, heart_flags);
    } else if (*probe_cmd) {
      if (!file.empty()) {
        std::ifstream in(file);
        if (!in) return fail("cannot read " + file);
        for (std::string line; std::getline(in, line);) {
          const auto first = line.find_first_not_of(" \t\r");
          if (first == std::string::npos || line[first] == '#') continue;
          probe_flags.polynomials.push_back(line);
        }
      } else if (!poly.empty()) {
        probe_flags.polynomials.push_back(poly);
      }
      result = cmd_probe(probe_flags);
    } else if (*zoo_cmd) {
      result = cmd_zoo();
    }
    out << envelope(command, result, stamp ? std::optional(utc_now()) : std::nullopt).dump(2) << "\n";
    err << result.summary << "\n";
    return result.exit_code;
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  } catch (const std::out_of_range& e) {
    return fail(e.what());
  }
}

}  // namespace heartlab::cli
