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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace heartlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitExcluded = 2;
inline constexpr int kExitInconclusive = 3;

struct CommandResult {
  nlohmann::json payload;
  std::vector<std::string> citations;
  std::string summary;
  int exit_code = kExitOk;
};

struct AuditFlags {
  std::optional<unsigned> degree;
  std::uint64_t seed = 0;
};

struct HeartFlags {
  bool endo = false;
  bool meataxe = false;
  bool indecomposable = false;
  std::uint64_t seed = 0;
};

struct ProbeFlags {
  std::vector<std::string> polynomials;
  std::size_t primes = 50;
  std::vector<std::string> candidates;
  std::uint64_t seed = 0;
};

/// Each command throws std::invalid_argument on bad input.
CommandResult cmd_audit(const std::string& group_spec, const AuditFlags& flags);
CommandResult cmd_heart(const std::string& group_spec, const HeartFlags& flags);
CommandResult cmd_probe(const ProbeFlags& flags);
CommandResult cmd_zoo();

/// Wraps a payload with version, command echo, timestamp and resolved
/// citations.
nlohmann::json envelope(const std::vector<std::string>& command, const CommandResult& result,
                        std::optional<std::string> timestamp);

/// Entry point shared by main() and the tests. JSON goes to out, the human
/// summary and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heartlab::cli
