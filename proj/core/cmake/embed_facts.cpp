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

// Build-time tool: validates the fact table and writes it out as a header
// holding the table text.

#include <fstream>
#include <iostream>
#include <sstream>

#include "heartlab/fact_table.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: heartlab_embed_facts <facts.tsv> <out.hpp>\n";
    return 1;
  }
  std::ifstream in(argv[1], std::ios::binary);
  if (!in) {
    std::cerr << "cannot read " << argv[1] << "\n";
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    const auto records = heartlab::audit::parse_fact_table(text);
    if (records.empty()) {
      std::cerr << argv[1] << ": no records\n";
      return 1;
    }
  } catch (const heartlab::audit::FactTableError& e) {
    std::cerr << argv[1] << ": " << e.what() << "\n";
    return 1;
  }
  if (text.find(")facts\"") != std::string::npos) {
    std::cerr << argv[1] << ": table contains the raw-string delimiter\n";
    return 1;
  }
  std::ofstream out(argv[2], std::ios::binary);
  out << "// Generated from facts.tsv by heartlab_embed_facts. Do not edit.\n"
      << "#pragma once\n\n#include <string_view>\n\n"
      << "namespace heartlab::audit {\n\n"
      << "inline constexpr std::string_view kBundledFacts = R\"facts(" << text << ")facts\";\n\n"
      << "}  // namespace heartlab::audit\n";
  return out ? 0 : 1;
}
