// Copyright 2026 The zksbom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <iostream>

#include "CLI11.hpp"
#include "tool_util.h"
#include "zksbom/leakage_analyzer.h"

using namespace zksbom;

int main(int argc, char** argv) {
  CLI::App app{"Expected SBOM leakage per ecosystem"};
  std::string input;
  double p_ac = leakage::kDefaultUniqueAncestorProbability;
  std::string format = "csv";
  app.add_option("--input", input, "dependency count CSV")->required()->check(CLI::ExistingFile);
  app.add_option("--p-ac", p_ac, "unique ancestor probability");
  app.add_option("--format", format)->check(CLI::IsMember({"csv", "table"}));
  CLI11_PARSE(app, argc, argv);

  try {
    auto stats = leakage::aggregate_stats(leakage::parse_count_csv(tools::read_file(input)), p_ac);
    std::cout << leakage::emit_table(
        stats, format == "csv" ? leakage::TableFormat::kCsv : leakage::TableFormat::kText);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
