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
#include "zksbom/protocol_harness.h"

using namespace zksbom;

namespace {

// "a..b" with a step, or a single count.
std::vector<std::size_t> expand(const std::string& range, std::size_t step) {
  const auto dots = range.find("..");
  try {
    if (dots == std::string::npos) return {std::stoul(range)};
    std::size_t lo = std::stoul(range.substr(0, dots));
    std::size_t hi = std::stoul(range.substr(dots + 2));
    if (step == 0 || lo > hi) throw Error(ErrorCode::kMalformedInput, "bad range " + range);
    std::vector<std::size_t> out;
    for (std::size_t n = lo; n <= hi; n += step) out.push_back(n);
    return out;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kMalformedInput, "bad range " + range);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zkSBOM protocol simulator"};
  app.require_subcommand(1);

  std::string scenario_path, transcript_out;
  auto* run = app.add_subcommand("run", "replay one scenario");
  run->add_option("scenario", scenario_path)->required()->check(CLI::ExistingFile);
  run->add_option("--out", transcript_out, "write the transcript JSON here");

  std::string components = "0..1000", vulnerable, out;
  std::size_t step = 100, vulnerable_step = 100, fixed = 1000, repeats = 10;
  auto* perf = app.add_subcommand("perf", "timing and size sweep");
  perf->add_option("--components", components, "component counts, a..b");
  perf->add_option("--step", step);
  perf->add_option("--vulnerable", vulnerable, "vulnerable counts at --fixed components");
  perf->add_option("--vulnerable-step", vulnerable_step);
  perf->add_option("--fixed", fixed, "component count for the vulnerable panel");
  perf->add_option("--repeats", repeats, "median over this many runs");
  perf->add_option("--out", out, "CSV output (stdout if absent)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      auto transcript = harness::run(harness::load_scenario(scenario_path));
      auto json = transcript.to_json();
      if (transcript_out.empty()) {
        std::cout << json << "\n";
      } else {
        tools::write_file(transcript_out, json + "\n");
      }
      bool ok = transcript.verdicts_sound() && transcript.steps_in_order();
      if (transcript.adversary != harness::Adversary::kNone) {
        ok = ok && transcript.attack_detected;
      }
      return ok ? 0 : 1;
    }
    harness::PerfConfig config;
    config.component_counts = expand(components, step);
    if (!vulnerable.empty()) config.vulnerable_counts = expand(vulnerable, vulnerable_step);
    config.fixed_components = fixed;
    config.repeats = repeats;
    auto csv = harness::perf_rows_to_csv(harness::run_perf_sweep(config));
    if (out.empty()) {
      std::cout << csv;
    } else {
      tools::write_file(out, csv);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
