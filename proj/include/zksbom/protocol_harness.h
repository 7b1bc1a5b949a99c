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

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zksbom/core_model.h"

// In-process runner that plays every protocol role, for end-to-end and
// adversarial scenarios and for timing sweeps.
namespace zksbom::harness {

enum class Adversary {
  kNone,
  kTamperOperator,      // operator commits to a modified SBOM
  kForgeProofConsumer,  // consumer alters proofs or claims
  kRetroactiveHide,     // a vulnerable component is hidden after the fact
  kRepudiate,           // supplier denies a publication
  kSplitView,           // supplier publishes a second commitment
};

std::string_view adversary_name(Adversary adversary);
std::optional<Adversary> parse_adversary(std::string_view name);

struct Scenario {
  std::string name;
  std::filesystem::path sbom_path;
  std::filesystem::path advisory_path;
  std::vector<std::string> cves;
  Adversary adversary = Adversary::kNone;
  // Artifact bytes are read from here when set, otherwise derived from the
  // scenario name.
  std::optional<std::filesystem::path> artifact_path;
};

// {"name", "sbom", "advisories", "cves": [...], "adversary", "artifact"};
// relative paths resolve against the scenario file. Throws kFixtureError.
Scenario load_scenario(const std::filesystem::path& path);

struct Step {
  std::string actor;
  int box = 0;  // 1..7 in protocol order
  std::string action;
  std::string outcome;
  bool ok = true;
};

struct Transcript {
  std::string scenario;
  Adversary adversary = Adversary::kNone;
  std::vector<Step> steps;
  std::map<std::string, Verdict> verdicts;
  std::map<std::string, Verdict::Kind> ground_truth;
  bool attack_detected = false;
  int detected_at_box = 0;
  std::string detection;

  bool steps_in_order() const;
  // Every verdict equals ground truth (happy path) or is Invalid (attacked).
  bool verdicts_sound() const;
  std::string to_json() const;
};

// Throws kFixtureError for unreadable fixtures.
Transcript run_happy_path(const Scenario& scenario);
Transcript run_adversarial(const Scenario& scenario);
// Dispatches on scenario.adversary.
Transcript run(const Scenario& scenario);

struct PerfConfig {
  std::vector<std::size_t> component_counts;
  std::vector<std::size_t> vulnerable_counts;
  std::size_t fixed_components = 1000;
  std::size_t repeats = 10;
};

struct PerfRow {
  std::string panel;  // "components" or "vulnerable"
  std::size_t components = 0;
  std::size_t vulnerable = 0;
  double commit_ms = 0;
  std::optional<double> inclusion_gen_ms;
  std::optional<double> inclusion_verify_ms;
  double exclusion_gen_ms = 0;
  double exclusion_verify_ms = 0;
  std::size_t record_bytes = 0;
  std::optional<std::size_t> inclusion_proof_bytes;
  std::size_t exclusion_proof_bytes = 0;
  std::size_t max_single_proof_bytes = 0;
  std::size_t proof_count = 0;
};

// Synthetic CycloneDX SBOM of `n` npm components `synthetic-<i>@1.0.0`, the
// first `vulnerable` of which are replaced by `vulnerable-<i>@1.0.0`.
std::string synthetic_sbom(std::size_t n, std::size_t vulnerable);

// Medians over `repeats` runs.
std::vector<PerfRow> run_perf_sweep(const PerfConfig& config);
std::string perf_rows_to_csv(const std::vector<PerfRow>& rows);

}  // namespace zksbom::harness
