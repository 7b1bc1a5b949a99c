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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zksbom/core_model.h"

// Expected number of additional components an observer can infer from one
// proof, given ecosystem-wide dependency statistics.
namespace zksbom::leakage {

inline constexpr double kDefaultUniqueAncestorProbability = 0.01;

struct EcosystemStats {
  double e_dc = 0;  // expected descendant (transitive) components
  double e_pc = 0;  // expected peer components
  double p_ac = 0;  // probability of a unique ancestor
};

struct DependencyCountRecord {
  Ecosystem ecosystem = Ecosystem::kNpm;
  std::string component;
  long long transitive_count = 0;
  long long peer_count = 0;
};

// E[L_i] = (1 - P[AC]) (E[DC] + E[PC] (1 + E[DC])) + P[AC] E[DC]
double inclusion_leakage(const EcosystemStats& stats);

// With E[DC_u] = P[AC] E[DC]:
// E[L_e] = (1 - P[AC]) (E[DC_u] + E[PC] (1 + E[DC_u])) + P[AC] (1 + E[DC_u])
double exclusion_leakage(const EcosystemStats& stats);

// Per-ecosystem means of the counts; p_ac is applied as given. Throws
// kEmptyInput for no records and kMalformedInput for a p_ac outside [0, 1].
std::map<Ecosystem, EcosystemStats> aggregate_stats(
    const std::vector<DependencyCountRecord>& records,
    double p_ac = kDefaultUniqueAncestorProbability);

// CSV with header `ecosystem,component,transitive_count,peer_count`.
// Throws kMalformedInput.
std::vector<DependencyCountRecord> parse_count_csv(std::string_view csv);

// Half-up rounding to two decimals, rendered with exactly two digits.
std::string format_2dp(double value);

enum class TableFormat { kCsv, kText };

// One row per ecosystem: avg transitive, avg peer, inclusion, exclusion.
// A zero peer average prints as "–" (no peer metadata).
std::string emit_table(const std::map<Ecosystem, EcosystemStats>& stats,
                       TableFormat format = TableFormat::kCsv);

}  // namespace zksbom::leakage
