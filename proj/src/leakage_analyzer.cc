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

#include "zksbom/leakage_analyzer.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "zksbom/errors.h"

namespace zksbom::leakage {
namespace {

constexpr std::string_view kDash = "–";

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto end = line.find(sep, start);
    out.emplace_back(line.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

long long parse_count(const std::string& field, std::size_t line_no) {
  std::size_t used = 0;
  long long value = -1;
  try {
    value = std::stoll(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != field.size() || value < 0) {
    throw Error(ErrorCode::kMalformedInput,
                "line " + std::to_string(line_no) + ": bad count '" + field + "'");
  }
  return value;
}

Ecosystem parse_csv_ecosystem(std::string field, std::size_t line_no) {
  for (auto& c : field) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (field == "GO") field = "GOLANG";
  auto eco = parse_ecosystem_token(field);
  if (!eco) {
    throw Error(ErrorCode::kMalformedInput,
                "line " + std::to_string(line_no) + ": unknown ecosystem " + field);
  }
  return *eco;
}

}  // namespace

double inclusion_leakage(const EcosystemStats& s) {
  return (1 - s.p_ac) * (s.e_dc + s.e_pc * (1 + s.e_dc)) + s.p_ac * s.e_dc;
}

double exclusion_leakage(const EcosystemStats& s) {
  const double unique_descendants = s.p_ac * s.e_dc;
  return (1 - s.p_ac) * (unique_descendants + s.e_pc * (1 + unique_descendants)) +
         s.p_ac * (1 + unique_descendants);
}

std::map<Ecosystem, EcosystemStats> aggregate_stats(
    const std::vector<DependencyCountRecord>& records, double p_ac) {
  if (records.empty()) throw Error(ErrorCode::kEmptyInput, "no dependency records");
  if (!(p_ac >= 0 && p_ac <= 1)) {
    throw Error(ErrorCode::kMalformedInput, "p_ac must lie in [0, 1]");
  }
  struct Sums {
    long double transitive = 0, peer = 0;
    std::size_t n = 0;
  };
  std::map<Ecosystem, Sums> sums;
  for (const auto& r : records) {
    auto& s = sums[r.ecosystem];
    s.transitive += r.transitive_count;
    s.peer += r.peer_count;
    ++s.n;
  }
  std::map<Ecosystem, EcosystemStats> out;
  for (const auto& [eco, s] : sums) {
    out[eco] = {static_cast<double>(s.transitive / s.n),
                static_cast<double>(s.peer / s.n), p_ac};
  }
  return out;
}

std::vector<DependencyCountRecord> parse_count_csv(std::string_view csv) {
  std::vector<DependencyCountRecord> out;
  std::istringstream in{std::string(csv)};
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split(line, ',');
    for (auto& f : fields) f = trim(f);
    if (!header_seen) {
      header_seen = true;
      const std::vector<std::string> kHeader = {"ecosystem", "component",
                                                "transitive_count", "peer_count"};
      if (fields != kHeader) {
        throw Error(ErrorCode::kMalformedInput,
                    "expected header ecosystem,component,transitive_count,peer_count");
      }
      continue;
    }
    if (fields.size() != 4) {
      throw Error(ErrorCode::kMalformedInput,
                  "line " + std::to_string(line_no) + ": expected 4 fields");
    }
    out.push_back({parse_csv_ecosystem(fields[0], line_no), fields[1],
                   parse_count(fields[2], line_no), parse_count(fields[3], line_no)});
  }
  return out;
}

std::string format_2dp(double value) {
  // The nudge keeps decimal halves such as 1.005 from rounding down due to
  // binary representation.
  double rounded = std::floor(value * 100.0 + 0.5 + 1e-9) / 100.0;
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.2f", rounded);
  return buffer;
}

std::string emit_table(const std::map<Ecosystem, EcosystemStats>& stats,
                       TableFormat format) {
  struct Row {
    std::string eco, dc, pc, inc, exc;
  };
  std::vector<Row> rows;
  for (const auto& [eco, s] : stats) {
    rows.push_back({std::string(ecosystem_token(eco)), format_2dp(s.e_dc),
                    s.e_pc == 0 ? std::string(kDash) : format_2dp(s.e_pc),
                    format_2dp(inclusion_leakage(s)), format_2dp(exclusion_leakage(s))});
  }

  std::ostringstream out;
  if (format == TableFormat::kCsv) {
    out << "ecosystem,avg_transitive,avg_peer,inclusion_leakage,exclusion_leakage\n";
    for (const auto& r : rows) {
      out << r.eco << ',' << r.dc << ',' << r.pc << ',' << r.inc << ',' << r.exc << '\n';
    }
    return out.str();
  }

  char line[160];
  std::snprintf(line, sizeof(line), "%-10s %14s %10s %10s %10s\n", "Ecosystem",
                "Transitive", "Peer", "Inc.", "Exc.");
  out << line;
  for (const auto& r : rows) {
    // "–" is three bytes but one column wide.
    const int pad = r.pc == kDash ? 12 : 10;
    std::snprintf(line, sizeof(line), "%-10s %14s %*s %10s %10s\n", r.eco.c_str(),
                  r.dc.c_str(), pad, r.pc.c_str(), r.inc.c_str(), r.exc.c_str());
    out << line;
  }
  return out.str();
}

}  // namespace zksbom::leakage
