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

#include "zksbom/advisory_db.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "zksbom/errors.h"

namespace zksbom::advisory {

AdvisoryDb AdvisoryDb::from_advisories(std::vector<Advisory> advisories) {
  AdvisoryDb db;
  for (auto& adv : advisories) {
    if (adv.id.empty() || adv.affected.empty()) {
      throw Error(ErrorCode::kMalformedFixture,
                  "advisory needs an id and affected components");
    }
    std::set<std::string> seen;
    std::vector<ComponentId> unique;
    for (auto& c : adv.affected) {
      if (seen.insert(canonical_id(c)).second) unique.push_back(std::move(c));
    }
    adv.affected = std::move(unique);
    std::string id = adv.id;
    if (!db.advisories_.emplace(id, std::move(adv)).second) {
      throw Error(ErrorCode::kDuplicateAdvisoryId, id);
    }
  }
  return db;
}

AdvisoryDb AdvisoryDb::parse(std::string_view json_text, std::string source) {
  auto doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) {
    throw Error(ErrorCode::kMalformedFixture, "expected a JSON array");
  }
  std::vector<Advisory> advisories;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("id") || !item["id"].is_string() ||
        !item.contains("affected") || !item["affected"].is_array()) {
      throw Error(ErrorCode::kMalformedFixture,
                  "advisory entries need string id and affected array");
    }
    Advisory adv;
    adv.id = item["id"].get<std::string>();
    for (const auto& a : item["affected"]) {
      if (!a.is_string()) {
        throw Error(ErrorCode::kMalformedFixture, adv.id + ": affected entry is not a string");
      }
      try {
        adv.affected.push_back(parse_id(a.get<std::string>()));
      } catch (const Error& e) {
        throw Error(ErrorCode::kMalformedFixture, adv.id + ": " + e.what());
      }
    }
    advisories.push_back(std::move(adv));
  }
  AdvisoryDb db = from_advisories(std::move(advisories));
  db.source_ = std::move(source);
  return db;
}

AdvisoryDb AdvisoryDb::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path.string());
}

const std::vector<ComponentId>& AdvisoryDb::resolve(std::string_view cve_id) const {
  auto it = advisories_.find(cve_id);
  if (it == advisories_.end()) {
    throw Error(ErrorCode::kUnknownCve, std::string(cve_id));
  }
  return it->second.affected;
}

bool AdvisoryDb::contains(std::string_view cve_id) const {
  return advisories_.find(cve_id) != advisories_.end();
}

std::string AdvisoryDb::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [id, adv] : advisories_) {
    nlohmann::json affected = nlohmann::json::array();
    for (const auto& c : adv.affected) affected.push_back(canonical_id(c));
    out.push_back({{"id", id}, {"affected", affected}});
  }
  return out.dump(2);
}

}  // namespace zksbom::advisory
