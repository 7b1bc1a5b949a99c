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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zksbom/core_model.h"

namespace zksbom::advisory {

struct Advisory {
  std::string id;
  // Exact affected versions, already expanded from any ranges.
  std::vector<ComponentId> affected;
};

// Offline vulnerability database. Immutable once loaded.
class AdvisoryDb {
 public:
  AdvisoryDb() = default;

  // Fixture: JSON array of {"id": "...", "affected": ["<canonical id>", ...]}.
  // Throws kMalformedFixture or kDuplicateAdvisoryId.
  static AdvisoryDb parse(std::string_view json_text, std::string source = "");
  // Throws kIoError in addition to the parse errors.
  static AdvisoryDb load(const std::filesystem::path& path);
  static AdvisoryDb from_advisories(std::vector<Advisory> advisories);

  // Full affected list in fixture order. Throws kUnknownCve.
  const std::vector<ComponentId>& resolve(std::string_view cve_id) const;
  bool contains(std::string_view cve_id) const;

  std::size_t size() const { return advisories_.size(); }
  const std::string& source() const { return source_; }
  const std::map<std::string, Advisory, std::less<>>& advisories() const {
    return advisories_;
  }

  std::string to_json() const;

 private:
  std::map<std::string, Advisory, std::less<>> advisories_;
  std::string source_;
};

}  // namespace zksbom::advisory
