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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "zksbom/advisory_db.h"
#include "zksbom/errors.h"

namespace zksbom::advisory {
namespace {

const std::string kFixture = std::string(ZKSBOM_FIXTURE_DIR) + "/advisories.json";

ErrorCode code_of(std::string_view json) {
  try {
    AdvisoryDb::parse(json);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::kIoError;
}

std::vector<std::string> resolved_ids(const AdvisoryDb& db, std::string_view cve) {
  std::vector<std::string> out;
  for (const auto& c : db.resolve(cve)) out.push_back(canonical_id(c));
  return out;
}

TEST_CASE("two advisories") {
  auto db = AdvisoryDb::parse(R"([{"id":"A","affected":["x@1@NPM"]},
                                  {"id":"B","affected":["y@2@CARGO","y@3@CARGO"]}])");
  CHECK(db.size() == 2);
  CHECK(resolved_ids(db, "B") == std::vector<std::string>{"y@2@CARGO", "y@3@CARGO"});
}

TEST_CASE("fixture errors") {
  CHECK(code_of(R"([{"id":"A","affected":["x@1@NPM"]},{"id":"A","affected":["y@1@NPM"]}])") ==
        ErrorCode::kDuplicateAdvisoryId);
  CHECK(code_of("{}") == ErrorCode::kMalformedFixture);
  CHECK(code_of("nope") == ErrorCode::kMalformedFixture);
  CHECK(code_of(R"([{"id":"A"}])") == ErrorCode::kMalformedFixture);
  CHECK(code_of(R"([{"id":"A","affected":["not-canonical"]}])") ==
        ErrorCode::kMalformedFixture);
  CHECK(code_of(R"([{"id":"","affected":["x@1@NPM"]}])") == ErrorCode::kMalformedFixture);
  try {
    AdvisoryDb::load("/nonexistent/advisories.json");
    FAIL("loaded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIoError);
  }
}

TEST_CASE("log4shell lists log4j-core 2.8.2") {
  auto db = AdvisoryDb::load(kFixture);
  auto ids = resolved_ids(db, "CVE-2021-44228");
  CHECK(std::find(ids.begin(), ids.end(),
                  "org.apache.logging.log4j:log4j-core@2.8.2@MAVEN") != ids.end());
  CHECK(db.source() == kFixture);
}

TEST_CASE("react server components advisory has eleven identities") {
  auto db = AdvisoryDb::load(kFixture);
  CHECK(db.resolve("CVE-2025-55182").size() == 11);
}

TEST_CASE("unknown cve") {
  auto db = AdvisoryDb::load(kFixture);
  CHECK_FALSE(db.contains("CVE-0000-0000"));
  try {
    db.resolve("CVE-0000-0000");
    FAIL("resolved");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownCve);
  }
}

TEST_CASE("json round trip and shared resolution") {
  auto db = AdvisoryDb::load(kFixture);
  auto again = AdvisoryDb::parse(db.to_json());
  CHECK(again.size() == db.size());
  for (const auto& [id, adv] : db.advisories()) {
    CHECK(resolved_ids(again, id) == resolved_ids(db, id));
  }
}

}  // namespace
}  // namespace zksbom::advisory
