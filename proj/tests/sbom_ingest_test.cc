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

#include <fstream>
#include <sstream>

#include "zksbom/errors.h"
#include "zksbom/sbom_ingest.h"

namespace zksbom::sbom {
namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(ZKSBOM_FIXTURE_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> ids(const SbomDocument& doc) {
  std::vector<std::string> out;
  for (const auto& c : doc.components) out.push_back(canonical_id(c));
  return out;
}

ErrorCode code_of(const std::string& doc) {
  try {
    parse_cyclonedx(doc);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::kIoError;
}

TEST_CASE("druid fixture yields the log4j maven identity") {
  auto doc = parse_cyclonedx(fixture("druid_sbom.json"));
  auto all = ids(doc);
  CHECK(std::find(all.begin(), all.end(),
                  "org.apache.logging.log4j:log4j-core@2.8.2@MAVEN") != all.end());
  CHECK(doc.stats.parsed == 15);
  CHECK(doc.stats.skipped == 0);
  CHECK(doc.serial_or_name == "urn:uuid:3e671687-395b-41f5-a30f-a58921a69b79");
  CHECK(to_datastore(doc).size() == 15);
}

TEST_CASE("npm fixture handles scopes, qualifiers, duplicates and skips") {
  auto doc = parse_cyclonedx(fixture("npm_sbom.json"));
  auto all = ids(doc);
  CHECK(std::find(all.begin(), all.end(), "babel:core@7.24.0@NPM") != all.end());
  CHECK(std::find(all.begin(), all.end(), "minimist@1.2.5@NPM") != all.end());
  CHECK(doc.stats.duplicates == 1);
  // No purl and an unsupported purl type.
  CHECK(doc.stats.skipped == 2);
  CHECK(doc.serial_or_name == "storefront-web");

  auto hinted = parse_cyclonedx(fixture("npm_sbom.json"), Ecosystem::kNpm);
  auto with_hint = ids(hinted);
  CHECK(std::find(with_hint.begin(), with_hint.end(), "internal-widget@0.3.1@NPM") !=
        with_hint.end());
  CHECK(hinted.stats.skipped == 1);
}

TEST_CASE("cargo and golang purls") {
  auto doc = parse_cyclonedx(fixture("polyglot_sbom.json"));
  auto all = ids(doc);
  CHECK(std::find(all.begin(), all.end(), "serde@1.0.197@CARGO") != all.end());
  CHECK(std::find(all.begin(), all.end(), "golang.org/x/net@v0.17.0@GOLANG") != all.end());
  CHECK(std::find(all.begin(), all.end(), "org.yaml:snakeyaml@1.33@MAVEN") != all.end());
  CHECK(doc.stats.parsed == 5);
}

TEST_CASE("empty component list") {
  auto doc = parse_cyclonedx(fixture("empty_sbom.json"));
  CHECK(doc.components.empty());
  CHECK(to_datastore(doc).empty());
  auto bare = parse_cyclonedx(R"({"bomFormat":"CycloneDX","specVersion":"1.4"})");
  CHECK(bare.components.empty());
}

TEST_CASE("document errors") {
  CHECK(code_of("not json") == ErrorCode::kMalformedDocument);
  CHECK(code_of("[]") == ErrorCode::kMalformedDocument);
  CHECK(code_of(R"({"bomFormat":"SPDX","specVersion":"1.5"})") ==
        ErrorCode::kMalformedDocument);
  CHECK(code_of(R"({"bomFormat":"CycloneDX","specVersion":"1.2"})") ==
        ErrorCode::kUnsupportedSpecVersion);
  CHECK(code_of(R"({"bomFormat":"CycloneDX","specVersion":"1.5","components":{}})") ==
        ErrorCode::kMalformedDocument);
}

TEST_CASE("nested components are not read") {
  auto doc = parse_cyclonedx(R"({"bomFormat":"CycloneDX","specVersion":"1.5",
    "components":[{"type":"library","name":"a","version":"1","purl":"pkg:npm/a@1",
      "components":[{"type":"library","name":"b","version":"1","purl":"pkg:npm/b@1"}]}]})");
  REQUIRE(doc.components.size() == 1);
  CHECK(doc.components[0].name == "a");
}

TEST_CASE("purl parsing") {
  auto p = parse_purl("pkg:maven/org.apache.logging.log4j/log4j-core@2.8.2?type=jar");
  REQUIRE(p);
  CHECK(p->type == "maven");
  CHECK(p->namespace_ == "org.apache.logging.log4j");
  CHECK(p->name == "log4j-core");
  CHECK(p->version == "2.8.2");

  auto scoped = parse_purl("pkg:npm/%40angular/core@17.0.0");
  REQUIRE(scoped);
  auto id = component_from_purl(*scoped);
  REQUIRE(id);
  CHECK(canonical_id(*id) == "angular:core@17.0.0@NPM");

  CHECK_FALSE(parse_purl("maven/x@1"));
  CHECK_FALSE(parse_purl("pkg:npm/left-pad"));
  auto pypi = parse_purl("pkg:pypi/requests@2.0");
  REQUIRE(pypi);
  CHECK_FALSE(component_from_purl(*pypi));
}

}  // namespace
}  // namespace zksbom::sbom
