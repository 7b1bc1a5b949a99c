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
#include <set>

#include "test_util.h"
#include "zksbom/core_model.h"
#include "zksbom/errors.h"

namespace zksbom {
namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kMalformedInput;
}

TEST_CASE("canonical_id renders maven coordinates with group") {
  ComponentId log4j{"org.apache.logging.log4j", "log4j-core", "2.8.2",
                    Ecosystem::kMaven};
  CHECK(canonical_id(log4j) ==
        "org.apache.logging.log4j:log4j-core@2.8.2@MAVEN");
  CHECK(canonical_id({std::nullopt, "a", "1", Ecosystem::kNpm}) == "a@1@NPM");
}

TEST_CASE("canonical_id rejects empty and reserved fields") {
  CHECK(code_of([] { canonical_id({std::nullopt, "", "1", Ecosystem::kNpm}); }) ==
        ErrorCode::kMalformedComponent);
  CHECK(code_of([] { canonical_id({std::nullopt, "a", "", Ecosystem::kNpm}); }) ==
        ErrorCode::kMalformedComponent);
  CHECK(code_of([] { canonical_id({"", "a", "1", Ecosystem::kNpm}); }) ==
        ErrorCode::kMalformedComponent);
  CHECK(code_of([] { canonical_id({std::nullopt, "a@b", "1", Ecosystem::kNpm}); }) ==
        ErrorCode::kMalformedComponent);
  CHECK(code_of([] { canonical_id({std::nullopt, "a:b", "1", Ecosystem::kNpm}); }) ==
        ErrorCode::kMalformedComponent);
  CHECK(code_of([] { canonical_id({"g:h", "a", "1", Ecosystem::kNpm}); }) ==
        ErrorCode::kMalformedComponent);
  CHECK(code_of([] { canonical_id({std::nullopt, "a", "1@2", Ecosystem::kNpm}); }) ==
        ErrorCode::kMalformedComponent);
  CHECK(code_of([] { canonical_id({std::nullopt, "a\nb", "1", Ecosystem::kNpm}); }) ==
        ErrorCode::kMalformedComponent);
}

TEST_CASE("parse_id examples") {
  CHECK(parse_id("a@1@NPM") == ComponentId{std::nullopt, "a", "1", Ecosystem::kNpm});
  CHECK(parse_id("g:n@2.0@MAVEN") == ComponentId{"g", "n", "2.0", Ecosystem::kMaven});
  CHECK(parse_id("runc@v1.1.11@GOLANG").ecosystem == Ecosystem::kGolang);
  CHECK(parse_id("tokio@1.0.0@CARGO").ecosystem == Ecosystem::kCargo);
  for (const char* bad : {"a@1@PYPI", "a@1", "a", "@1@NPM", "a@@NPM", "a@1@npm",
                          ":a@1@NPM", "g:a:b@1@NPM", "a@1@NPM@"}) {
    CAPTURE(bad);
    CHECK(code_of([&] { parse_id(bad); }) == ErrorCode::kMalformedComponent);
  }
}

TEST_CASE("parse_id inverts canonical_id over random ids") {
  std::set<std::string> seen;
  std::vector<ComponentId> ids;
  for (int i = 0; i < 1000; ++i) {
    ComponentId id = testing::random_component();
    auto text = canonical_id(id);
    CHECK(parse_id(text) == id);
    // Injectivity: equal strings only for equal ids.
    for (std::size_t j = 0; j < ids.size() && seen.count(text); ++j) {
      if (canonical_id(ids[j]) == text) CHECK(ids[j] == id);
    }
    seen.insert(text);
    ids.push_back(id);
  }
}

TEST_CASE("datastore is sorted, deduplicated and order insensitive") {
  std::vector<ComponentId> components;
  for (int i = 0; i < 200; ++i) components.push_back(testing::random_component());
  components.push_back(components[3]);

  Datastore store = Datastore::from_components(components);
  CHECK(store.size() == 200);
  for (const auto& e : store.entries()) CHECK(e.label == component_label(e.value));
  CHECK(std::is_sorted(store.entries().begin(), store.entries().end(),
                       [](const auto& a, const auto& b) { return a.label < b.label; }));

  auto shuffled = components;
  std::shuffle(shuffled.begin(), shuffled.end(), testing::rng());
  CHECK(Datastore::from_components(shuffled) == store);
  CHECK(Datastore::from_components(components) == store);

  const auto& first = store.entries().front();
  CHECK(store.find(first.label) != nullptr);
  CHECK(store.without(first.label).size() == 199);
  CHECK(store.without(first.label).find(first.label) == nullptr);
}

}  // namespace
}  // namespace zksbom
