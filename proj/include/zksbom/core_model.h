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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zksbom/bytes.h"

namespace zksbom {

enum class Ecosystem { kCargo, kGolang, kMaven, kNpm };

// "CARGO", "GOLANG", "MAVEN", "NPM".
std::string_view ecosystem_token(Ecosystem ecosystem);
std::optional<Ecosystem> parse_ecosystem_token(std::string_view token);

// A package coordinate. Canonical text form is `[group:]name@version@ECO`.
struct ComponentId {
  std::optional<std::string> group;
  std::string name;
  std::string version;
  Ecosystem ecosystem = Ecosystem::kNpm;

  friend bool operator==(const ComponentId&, const ComponentId&) = default;
};

// Throws kMalformedComponent when a field is empty or contains a reserved
// separator ('@' anywhere, ':' in group or name) or a line break.
std::string canonical_id(const ComponentId& component);

// Inverse of canonical_id. Throws kMalformedComponent.
ComponentId parse_id(std::string_view text);

// Committed (label, value) pairs, label = H(value), sorted by label.
class Datastore {
 public:
  struct Entry {
    Digest label;
    std::string value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Datastore() = default;

  // Duplicates collapse; input order is irrelevant.
  static Datastore from_components(const std::vector<ComponentId>& components);
  // Values must be canonical component ids. Throws kMalformedComponent.
  static Datastore from_canonical_ids(const std::vector<std::string>& ids);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const Entry* find(const Digest& label) const;

  // Copy without the entry for `label`.
  Datastore without(const Digest& label) const;

  friend bool operator==(const Datastore&, const Datastore&) = default;

 private:
  explicit Datastore(std::vector<Entry> entries) : entries_(std::move(entries)) {}
  static Datastore build(std::vector<std::string> values);

  std::vector<Entry> entries_;
};

// Label under which a component is committed.
Digest component_label(std::string_view canonical);

struct Verdict {
  enum class Kind { kAffected, kNotAffected, kInvalid };
  Kind kind = Kind::kInvalid;
  std::string detail;
};

std::string_view verdict_name(Verdict::Kind kind);

}  // namespace zksbom
