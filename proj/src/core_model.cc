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

#include "zksbom/core_model.h"

#include <algorithm>

#include "zksbom/crypto.h"
#include "zksbom/errors.h"

namespace zksbom {
namespace {

void check_field(std::string_view field, std::string_view what,
                 bool allow_colon) {
  if (field.empty()) {
    throw Error(ErrorCode::kMalformedComponent, std::string(what) + " is empty");
  }
  for (char c : field) {
    if (c == '@' || (!allow_colon && c == ':') || c == '\n' || c == '\r') {
      throw Error(ErrorCode::kMalformedComponent,
                  std::string(what) + " contains a reserved character: " +
                      std::string(field));
    }
  }
}

}  // namespace

std::string_view ecosystem_token(Ecosystem ecosystem) {
  switch (ecosystem) {
    case Ecosystem::kCargo: return "CARGO";
    case Ecosystem::kGolang: return "GOLANG";
    case Ecosystem::kMaven: return "MAVEN";
    case Ecosystem::kNpm: return "NPM";
  }
  return "";
}

std::optional<Ecosystem> parse_ecosystem_token(std::string_view token) {
  for (auto eco : {Ecosystem::kCargo, Ecosystem::kGolang, Ecosystem::kMaven,
                   Ecosystem::kNpm}) {
    if (token == ecosystem_token(eco)) return eco;
  }
  return std::nullopt;
}

std::string canonical_id(const ComponentId& component) {
  if (component.group) check_field(*component.group, "group", false);
  check_field(component.name, "name", false);
  check_field(component.version, "version", true);

  std::string out;
  if (component.group) {
    out += *component.group;
    out += ':';
  }
  out += component.name;
  out += '@';
  out += component.version;
  out += '@';
  out += ecosystem_token(component.ecosystem);
  return out;
}

ComponentId parse_id(std::string_view text) {
  auto last = text.rfind('@');
  if (last == std::string_view::npos || last == 0) {
    throw Error(ErrorCode::kMalformedComponent,
                "expected name@version@ECOSYSTEM: " + std::string(text));
  }
  auto middle = text.rfind('@', last - 1);
  if (middle == std::string_view::npos) {
    throw Error(ErrorCode::kMalformedComponent,
                "expected name@version@ECOSYSTEM: " + std::string(text));
  }
  auto eco = parse_ecosystem_token(text.substr(last + 1));
  if (!eco) {
    throw Error(ErrorCode::kMalformedComponent,
                "unknown ecosystem in " + std::string(text));
  }

  ComponentId id;
  id.ecosystem = *eco;
  id.version = std::string(text.substr(middle + 1, last - middle - 1));
  std::string_view coordinate = text.substr(0, middle);
  if (auto colon = coordinate.find(':'); colon != std::string_view::npos) {
    id.group = std::string(coordinate.substr(0, colon));
    id.name = std::string(coordinate.substr(colon + 1));
  } else {
    id.name = std::string(coordinate);
  }
  // Round-trip to apply the same field rules as canonical_id.
  if (canonical_id(id) != text) {
    throw Error(ErrorCode::kMalformedComponent,
                "not a canonical component id: " + std::string(text));
  }
  return id;
}

Digest component_label(std::string_view canonical) {
  return crypto::hash(canonical);
}

Datastore Datastore::from_components(const std::vector<ComponentId>& components) {
  std::vector<std::string> values;
  values.reserve(components.size());
  for (const auto& c : components) values.push_back(canonical_id(c));
  return build(std::move(values));
}

Datastore Datastore::from_canonical_ids(const std::vector<std::string>& ids) {
  for (const auto& id : ids) parse_id(id);
  return build(ids);
}

Datastore Datastore::build(std::vector<std::string> values) {
  std::vector<Entry> entries;
  entries.reserve(values.size());
  for (auto& v : values) {
    Digest label = component_label(v);
    entries.push_back({label, std::move(v)});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.label < b.label; });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const Entry& a, const Entry& b) {
                              return a.label == b.label;
                            }),
                entries.end());
  return Datastore(std::move(entries));
}

const Datastore::Entry* Datastore::find(const Digest& label) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), label,
      [](const Entry& e, const Digest& l) { return e.label < l; });
  if (it == entries_.end() || it->label != label) return nullptr;
  return &*it;
}

Datastore Datastore::without(const Digest& label) const {
  std::vector<Entry> kept;
  kept.reserve(entries_.size());
  std::copy_if(entries_.begin(), entries_.end(), std::back_inserter(kept),
               [&](const Entry& e) { return e.label != label; });
  return Datastore(std::move(kept));
}

std::string_view verdict_name(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::kAffected: return "Affected";
    case Verdict::Kind::kNotAffected: return "NotAffected";
    case Verdict::Kind::kInvalid: return "Invalid";
  }
  return "";
}

}  // namespace zksbom
