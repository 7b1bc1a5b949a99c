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

#include "zksbom/sbom_ingest.h"

#include <cctype>
#include <set>

#include "json.hpp"
#include "zksbom/errors.h"

namespace zksbom::sbom {
namespace {

using nlohmann::json;

std::string percent_decode(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == '%' && i + 2 < in.size()) {
      auto hex = from_hex(in.substr(i + 1, 2));
      if (hex) {
        out.push_back(static_cast<char>((*hex)[0]));
        i += 2;
        continue;
      }
    }
    out.push_back(in[i]);
  }
  return out;
}

std::optional<std::string> string_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

}  // namespace

std::optional<PackageUrl> parse_purl(std::string_view purl) {
  constexpr std::string_view kScheme = "pkg:";
  if (purl.substr(0, kScheme.size()) != kScheme) return std::nullopt;
  std::string_view rest = purl.substr(kScheme.size());
  // Qualifiers and subpath never carry identity for our purposes.
  rest = rest.substr(0, rest.find_first_of("?#"));
  while (!rest.empty() && rest.front() == '/') rest.remove_prefix(1);

  auto slash = rest.find('/');
  if (slash == std::string_view::npos || slash == 0) return std::nullopt;
  PackageUrl out;
  for (char c : rest.substr(0, slash)) {
    out.type.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  rest = rest.substr(slash + 1);

  auto at = rest.rfind('@');
  if (at == std::string_view::npos || at + 1 == rest.size()) return std::nullopt;
  out.version = percent_decode(rest.substr(at + 1));
  std::string_view path = rest.substr(0, at);
  while (!path.empty() && path.back() == '/') path.remove_suffix(1);
  auto last = path.rfind('/');
  if (last == std::string_view::npos) {
    out.name = percent_decode(path);
  } else {
    out.namespace_ = percent_decode(path.substr(0, last));
    out.name = percent_decode(path.substr(last + 1));
  }
  if (out.name.empty()) return std::nullopt;
  return out;
}

std::optional<ComponentId> component_from_purl(const PackageUrl& purl) {
  ComponentId id;
  id.name = purl.name;
  id.version = purl.version;
  if (purl.type == "maven") {
    id.ecosystem = Ecosystem::kMaven;
    id.group = purl.namespace_;
  } else if (purl.type == "npm") {
    id.ecosystem = Ecosystem::kNpm;
    if (purl.namespace_) {
      // npm scopes carry a leading '@', which is the id separator.
      std::string scope = *purl.namespace_;
      if (!scope.empty() && scope.front() == '@') scope.erase(0, 1);
      id.group = scope;
    }
  } else if (purl.type == "golang") {
    id.ecosystem = Ecosystem::kGolang;
    // Go modules are identified by their full import path.
    if (purl.namespace_) id.name = *purl.namespace_ + "/" + purl.name;
  } else if (purl.type == "cargo") {
    id.ecosystem = Ecosystem::kCargo;
  } else {
    return std::nullopt;
  }
  return id;
}

SbomDocument parse_cyclonedx(std::string_view document,
                             std::optional<Ecosystem> ecosystem_hint) {
  json doc = json::parse(document, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorCode::kMalformedDocument, "not a JSON object");
  }
  if (string_field(doc, "bomFormat") != "CycloneDX") {
    throw Error(ErrorCode::kMalformedDocument, "bomFormat is not CycloneDX");
  }
  auto spec_version = string_field(doc, "specVersion");
  static const std::set<std::string> kSupported = {"1.4", "1.5", "1.6"};
  if (!spec_version || !kSupported.count(*spec_version)) {
    throw Error(ErrorCode::kUnsupportedSpecVersion,
                "specVersion " + spec_version.value_or("<missing>"));
  }

  SbomDocument out;
  if (auto serial = string_field(doc, "serialNumber")) {
    out.serial_or_name = *serial;
  } else if (auto meta = doc.find("metadata");
             meta != doc.end() && meta->is_object()) {
    if (auto root = meta->find("component");
        root != meta->end() && root->is_object()) {
      out.serial_or_name = string_field(*root, "name").value_or("");
    }
  }

  auto components = doc.find("components");
  if (components == doc.end()) return out;
  if (!components->is_array()) {
    throw Error(ErrorCode::kMalformedDocument, "components is not an array");
  }

  std::set<std::string> seen;
  for (const auto& entry : *components) {
    if (!entry.is_object()) {
      throw Error(ErrorCode::kMalformedDocument, "component is not an object");
    }
    std::optional<ComponentId> id;
    if (auto purl_text = string_field(entry, "purl")) {
      if (auto purl = parse_purl(*purl_text)) id = component_from_purl(*purl);
    } else if (ecosystem_hint) {
      auto name = string_field(entry, "name");
      auto version = string_field(entry, "version");
      if (name && version) {
        id = ComponentId{string_field(entry, "group"), *name, *version,
                         *ecosystem_hint};
        if (id->group && id->group->empty()) id->group.reset();
      }
    }
    if (!id) {
      ++out.stats.skipped;
      continue;
    }
    std::string canonical;
    try {
      canonical = canonical_id(*id);
    } catch (const Error&) {
      ++out.stats.skipped;
      continue;
    }
    if (!seen.insert(canonical).second) {
      ++out.stats.duplicates;
      continue;
    }
    out.components.push_back(std::move(*id));
    ++out.stats.parsed;
  }
  return out;
}

Datastore to_datastore(const SbomDocument& sbom) {
  return Datastore::from_components(sbom.components);
}

}  // namespace zksbom::sbom
