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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zksbom/core_model.h"

namespace zksbom::sbom {

struct IngestStats {
  std::size_t parsed = 0;
  // Components whose ecosystem is unsupported or undeterminable.
  std::size_t skipped = 0;
  // Repeated identities collapsed into one.
  std::size_t duplicates = 0;
};

struct SbomDocument {
  std::string serial_or_name;
  std::vector<ComponentId> components;
  IngestStats stats;
};

// Reads the top-level `components` array of a CycloneDX 1.4-1.6 JSON
// document. The ecosystem comes from the purl type; components without a
// purl use `ecosystem_hint` or are skipped.
//
// Throws kMalformedDocument or kUnsupportedSpecVersion.
SbomDocument parse_cyclonedx(std::string_view document,
                             std::optional<Ecosystem> ecosystem_hint = {});

Datastore to_datastore(const SbomDocument& sbom);

// Parsed purl fields; nullopt for anything that is not `pkg:type/...@ver`.
struct PackageUrl {
  std::string type;
  std::optional<std::string> namespace_;
  std::string name;
  std::string version;
};
std::optional<PackageUrl> parse_purl(std::string_view purl);

// nullopt when the purl type is not one of the supported ecosystems.
std::optional<ComponentId> component_from_purl(const PackageUrl& purl);

}  // namespace zksbom::sbom
