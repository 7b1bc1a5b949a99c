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

#include "zksbom/core_model.h"

// Body of the operator's proof endpoint, consumed verbatim by verifiers:
//
//   {"cve": "<id>", "proofs": [{"component": "<canonical id>",
//     "present": bool, "value": "<id>"|null, "proof": "<hex>"}]}
namespace zksbom {

struct ComponentProof {
  ComponentId component;
  bool present = false;
  std::optional<std::string> value;
  std::string proof_hex;

  friend bool operator==(const ComponentProof&, const ComponentProof&) = default;
};

struct ProofResponse {
  std::string cve;
  std::vector<ComponentProof> proofs;
};

std::string proof_response_to_json(const ProofResponse& response);
// Throws kMalformedInput.
ProofResponse proof_response_from_json(std::string_view text);

}  // namespace zksbom
