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

#include "zksbom/advisory_db.h"
#include "zksbom/bytes.h"
#include "zksbom/core_model.h"
#include "zksbom/crypto.h"
#include "zksbom/proof_response.h"
#include "zksbom/transparency_log.h"
#include "zksbom/zks_engine.h"

// Supplier and consumer sides of the protocol.
namespace zksbom::client {

// What the supplier signs: binds the commitment to one artifact.
//   0x03 || artifact_hash || root || u8 len || hash_alg
struct BindingMessage {
  Digest artifact_hash;
  zks::Commitment commitment;

  Bytes encode() const;
};

// Recomputes the commitment from the supplier's own SBOM and the seed the
// operator returned. Throws kMalformedDocument for an unreadable SBOM.
bool supplier_check_commitment(std::string_view sbom_json, const zks::Seed& seed,
                               const zks::Commitment& claimed,
                               std::optional<Ecosystem> ecosystem_hint = {});

// Signs and appends (H(A), c) to the log. Throws kDuplicateArtifact,
// kInvalidKey.
tlog::LogDigest supplier_publish(ByteView artifact, const zks::Commitment& commitment,
                                 const crypto::PrivateKey& key, tlog::LogState& log);
tlog::LogDigest supplier_publish(ByteView artifact, const zks::Commitment& commitment,
                                 const crypto::PrivateKey& key,
                                 tlog::TransparencyLog& log);

struct PublicationCheck {
  bool ok = false;
  std::optional<zks::Commitment> commitment;
  std::string detail;
};

// Looks H(A) up, checks the map proof against `trusted_digest` and the
// entry signature under `supplier_key`. Never throws.
PublicationCheck consumer_check_publication(ByteView artifact,
                                            const tlog::LogDigest& trusted_digest,
                                            const tlog::LogState& log,
                                            const crypto::PublicKey& supplier_key);

// Same checks over a lookup result obtained elsewhere.
PublicationCheck check_lookup(const Digest& artifact_hash,
                              const tlog::LogDigest& trusted_digest,
                              const tlog::LookupResult& lookup,
                              const crypto::PublicKey& supplier_key);

// Affected if any proof is a verified inclusion of an affected id;
// NotAffected if every affected id has a verified non-inclusion proof;
// Invalid otherwise. Throws kUnknownCve.
Verdict consumer_verify_proofs(const zks::Commitment& commitment,
                               std::string_view cve_id,
                               const std::vector<ComponentProof>& proofs,
                               const advisory::AdvisoryDb& db);

}  // namespace zksbom::client
