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

#include "zksbom/client_tools.h"

#include <map>

#include "zksbom/errors.h"
#include "zksbom/sbom_ingest.h"

namespace zksbom::client {
namespace {

Verdict invalid(std::string detail) {
  return {Verdict::Kind::kInvalid, std::move(detail)};
}

}  // namespace

Bytes BindingMessage::encode() const {
  const auto& alg = commitment.hash_alg;
  if (alg.size() > 0xff) {
    throw Error(ErrorCode::kMalformedInput, "hash algorithm id too long");
  }
  Bytes out;
  out.reserve(1 + 2 * Digest::kSize + 1 + alg.size());
  out.push_back(static_cast<std::uint8_t>(crypto::Domain::kArtifactBinding));
  out.insert(out.end(), artifact_hash.bytes().begin(), artifact_hash.bytes().end());
  out.insert(out.end(), commitment.root.bytes().begin(), commitment.root.bytes().end());
  out.push_back(static_cast<std::uint8_t>(alg.size()));
  out.insert(out.end(), alg.begin(), alg.end());
  return out;
}

bool supplier_check_commitment(std::string_view sbom_json, const zks::Seed& seed,
                               const zks::Commitment& claimed,
                               std::optional<Ecosystem> ecosystem_hint) {
  auto datastore = sbom::to_datastore(sbom::parse_cyclonedx(sbom_json, ecosystem_hint));
  return zks::commit(datastore, seed).first == claimed;
}

namespace {

tlog::LogEntry make_entry(ByteView artifact, const zks::Commitment& commitment,
                          const crypto::PrivateKey& key) {
  tlog::LogEntry entry;
  entry.artifact_hash = crypto::hash(artifact);
  entry.commitment = commitment;
  entry.supplier_public_key = crypto::public_key_of(key);
  entry.signature =
      crypto::sign(BindingMessage{entry.artifact_hash, commitment}.encode(), key);
  return entry;
}

}  // namespace

tlog::LogDigest supplier_publish(ByteView artifact, const zks::Commitment& commitment,
                                 const crypto::PrivateKey& key, tlog::LogState& log) {
  return tlog::tl_append(log, make_entry(artifact, commitment, key));
}

tlog::LogDigest supplier_publish(ByteView artifact, const zks::Commitment& commitment,
                                 const crypto::PrivateKey& key,
                                 tlog::TransparencyLog& log) {
  return log.append(make_entry(artifact, commitment, key));
}

PublicationCheck check_lookup(const Digest& artifact_hash,
                              const tlog::LogDigest& trusted_digest,
                              const tlog::LookupResult& lookup,
                              const crypto::PublicKey& supplier_key) {
  PublicationCheck out;
  if (!tlog::tl_verify(trusted_digest, artifact_hash, lookup.found, lookup.entry,
                       lookup.proof)) {
    out.detail = "log proof does not verify against the trusted digest";
    return out;
  }
  if (!lookup.found) {
    out.detail = "artifact " + artifact_hash.hex() + " is not published";
    return out;
  }
  const auto& entry = *lookup.entry;
  if (entry.supplier_public_key != supplier_key) {
    out.detail = "entry was published under a different key";
    return out;
  }
  Bytes message = BindingMessage{entry.artifact_hash, entry.commitment}.encode();
  if (!crypto::verify_sig(entry.signature, message, supplier_key)) {
    out.detail = "supplier signature does not verify";
    return out;
  }
  out.ok = true;
  out.commitment = entry.commitment;
  out.detail = "published at sequence " + std::to_string(entry.sequence);
  return out;
}

PublicationCheck consumer_check_publication(ByteView artifact,
                                            const tlog::LogDigest& trusted_digest,
                                            const tlog::LogState& log,
                                            const crypto::PublicKey& supplier_key) {
  try {
    Digest artifact_hash = crypto::hash(artifact);
    return check_lookup(artifact_hash, trusted_digest,
                        tlog::tl_lookup(log, artifact_hash), supplier_key);
  } catch (const std::exception& e) {
    return {false, std::nullopt, e.what()};
  }
}

Verdict consumer_verify_proofs(const zks::Commitment& commitment,
                               std::string_view cve_id,
                               const std::vector<ComponentProof>& proofs,
                               const advisory::AdvisoryDb& db) {
  const auto& affected = db.resolve(cve_id);
  std::map<std::string, const ComponentProof*> by_component;
  for (const auto& p : proofs) {
    std::string id;
    try {
      id = canonical_id(p.component);
    } catch (const Error& e) {
      return invalid(e.what());
    }
    if (!by_component.emplace(id, &p).second) {
      return invalid("duplicate proof for " + id);
    }
  }
  if (by_component.size() != affected.size()) {
    return invalid("expected " + std::to_string(affected.size()) +
                   " proofs, got " + std::to_string(by_component.size()));
  }

  std::size_t included = 0;
  for (const auto& component : affected) {
    const std::string expected = canonical_id(component);
    auto it = by_component.find(expected);
    if (it == by_component.end()) return invalid("missing proof for " + expected);
    const ComponentProof& p = *it->second;

    // The value must be the affected component itself or absent.
    if (p.present != p.value.has_value()) {
      return invalid("present flag disagrees with value for " + expected);
    }
    if (p.value && *p.value != expected) {
      return invalid("proof for " + expected + " carries unrelated value " + *p.value);
    }
    auto wire = from_hex(p.proof_hex);
    auto proof = wire ? zks::decode_proof(*wire) : std::nullopt;
    if (!proof) return invalid("undecodable proof for " + expected);
    const bool inclusion = proof->kind == zks::ZksProof::Kind::kInclusion;
    if (inclusion != p.present) {
      return invalid("proof kind disagrees with claim for " + expected);
    }
    if (!zks::verify(commitment, component_label(expected), p.value, *proof)) {
      return invalid("proof for " + expected + " does not verify");
    }
    if (inclusion) ++included;
  }

  if (included > 0) {
    return {Verdict::Kind::kAffected,
            std::to_string(included) + " of " + std::to_string(affected.size()) +
                " affected components present"};
  }
  return {Verdict::Kind::kNotAffected,
          std::to_string(affected.size()) + " verified non-inclusion proofs"};
}

}  // namespace zksbom::client
