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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "zksbom/bytes.h"
#include "zksbom/crypto.h"
#include "zksbom/sparse_merkle_tree.h"
#include "zksbom/zks_engine.h"

// Append-only verifiable map from artifact hashes H(A) to signed
// commitments. The map is a sparse Merkle tree with the ZKS leaf rule and an
// all-zero salt; the leaf value is the entry encoding below.
namespace zksbom::tlog {

using LogDigest = Digest;

struct LogEntry {
  Digest artifact_hash;
  zks::Commitment commitment;
  crypto::Signature signature;
  crypto::PublicKey supplier_public_key;
  std::uint64_t sequence = 0;

  friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

// artifact_hash || root || u8 len || alg || u16be len || sig || u16be len || pk
Bytes encode_entry(const LogEntry& entry);
std::optional<LogEntry> decode_entry(ByteView wire, std::uint64_t sequence = 0);

Digest entry_leaf(const LogEntry& entry);

struct LogState {
  std::vector<LogEntry> entries;
  // digest_history[i] is the map root after i + 1 appends.
  std::vector<LogDigest> digest_history;
  smt::SparseMerkleTree map;
  // artifact_hash -> position in `entries`.
  std::unordered_map<Digest, std::size_t, DigestHash> index;

  LogDigest map_root() const { return map.root(); }
};

struct LookupResult {
  bool found = false;
  std::optional<LogEntry> entry;
  smt::MerklePath proof;
  // Digest the proof was generated against.
  LogDigest digest;
};

LogState tl_setup();

// Validates before mutating, so a rejected entry leaves `state` untouched.
// Throws kInvalidSignature or kDuplicateArtifact. The entry's sequence is
// assigned from its position.
LogDigest tl_append(LogState& state, LogEntry entry);

LookupResult tl_lookup(const LogState& state, const Digest& artifact_hash);

bool tl_verify(const LogDigest& trusted_digest, const Digest& artifact_hash,
               bool found, const std::optional<LogEntry>& entry,
               const smt::MerklePath& proof) noexcept;

// True iff `old_digest` is in the history and replaying the entries
// reproduces every history digest and the current root.
bool tl_audit_append_only(const LogDigest& old_digest, const LogState& new_state);

// Directory layout: entries.log (one hex entry per line) and digests.log
// (one hex digest per line). A missing directory loads as an empty log.
void save_log(const LogState& state, const std::filesystem::path& dir);
// Throws kIoError or kCorruptRecord when the replay disagrees with digests.log.
LogState load_log(const std::filesystem::path& dir);

// Single-writer, multi-reader wrapper.
class TransparencyLog {
 public:
  TransparencyLog() : state_(tl_setup()) {}
  explicit TransparencyLog(LogState state) : state_(std::move(state)) {}

  LogDigest append(LogEntry entry);
  LookupResult lookup(const Digest& artifact_hash) const;
  LogDigest digest() const;
  LogState snapshot() const;

 private:
  mutable std::shared_mutex mutex_;
  LogState state_;
};

}  // namespace zksbom::tlog
