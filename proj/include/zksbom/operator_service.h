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

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "zksbom/advisory_db.h"
#include "zksbom/core_model.h"
#include "zksbom/proof_response.h"
#include "zksbom/sbom_ingest.h"
#include "zksbom/zks_engine.h"

namespace zksbom::op {

struct CommitmentRecord {
  zks::Commitment commitment;
  zks::Seed seed{};
  Datastore datastore;
  // Not part of the file format; loaded records take the file's mtime.
  std::chrono::system_clock::time_point created_at{};

  // Compares the persisted content only.
  bool same_content(const CommitmentRecord& other) const {
    return commitment == other.commitment && seed == other.seed &&
           datastore == other.datastore;
  }
};

inline constexpr std::string_view kRecordMagic = "ZKSBOM/1";
inline constexpr std::string_view kRecordExtension = ".zks";

// ZKSBOM/1 \n hash=<alg> \n seed=<hex> \n one canonical id per line
// (ascending label order).
std::string serialize_record(const CommitmentRecord& record);

// Parses and re-derives the commitment; anything that does not reproduce
// `expected` byte-for-byte is kCorruptRecord.
CommitmentRecord parse_record(std::string_view text, const zks::Commitment& expected);

// One write-once file per commitment, named <commitment-hex>.zks.
class RecordStore {
 public:
  explicit RecordStore(std::filesystem::path dir);

  // Rewriting an existing record with identical bytes is a no-op; anything
  // else is kStorageFailure.
  void store_record(const CommitmentRecord& record);
  // Throws kUnknownCommitment, kIoError, kCorruptRecord.
  CommitmentRecord load_record(const zks::Commitment& commitment) const;

  std::filesystem::path path_for(const zks::Commitment& commitment) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::mutex write_mutex_;
};

struct UploadResult {
  zks::Commitment commitment;
  zks::Seed seed{};
  sbom::IngestStats stats;
};

// The operator: turns uploaded SBOMs into commitments and answers
// vulnerability queries for them. Safe for concurrent use.
class OperatorService {
 public:
  using SeedSource = std::function<zks::Seed()>;

  OperatorService(std::filesystem::path store_dir, advisory::AdvisoryDb advisories,
                  SeedSource seed_source = crypto::random_seed);

  // Throws kMalformedDocument, kUnsupportedSpecVersion, kStorageFailure.
  UploadResult upload_sbom(std::string_view document,
                           std::optional<Ecosystem> ecosystem_hint = {});

  // One entry per affected component version, nothing else. Throws
  // kUnknownCommitment, kUnknownCve, kCorruptRecord.
  std::vector<ComponentProof> query_vulnerability(const zks::Commitment& commitment,
                                                  std::string_view cve_id) const;
  std::vector<ComponentProof> query_vulnerability(const zks::Commitment& commitment,
                                                  std::string_view cve_id,
                                                  const advisory::AdvisoryDb& db) const;

  const advisory::AdvisoryDb& advisories() const { return advisories_; }
  RecordStore& store() { return store_; }

 private:
  std::shared_ptr<const zks::CommittedSet> committed_set(
      const zks::Commitment& commitment) const;

  mutable RecordStore store_;
  advisory::AdvisoryDb advisories_;
  SeedSource seed_source_;
  mutable std::shared_mutex cache_mutex_;
  mutable std::map<Digest, std::shared_ptr<const zks::CommittedSet>> cache_;
};

}  // namespace zksbom::op
