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

#include "zksbom/operator_service.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "zksbom/errors.h"

namespace zksbom {

std::string proof_response_to_json(const ProofResponse& response) {
  nlohmann::json proofs = nlohmann::json::array();
  for (const auto& p : response.proofs) {
    proofs.push_back({{"component", canonical_id(p.component)},
                      {"present", p.present},
                      {"value", p.value ? nlohmann::json(*p.value) : nlohmann::json()},
                      {"proof", p.proof_hex}});
  }
  return nlohmann::json{{"cve", response.cve}, {"proofs", proofs}}.dump();
}

ProofResponse proof_response_from_json(std::string_view text) {
  auto doc = nlohmann::json::parse(text, nullptr, false);
  auto bad = [](const std::string& what) {
    return Error(ErrorCode::kMalformedInput, "proof response: " + what);
  };
  if (doc.is_discarded() || !doc.is_object()) throw bad("not a JSON object");
  if (!doc.contains("cve") || !doc["cve"].is_string()) throw bad("missing cve");
  if (!doc.contains("proofs") || !doc["proofs"].is_array()) throw bad("missing proofs");
  ProofResponse out;
  out.cve = doc["cve"].get<std::string>();
  for (const auto& item : doc["proofs"]) {
    if (!item.is_object() || !item.contains("component") ||
        !item["component"].is_string() || !item.contains("present") ||
        !item["present"].is_boolean() || !item.contains("proof") ||
        !item["proof"].is_string()) {
      throw bad("malformed proof entry");
    }
    ComponentProof p;
    try {
      p.component = parse_id(item["component"].get<std::string>());
    } catch (const Error& e) {
      throw bad(e.what());
    }
    p.present = item["present"].get<bool>();
    if (item.contains("value") && !item["value"].is_null()) {
      if (!item["value"].is_string()) throw bad("value must be string or null");
      p.value = item["value"].get<std::string>();
    }
    p.proof_hex = item["proof"].get<std::string>();
    out.proofs.push_back(std::move(p));
  }
  return out;
}

namespace op {
namespace {

Error corrupt(const std::string& what) { return Error(ErrorCode::kCorruptRecord, what); }

}  // namespace

std::string serialize_record(const CommitmentRecord& record) {
  std::string out;
  out += kRecordMagic;
  out += "\nhash=";
  out += record.commitment.hash_alg;
  out += "\nseed=";
  out += to_hex(record.seed);
  out += '\n';
  for (const auto& e : record.datastore.entries()) {
    out += e.value;
    out += '\n';
  }
  return out;
}

CommitmentRecord parse_record(std::string_view text, const zks::Commitment& expected) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) throw corrupt("missing final newline");
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.size() < 3 || lines[0] != kRecordMagic) throw corrupt("bad header");
  if (lines[1] != "hash=" + std::string(crypto::kHashAlgorithm)) {
    throw corrupt("unsupported hash line: " + lines[1]);
  }
  constexpr std::string_view kSeedPrefix = "seed=";
  if (lines[2].rfind(kSeedPrefix, 0) != 0) throw corrupt("missing seed line");
  auto seed_bytes = from_hex(std::string_view(lines[2]).substr(kSeedPrefix.size()));
  if (!seed_bytes || seed_bytes->size() != 32) throw corrupt("bad seed");

  CommitmentRecord record;
  std::copy(seed_bytes->begin(), seed_bytes->end(), record.seed.begin());
  try {
    record.datastore = Datastore::from_canonical_ids({lines.begin() + 3, lines.end()});
  } catch (const Error& e) {
    throw corrupt(e.what());
  }
  record.commitment = zks::commit(record.datastore, record.seed).first;
  if (record.commitment != expected) {
    throw corrupt("recomputed root " + record.commitment.root.hex() +
                  " does not match " + expected.root.hex());
  }
  // Rejects anything that parses but is not the canonical rendering, such
  // as reordered or duplicated lines or upper-case hex.
  if (serialize_record(record) != text) throw corrupt("non-canonical record");
  return record;
}

RecordStore::RecordStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorCode::kStorageFailure, dir_.string() + ": " + ec.message());
}

std::filesystem::path RecordStore::path_for(const zks::Commitment& commitment) const {
  return dir_ / (commitment.root.hex() + std::string(kRecordExtension));
}

void RecordStore::store_record(const CommitmentRecord& record) {
  const std::string bytes = serialize_record(record);
  const auto path = path_for(record.commitment);
  std::lock_guard lock(write_mutex_);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream existing;
    existing << in.rdbuf();
    if (existing.str() == bytes) return;
    throw Error(ErrorCode::kStorageFailure,
                "record " + path.filename().string() + " exists with other content");
  }
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kStorageFailure, "cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out.flush()) throw Error(ErrorCode::kStorageFailure, "write failed " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kStorageFailure, ec.message());
}

CommitmentRecord RecordStore::load_record(const zks::Commitment& commitment) const {
  const auto path = path_for(commitment);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    throw Error(ErrorCode::kUnknownCommitment, commitment.root.hex());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  CommitmentRecord record = parse_record(buffer.str(), commitment);
  auto mtime = std::filesystem::last_write_time(path, ec);
  if (!ec) {
    record.created_at = std::chrono::time_point_cast<std::chrono::system_clock::duration>(
        mtime - std::filesystem::file_time_type::clock::now() +
        std::chrono::system_clock::now());
  }
  return record;
}

OperatorService::OperatorService(std::filesystem::path store_dir,
                                 advisory::AdvisoryDb advisories, SeedSource seed_source)
    : store_(std::move(store_dir)),
      advisories_(std::move(advisories)),
      seed_source_(std::move(seed_source)) {}

UploadResult OperatorService::upload_sbom(std::string_view document,
                                          std::optional<Ecosystem> ecosystem_hint) {
  auto sbom = sbom::parse_cyclonedx(document, ecosystem_hint);
  CommitmentRecord record;
  record.seed = seed_source_();
  record.datastore = sbom::to_datastore(sbom);
  record.created_at = std::chrono::system_clock::now();
  auto set = std::make_shared<const zks::CommittedSet>(
      zks::SecretState{record.seed, record.datastore});
  record.commitment = set->commitment();
  store_.store_record(record);
  {
    std::unique_lock lock(cache_mutex_);
    cache_.emplace(record.commitment.root, set);
  }
  return {record.commitment, record.seed, sbom.stats};
}

std::shared_ptr<const zks::CommittedSet> OperatorService::committed_set(
    const zks::Commitment& commitment) const {
  {
    std::shared_lock lock(cache_mutex_);
    if (auto it = cache_.find(commitment.root); it != cache_.end()) return it->second;
  }
  CommitmentRecord record = store_.load_record(commitment);
  auto set = std::make_shared<const zks::CommittedSet>(
      zks::SecretState{record.seed, std::move(record.datastore)});
  std::unique_lock lock(cache_mutex_);
  return cache_.emplace(commitment.root, set).first->second;
}

std::vector<ComponentProof> OperatorService::query_vulnerability(
    const zks::Commitment& commitment, std::string_view cve_id) const {
  return query_vulnerability(commitment, cve_id, advisories_);
}

std::vector<ComponentProof> OperatorService::query_vulnerability(
    const zks::Commitment& commitment, std::string_view cve_id,
    const advisory::AdvisoryDb& db) const {
  if (commitment.hash_alg != crypto::kHashAlgorithm) {
    throw Error(ErrorCode::kUnknownCommitment, "hash " + commitment.hash_alg);
  }
  auto set = committed_set(commitment);
  const auto& affected = db.resolve(cve_id);
  std::vector<ComponentProof> out;
  out.reserve(affected.size());
  for (const auto& component : affected) {
    const std::string id = canonical_id(component);
    auto result = set->query(component_label(id));
    ComponentProof p;
    p.component = component;
    p.present = result.value.has_value();
    p.value = result.value;
    p.proof_hex = to_hex(zks::encode_proof(result.proof));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace op
}  // namespace zksbom
