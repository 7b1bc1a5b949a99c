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

#include "zksbom/transparency_log.h"

#include <fstream>
#include <mutex>
#include <set>

#include "zksbom/client_tools.h"
#include "zksbom/errors.h"

namespace zksbom::tlog {
namespace {

void put_u16(Bytes& out, std::size_t n) {
  out.push_back(static_cast<std::uint8_t>(n >> 8));
  out.push_back(static_cast<std::uint8_t>(n & 0xff));
}

void put(Bytes& out, ByteView part) { out.insert(out.end(), part.begin(), part.end()); }

bool signature_ok(const LogEntry& entry) {
  Bytes message =
      client::BindingMessage{entry.artifact_hash, entry.commitment}.encode();
  return crypto::verify_sig(entry.signature, message, entry.supplier_public_key);
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::vector<std::string> lines;
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace

Bytes encode_entry(const LogEntry& entry) {
  const auto& alg = entry.commitment.hash_alg;
  if (alg.size() > 0xff || entry.signature.bytes.size() > 0xffff ||
      entry.supplier_public_key.bytes.size() > 0xffff) {
    throw Error(ErrorCode::kMalformedInput, "log entry field too long");
  }
  Bytes out;
  put(out, entry.artifact_hash.bytes());
  put(out, entry.commitment.root.bytes());
  out.push_back(static_cast<std::uint8_t>(alg.size()));
  put(out, as_bytes(alg));
  put_u16(out, entry.signature.bytes.size());
  put(out, entry.signature.bytes);
  put_u16(out, entry.supplier_public_key.bytes.size());
  put(out, entry.supplier_public_key.bytes);
  return out;
}

std::optional<LogEntry> decode_entry(ByteView wire, std::uint64_t sequence) {
  std::size_t at = 0;
  auto take = [&](std::size_t n) -> std::optional<ByteView> {
    if (wire.size() - at < n) return std::nullopt;
    ByteView out = wire.subspan(at, n);
    at += n;
    return out;
  };
  auto take_u16 = [&]() -> std::optional<std::size_t> {
    auto b = take(2);
    if (!b) return std::nullopt;
    return (std::size_t{(*b)[0]} << 8) | (*b)[1];
  };

  LogEntry entry;
  entry.sequence = sequence;
  auto artifact = take(Digest::kSize);
  auto root = take(Digest::kSize);
  auto alg_len = take(1);
  if (!artifact || !root || !alg_len) return std::nullopt;
  auto alg = take((*alg_len)[0]);
  if (!alg) return std::nullopt;
  auto sig_len = take_u16();
  if (!sig_len) return std::nullopt;
  auto sig = take(*sig_len);
  if (!sig) return std::nullopt;
  auto pk_len = take_u16();
  if (!pk_len) return std::nullopt;
  auto pk = take(*pk_len);
  if (!pk || at != wire.size()) return std::nullopt;

  entry.artifact_hash = *Digest::from_bytes(*artifact);
  entry.commitment.root = *Digest::from_bytes(*root);
  entry.commitment.hash_alg.assign(alg->begin(), alg->end());
  entry.signature.bytes.assign(sig->begin(), sig->end());
  entry.supplier_public_key.bytes.assign(pk->begin(), pk->end());
  return entry;
}

Digest entry_leaf(const LogEntry& entry) {
  Bytes encoded = encode_entry(entry);
  return zks::leaf_digest(
      Digest(), entry.artifact_hash,
      std::string_view(reinterpret_cast<const char*>(encoded.data()),
                       encoded.size()));
}

LogState tl_setup() { return LogState{}; }

LogDigest tl_append(LogState& state, LogEntry entry) {
  if (!signature_ok(entry)) {
    throw Error(ErrorCode::kInvalidSignature,
                "signature does not cover artifact " + entry.artifact_hash.hex());
  }
  if (state.index.count(entry.artifact_hash)) {
    throw Error(ErrorCode::kDuplicateArtifact,
                "artifact " + entry.artifact_hash.hex() + " already published");
  }
  entry.sequence = state.entries.size();
  const Digest leaf = entry_leaf(entry);
  state.map.insert(entry.artifact_hash, leaf);
  state.index.emplace(entry.artifact_hash, state.entries.size());
  state.entries.push_back(std::move(entry));
  state.digest_history.push_back(state.map.root());
  return state.digest_history.back();
}

LookupResult tl_lookup(const LogState& state, const Digest& artifact_hash) {
  LookupResult out;
  out.digest = state.map_root();
  out.proof = state.map.path(artifact_hash);
  if (auto it = state.index.find(artifact_hash); it != state.index.end()) {
    out.found = true;
    out.entry = state.entries.at(it->second);
  }
  return out;
}

bool tl_verify(const LogDigest& trusted_digest, const Digest& artifact_hash,
               bool found, const std::optional<LogEntry>& entry,
               const smt::MerklePath& proof) noexcept {
  try {
    if (found != entry.has_value()) return false;
    Digest leaf = smt::empty_digest(smt::kDepth);
    if (found) {
      if (entry->artifact_hash != artifact_hash) return false;
      leaf = entry_leaf(*entry);
    }
    auto root = smt::root_from_path(artifact_hash, leaf, proof);
    return root && *root == trusted_digest;
  } catch (...) {
    return false;
  }
}

bool tl_audit_append_only(const LogDigest& old_digest, const LogState& new_state) {
  const auto& history = new_state.digest_history;
  if (history.size() != new_state.entries.size()) return false;
  bool seen_old = old_digest == smt::empty_digest(0);
  for (const auto& d : history) seen_old = seen_old || d == old_digest;
  if (!seen_old) return false;

  smt::SparseMerkleTree replay;
  std::set<Digest> keys;
  for (std::size_t i = 0; i < new_state.entries.size(); ++i) {
    const auto& e = new_state.entries[i];
    if (!keys.insert(e.artifact_hash).second) return false;
    replay.insert(e.artifact_hash, entry_leaf(e));
    if (replay.root() != history[i]) return false;
  }
  return replay.root() == new_state.map_root();
}

void save_log(const LogState& state, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  auto write = [&](const char* name, const auto& lines) {
    auto tmp = dir / (std::string(name) + ".tmp");
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp.string());
      for (const auto& l : lines) out << l << '\n';
      if (!out.flush()) throw Error(ErrorCode::kIoError, "write failed " + tmp.string());
    }
    std::filesystem::rename(tmp, dir / name, ec);
    if (ec) throw Error(ErrorCode::kIoError, ec.message());
  };
  std::vector<std::string> entries, digests;
  for (const auto& e : state.entries) entries.push_back(to_hex(encode_entry(e)));
  for (const auto& d : state.digest_history) digests.push_back(d.hex());
  write("entries.log", entries);
  write("digests.log", digests);
}

LogState load_log(const std::filesystem::path& dir) {
  LogState state = tl_setup();
  if (!std::filesystem::exists(dir / "entries.log")) return state;
  auto entry_lines = read_lines(dir / "entries.log");
  auto digest_lines = read_lines(dir / "digests.log");
  if (entry_lines.size() != digest_lines.size()) {
    throw Error(ErrorCode::kCorruptRecord, "entry and digest counts differ");
  }
  for (std::size_t i = 0; i < entry_lines.size(); ++i) {
    auto raw = from_hex(entry_lines[i]);
    auto entry = raw ? decode_entry(*raw, i) : std::nullopt;
    if (!entry) {
      throw Error(ErrorCode::kCorruptRecord, "undecodable log entry " + std::to_string(i));
    }
    LogDigest d;
    try {
      d = tl_append(state, std::move(*entry));
    } catch (const Error& e) {
      throw Error(ErrorCode::kCorruptRecord, e.what());
    }
    if (d.hex() != digest_lines[i]) {
      throw Error(ErrorCode::kCorruptRecord, "digest mismatch at " + std::to_string(i));
    }
  }
  return state;
}

LogDigest TransparencyLog::append(LogEntry entry) {
  std::unique_lock lock(mutex_);
  return tl_append(state_, std::move(entry));
}

LookupResult TransparencyLog::lookup(const Digest& artifact_hash) const {
  std::shared_lock lock(mutex_);
  return tl_lookup(state_, artifact_hash);
}

LogDigest TransparencyLog::digest() const {
  std::shared_lock lock(mutex_);
  return state_.map_root();
}

LogState TransparencyLog::snapshot() const {
  std::shared_lock lock(mutex_);
  return state_;
}

}  // namespace zksbom::tlog
