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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <thread>

#include "test_util.h"
#include "zksbom/client_tools.h"
#include "zksbom/errors.h"
#include "zksbom/transparency_log.h"

namespace zksbom::tlog {
namespace {

namespace fs = std::filesystem;

const crypto::KeyPair& supplier() {
  static const crypto::KeyPair kp = crypto::keygen(testing::random_bytes(32));
  return kp;
}

LogEntry make_entry(const Digest& artifact, const Digest& root,
                    const crypto::KeyPair& kp = supplier()) {
  LogEntry e;
  e.artifact_hash = artifact;
  e.commitment.root = root;
  e.signature = crypto::sign(client::BindingMessage{artifact, e.commitment}.encode(),
                             kp.private_key);
  e.supplier_public_key = kp.public_key;
  return e;
}

ErrorCode append_error(LogState& log, const LogEntry& e) {
  try {
    tl_append(log, e);
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("append accepted");
  return ErrorCode::kIoError;
}

bool lookup_verifies(const LogState& log, const Digest& key) {
  auto r = tl_lookup(log, key);
  return tl_verify(r.digest, key, r.found, r.entry, r.proof);
}

fs::path temp_dir(const std::string& tag) {
  auto dir = fs::temp_directory_path() /
             ("zksbom-tlog-" + tag + "-" + testing::random_digest().hex().substr(0, 12));
  fs::remove_all(dir);
  return dir;
}

TEST_CASE("setup") {
  auto a = tl_setup();
  CHECK(a.entries.empty());
  CHECK(a.digest_history.empty());
  CHECK(a.map_root() == smt::empty_digest(0));
  CHECK(tl_setup().map_root() == a.map_root());
}

TEST_CASE("append then lookup") {
  auto log = tl_setup();
  auto key = testing::random_digest();
  auto e = make_entry(key, testing::random_digest());
  auto d = tl_append(log, e);
  CHECK(d == log.map_root());
  CHECK(log.digest_history == std::vector<LogDigest>{d});
  auto r = tl_lookup(log, key);
  REQUIRE(r.found);
  CHECK(r.entry->commitment == e.commitment);
  CHECK(r.entry->sequence == 0);
  CHECK(tl_verify(d, key, true, r.entry, r.proof));

  auto absent = testing::random_digest();
  auto miss = tl_lookup(log, absent);
  CHECK_FALSE(miss.found);
  CHECK(tl_verify(d, absent, false, std::nullopt, miss.proof));
  CHECK_FALSE(tl_verify(d, absent, true, r.entry, miss.proof));
}

TEST_CASE("duplicate artifact and bad signature are rejected without mutation") {
  auto log = tl_setup();
  auto key = testing::random_digest();
  tl_append(log, make_entry(key, testing::random_digest()));
  auto before = log.map_root();
  CHECK(append_error(log, make_entry(key, testing::random_digest())) ==
        ErrorCode::kDuplicateArtifact);

  auto forged = make_entry(testing::random_digest(), testing::random_digest());
  forged.commitment.root = testing::random_digest();
  CHECK(append_error(log, forged) == ErrorCode::kInvalidSignature);
  CHECK(log.map_root() == before);
  CHECK(log.entries.size() == 1);
}

TEST_CASE("tampered claims fail verification") {
  auto log = tl_setup();
  auto key = testing::random_digest();
  tl_append(log, make_entry(key, testing::random_digest()));
  auto r = tl_lookup(log, key);
  auto mutated = r.entry;
  mutated->commitment.root = testing::random_digest();
  CHECK_FALSE(tl_verify(r.digest, key, true, mutated, r.proof));
  CHECK_FALSE(tl_verify(r.digest, key, false, std::nullopt, r.proof));
  CHECK_FALSE(tl_verify(r.digest, testing::random_digest(), true, r.entry, r.proof));
}

TEST_CASE("stale digest does not authenticate a later entry") {
  auto log = tl_setup();
  tl_append(log, make_entry(testing::random_digest(), testing::random_digest()));
  auto stale = log.map_root();
  auto key = testing::random_digest();
  tl_append(log, make_entry(key, testing::random_digest()));
  auto r = tl_lookup(log, key);
  CHECK(tl_verify(r.digest, key, true, r.entry, r.proof));
  CHECK_FALSE(tl_verify(stale, key, true, r.entry, r.proof));
}

TEST_CASE("entry encoding round trips") {
  auto e = make_entry(testing::random_digest(), testing::random_digest());
  auto wire = encode_entry(e);
  CHECK(wire.size() == 32 + 32 + 1 + 11 + 2 + 64 + 2 + 32);
  auto back = decode_entry(wire);
  REQUIRE(back);
  CHECK(*back == e);
  wire.push_back(0);
  CHECK_FALSE(decode_entry(wire));
  wire.resize(40);
  CHECK_FALSE(decode_entry(wire));
}

TEST_CASE("randomized interleavings keep one entry per artifact") {
  auto log = tl_setup();
  std::vector<Digest> keys;
  std::map<Digest, Digest> committed;
  std::vector<std::pair<LogState, std::vector<Digest>>> snapshots;
  for (int step = 0; step < 1000; ++step) {
    auto roll = testing::rng()() % 4;
    if (roll == 0 || keys.empty()) {
      auto key = testing::random_digest();
      auto root = testing::random_digest();
      tl_append(log, make_entry(key, root));
      keys.push_back(key);
      committed[key] = root;
    } else if (roll == 1) {
      auto& key = keys[testing::rng()() % keys.size()];
      CHECK(append_error(log, make_entry(key, testing::random_digest())) ==
            ErrorCode::kDuplicateArtifact);
    } else {
      const bool present = roll == 2;
      auto key = present ? keys[testing::rng()() % keys.size()] : testing::random_digest();
      auto r = tl_lookup(log, key);
      CHECK(r.found == present);
      if (present) CHECK(r.entry->commitment.root == committed[key]);
      CHECK(tl_verify(log.map_root(), key, r.found, r.entry, r.proof));
    }
    if (step % 100 == 99) snapshots.push_back({log, keys});
  }
  CHECK(log.entries.size() == committed.size());
  CHECK(log.digest_history.size() == log.entries.size());

  // Every historical state still proves its own entries to its own digest.
  for (const auto& [old, old_keys] : snapshots) {
    for (std::size_t i = 0; i < old_keys.size(); i += 7) {
      auto r = tl_lookup(old, old_keys[i]);
      CHECK(tl_verify(old.map_root(), old_keys[i], true, r.entry, r.proof));
      CHECK(r.entry->commitment.root == committed[old_keys[i]]);
    }
    CHECK(tl_audit_append_only(old.map_root(), log));
  }
}

TEST_CASE("audit accepts extensions and rejects rewrites") {
  auto log = tl_setup();
  for (int i = 0; i < 20; ++i) {
    tl_append(log, make_entry(testing::random_digest(), testing::random_digest()));
  }
  const auto mid = log.digest_history[9];
  CHECK(tl_audit_append_only(smt::empty_digest(0), log));
  CHECK(tl_audit_append_only(mid, log));
  CHECK(tl_audit_append_only(log.map_root(), log));
  CHECK_FALSE(tl_audit_append_only(testing::random_digest(), log));

  for (std::size_t i = 0; i <= 9; ++i) {
    // Rewrite entry i and rebuild a self-consistent log around it.
    auto entries = log.entries;
    entries[i] = make_entry(entries[i].artifact_hash, testing::random_digest());
    auto rewritten = tl_setup();
    for (auto e : entries) tl_append(rewritten, e);
    CHECK(tl_audit_append_only(rewritten.map_root(), rewritten));
    CHECK_FALSE(tl_audit_append_only(mid, rewritten));
  }

  auto truncated_history = log;
  truncated_history.digest_history.erase(truncated_history.digest_history.begin() + 3);
  CHECK_FALSE(tl_audit_append_only(mid, truncated_history));

  auto dropped = tl_setup();
  for (std::size_t i = 0; i < log.entries.size(); ++i) {
    if (i != 4) tl_append(dropped, log.entries[i]);
  }
  CHECK_FALSE(tl_audit_append_only(mid, dropped));

  auto truncated = tl_setup();
  for (std::size_t i = 0; i < 5; ++i) tl_append(truncated, log.entries[i]);
  CHECK_FALSE(tl_audit_append_only(mid, truncated));

  auto edited = log;
  edited.entries[2].commitment.root = testing::random_digest();
  CHECK_FALSE(tl_audit_append_only(mid, edited));
}

TEST_CASE("save and load") {
  auto dir = temp_dir("persist");
  auto log = tl_setup();
  for (int i = 0; i < 10; ++i) {
    tl_append(log, make_entry(testing::random_digest(), testing::random_digest()));
  }
  save_log(log, dir);
  auto loaded = load_log(dir);
  CHECK(loaded.entries == log.entries);
  CHECK(loaded.digest_history == log.digest_history);
  CHECK(loaded.map_root() == log.map_root());

  CHECK(load_log(dir / "missing").entries.empty());

  {
    std::ofstream out(dir / "digests.log", std::ios::trunc);
    for (std::size_t i = 0; i < log.entries.size(); ++i) {
      out << testing::random_digest().hex() << '\n';
    }
  }
  try {
    load_log(dir);
    FAIL("loaded a corrupt log");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCorruptRecord);
  }
  fs::remove_all(dir);
}

TEST_CASE("concurrent readers see consistent snapshots") {
  TransparencyLog log;
  std::vector<Digest> keys;
  for (int i = 0; i < 50; ++i) keys.push_back(testing::random_digest());
  std::vector<LogEntry> entries;
  for (const auto& k : keys) entries.push_back(make_entry(k, testing::random_digest()));

  std::atomic<int> failures{0};
  std::thread writer([&] {
    for (auto& e : entries) log.append(e);
  });
  std::vector<std::thread> readers;
  for (int t = 0; t < 4; ++t) {
    readers.emplace_back([&, t] {
      for (int i = 0; i < 200; ++i) {
        const auto& key = keys[(i * 7 + t) % keys.size()];
        auto r = log.lookup(key);
        if (!tl_verify(r.digest, key, r.found, r.entry, r.proof)) ++failures;
      }
    });
  }
  writer.join();
  for (auto& r : readers) r.join();
  CHECK(failures == 0);
  CHECK(log.snapshot().entries.size() == keys.size());
  for (const auto& k : keys) CHECK(lookup_verifies(log.snapshot(), k));
}

}  // namespace
}  // namespace zksbom::tlog
