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

#include <fstream>
#include <sstream>

#include "test_util.h"
#include "zksbom/advisory_db.h"
#include "zksbom/client_tools.h"
#include "zksbom/errors.h"
#include "zksbom/sbom_ingest.h"

namespace zksbom::client {
namespace {

using Kind = Verdict::Kind;

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(ZKSBOM_FIXTURE_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const advisory::AdvisoryDb& db() {
  static const auto kDb =
      advisory::AdvisoryDb::load(std::string(ZKSBOM_FIXTURE_DIR) + "/advisories.json");
  return kDb;
}

zks::CommittedSet druid_set() {
  auto datastore = sbom::to_datastore(sbom::parse_cyclonedx(fixture("druid_sbom.json")));
  return zks::CommittedSet({testing::random_seed(), datastore});
}

std::vector<ComponentProof> proofs_for(const zks::CommittedSet& set, std::string_view cve) {
  std::vector<ComponentProof> out;
  for (const auto& c : db().resolve(cve)) {
    auto r = set.query(component_label(canonical_id(c)));
    out.push_back({c, r.value.has_value(), r.value, to_hex(zks::encode_proof(r.proof))});
  }
  return out;
}

Kind verdict(const zks::Commitment& c, std::string_view cve,
             const std::vector<ComponentProof>& proofs) {
  return consumer_verify_proofs(c, cve, proofs, db()).kind;
}

TEST_CASE("supplier check") {
  const auto sbom_json = fixture("druid_sbom.json");
  auto datastore = sbom::to_datastore(sbom::parse_cyclonedx(sbom_json));
  auto seed = testing::random_seed();
  auto honest = zks::commit(datastore, seed).first;
  CHECK(supplier_check_commitment(sbom_json, seed, honest));

  auto tampered = zks::commit(datastore.without(datastore.entries()[3].label), seed).first;
  CHECK_FALSE(supplier_check_commitment(sbom_json, seed, tampered));
  CHECK_FALSE(supplier_check_commitment(sbom_json, testing::random_seed(), honest));
  try {
    supplier_check_commitment("{", seed, honest);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMalformedDocument);
  }
}

TEST_CASE("binding message layout") {
  BindingMessage m{testing::random_digest(), {testing::random_digest(), "blake2b-256"}};
  auto bytes = m.encode();
  REQUIRE(bytes.size() == 1 + 32 + 32 + 1 + 11);
  CHECK(bytes[0] == 0x03);
  CHECK(std::equal(bytes.begin() + 1, bytes.begin() + 33, m.artifact_hash.bytes().begin()));
  CHECK(bytes[65] == 11);
}

TEST_CASE("publish and check publication") {
  auto kp = crypto::keygen(testing::random_bytes(32));
  auto other = crypto::keygen(testing::random_bytes(32));
  auto log = tlog::tl_setup();
  Bytes artifact = testing::random_bytes(200);
  zks::Commitment c{testing::random_digest()};
  auto digest = supplier_publish(artifact, c, kp.private_key, log);

  auto r = tlog::tl_lookup(log, crypto::hash(artifact));
  REQUIRE(r.found);
  CHECK(r.entry->commitment == c);
  CHECK(crypto::verify_sig(r.entry->signature,
                           BindingMessage{r.entry->artifact_hash, c}.encode(), kp.public_key));

  auto ok = consumer_check_publication(artifact, digest, log, kp.public_key);
  CHECK(ok.ok);
  CHECK(ok.commitment == c);

  auto wrong_key = consumer_check_publication(artifact, digest, log, other.public_key);
  CHECK_FALSE(wrong_key.ok);
  CHECK_FALSE(wrong_key.commitment);

  Bytes altered = artifact;
  altered[0] ^= 1;
  CHECK_FALSE(consumer_check_publication(altered, digest, log, kp.public_key).ok);
  CHECK_FALSE(
      consumer_check_publication(artifact, testing::random_digest(), log, kp.public_key).ok);

  try {
    supplier_publish(artifact, {testing::random_digest()}, kp.private_key, log);
    FAIL("second commitment accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDuplicateArtifact);
  }
  try {
    supplier_publish(testing::random_bytes(8), c, crypto::PrivateKey{Bytes(3)}, log);
    FAIL("bad key accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidKey);
  }
}

TEST_CASE("publish through the shared log") {
  auto kp = crypto::keygen(testing::random_bytes(32));
  tlog::TransparencyLog log;
  Bytes artifact = testing::random_bytes(64);
  auto d = supplier_publish(artifact, {testing::random_digest()}, kp.private_key, log);
  CHECK(d == log.digest());
  auto r = log.lookup(crypto::hash(artifact));
  CHECK(check_lookup(crypto::hash(artifact), d, r, kp.public_key).ok);
}

TEST_CASE("druid log4shell proofs are affected") {
  auto set = druid_set();
  auto proofs = proofs_for(set, "CVE-2021-44228");
  int present = 0;
  for (const auto& p : proofs) present += p.present;
  CHECK(present == 1);
  CHECK(verdict(set.commitment(), "CVE-2021-44228", proofs) == Kind::kAffected);
}

TEST_CASE("eleven non-inclusion proofs are not affected") {
  auto set = druid_set();
  auto proofs = proofs_for(set, "CVE-2025-55182");
  CHECK(proofs.size() == 11);
  for (const auto& p : proofs) CHECK_FALSE(p.present);
  CHECK(verdict(set.commitment(), "CVE-2025-55182", proofs) == Kind::kNotAffected);
}

TEST_CASE("coverage and relevance checks") {
  auto set = druid_set();
  const auto c = set.commitment();
  auto proofs = proofs_for(set, "CVE-2025-55182");

  auto missing = proofs;
  missing.pop_back();
  CHECK(verdict(c, "CVE-2025-55182", missing) == Kind::kInvalid);

  auto duplicated = proofs;
  duplicated.back() = duplicated.front();
  CHECK(verdict(c, "CVE-2025-55182", duplicated) == Kind::kInvalid);

  auto extra = proofs;
  extra.push_back(proofs_for(set, "CVE-2021-44228").front());
  CHECK(verdict(c, "CVE-2025-55182", extra) == Kind::kInvalid);

  // A genuine inclusion proof for an unrelated member.
  auto unrelated = proofs_for(set, "CVE-2021-44228");
  for (auto& p : unrelated) {
    if (!p.present) continue;
    auto other = set.state().datastore.entries().front();
    auto r = set.query(other.label);
    p.value = other.value;
    p.proof_hex = to_hex(zks::encode_proof(r.proof));
  }
  CHECK(verdict(c, "CVE-2021-44228", unrelated) == Kind::kInvalid);

  CHECK(verdict(c, "CVE-2025-55182", {}) == Kind::kInvalid);
  try {
    verdict(c, "CVE-0000-0001", proofs);
    FAIL("unknown cve accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownCve);
  }
}

TEST_CASE("flipping a present flag is invalid") {
  auto set = druid_set();
  for (const char* cve : {"CVE-2021-44228", "CVE-2025-55182"}) {
    auto proofs = proofs_for(set, cve);
    for (std::size_t i = 0; i < proofs.size(); ++i) {
      auto forged = proofs;
      forged[i].present = !forged[i].present;
      CHECK(verdict(set.commitment(), cve, forged) == Kind::kInvalid);
      forged[i].value = forged[i].present ? std::optional(canonical_id(forged[i].component))
                                          : std::nullopt;
      CHECK(verdict(set.commitment(), cve, forged) == Kind::kInvalid);
    }
  }
}

TEST_CASE("single-byte mutations never flip the verdict") {
  auto set = druid_set();
  for (const char* cve : {"CVE-2021-44228", "CVE-2019-14379", "CVE-2025-55182"}) {
    auto proofs = proofs_for(set, cve);
    const auto c = set.commitment();
    REQUIRE(verdict(c, cve, proofs) != Kind::kInvalid);
    for (int trial = 0; trial < 200; ++trial) {
      auto forged = proofs;
      auto& p = forged[testing::rng()() % forged.size()];
      auto raw = *from_hex(p.proof_hex);
      raw[testing::rng()() % raw.size()] ^= static_cast<std::uint8_t>(1 + testing::rng()() % 255);
      p.proof_hex = to_hex(raw);
      CHECK(verdict(c, cve, forged) == Kind::kInvalid);
    }
    for (std::size_t i = 0; i < Digest::kSize; ++i) {
      auto bytes = c.root.array();
      bytes[i] ^= 0x80;
      zks::Commitment bad{Digest(bytes)};
      CHECK(verdict(bad, cve, proofs) == Kind::kInvalid);
    }
    for (auto& p : proofs) {
      if (!p.value) continue;
      auto forged = proofs;
      for (auto& q : forged) {
        if (q.value) (*q.value)[0] ^= 0x01;
      }
      CHECK(verdict(c, cve, forged) == Kind::kInvalid);
    }
  }
}

}  // namespace
}  // namespace zksbom::client
