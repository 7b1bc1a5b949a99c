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

#include "zksbom/zks_engine.h"

#include <map>

#include "zksbom/errors.h"

namespace zksbom::zks {
namespace {

using crypto::Domain;
using crypto::Hasher;

smt::SparseMerkleTree build_tree(const SecretState& state) {
  std::map<Digest, Digest> leaves;
  for (const auto& entry : state.datastore.entries()) {
    leaves.emplace_hint(
        leaves.end(), entry.label,
        leaf_digest(derive_salt(state.seed, entry.label), entry.label,
                    entry.value));
  }
  return smt::SparseMerkleTree::build(std::move(leaves));
}

class Reader {
 public:
  explicit Reader(ByteView data) : data_(data) {}

  bool take(std::size_t n, ByteView& out) {
    if (data_.size() - offset_ < n) return false;
    out = data_.subspan(offset_, n);
    offset_ += n;
    return true;
  }
  bool byte(std::uint8_t& out) {
    ByteView b;
    if (!take(1, b)) return false;
    out = b[0];
    return true;
  }
  bool digest(Digest& out) {
    ByteView b;
    if (!take(Digest::kSize, b)) return false;
    out = *Digest::from_bytes(b);
    return true;
  }
  bool done() const { return offset_ == data_.size(); }
  std::size_t remaining() const { return data_.size() - offset_; }

 private:
  ByteView data_;
  std::size_t offset_ = 0;
};

}  // namespace

Digest derive_salt(const Seed& seed, const Digest& label) {
  return Hasher(Domain::kSalt).update(seed).update(label).finish();
}

Digest leaf_digest(const Digest& salt, const Digest& label,
                   std::string_view value) {
  return Hasher(Domain::kLeaf)
      .update(salt)
      .update(label)
      .update(crypto::hash(value))
      .finish();
}

Bytes encode_proof(const ZksProof& proof) {
  Bytes out;
  out.reserve(2 + Digest::kSize * (3 + proof.path.siblings.size()) + 2 +
              (proof.value ? proof.value->size() : 0));
  out.push_back(kProofVersion);
  out.push_back(static_cast<std::uint8_t>(proof.kind));
  out.insert(out.end(), proof.label.bytes().begin(), proof.label.bytes().end());
  if (proof.kind == ZksProof::Kind::kInclusion) {
    const Digest salt = proof.salt.value_or(Digest());
    const std::string& value = proof.value ? *proof.value : std::string();
    if (value.size() > 0xffff) {
      throw Error(ErrorCode::kMalformedComponent, "proof value too long");
    }
    out.insert(out.end(), salt.bytes().begin(), salt.bytes().end());
    out.push_back(static_cast<std::uint8_t>(value.size() >> 8));
    out.push_back(static_cast<std::uint8_t>(value.size() & 0xff));
    out.insert(out.end(), value.begin(), value.end());
  }
  out.insert(out.end(), proof.path.bitmap.begin(), proof.path.bitmap.end());
  for (const auto& sibling : proof.path.siblings) {
    out.insert(out.end(), sibling.bytes().begin(), sibling.bytes().end());
  }
  return out;
}

std::optional<ZksProof> decode_proof(ByteView wire) {
  Reader in(wire);
  std::uint8_t version = 0, kind = 0;
  if (!in.byte(version) || version != kProofVersion) return std::nullopt;
  if (!in.byte(kind)) return std::nullopt;
  ZksProof proof;
  if (kind == static_cast<std::uint8_t>(ZksProof::Kind::kInclusion)) {
    proof.kind = ZksProof::Kind::kInclusion;
  } else if (kind == static_cast<std::uint8_t>(ZksProof::Kind::kNonInclusion)) {
    proof.kind = ZksProof::Kind::kNonInclusion;
  } else {
    return std::nullopt;
  }
  if (!in.digest(proof.label)) return std::nullopt;
  if (proof.kind == ZksProof::Kind::kInclusion) {
    Digest salt;
    ByteView length, value;
    if (!in.digest(salt) || !in.take(2, length)) return std::nullopt;
    const std::size_t n = (std::size_t{length[0]} << 8) | length[1];
    if (!in.take(n, value)) return std::nullopt;
    proof.salt = salt;
    proof.value = std::string(value.begin(), value.end());
  }
  ByteView bitmap;
  if (!in.take(smt::kBitmapBytes, bitmap)) return std::nullopt;
  std::copy(bitmap.begin(), bitmap.end(), proof.path.bitmap.begin());
  if (in.remaining() % Digest::kSize != 0) return std::nullopt;
  while (!in.done()) {
    Digest sibling;
    in.digest(sibling);
    proof.path.siblings.push_back(sibling);
  }
  return proof;
}

CommittedSet::CommittedSet(SecretState state)
    : state_(std::move(state)), tree_(build_tree(state_)) {
  commitment_.root = tree_.root();
}

QueryResult CommittedSet::query(const Digest& label) const {
  QueryResult result;
  result.proof.label = label;
  result.proof.path = tree_.path(label);
  if (const auto* entry = state_.datastore.find(label)) {
    result.proof.kind = ZksProof::Kind::kInclusion;
    result.proof.salt = derive_salt(state_.seed, label);
    result.proof.value = entry->value;
    result.value = entry->value;
  }
  return result;
}

std::pair<Commitment, SecretState> commit(const Datastore& datastore,
                                          const Seed& seed) {
  SecretState state{seed, datastore};
  Commitment commitment;
  commitment.root = build_tree(state).root();
  return {std::move(commitment), std::move(state)};
}

QueryResult query(const SecretState& state, const Digest& label) {
  return CommittedSet(state).query(label);
}

bool verify(const Commitment& commitment, const Digest& label,
            const std::optional<std::string>& value,
            const ZksProof& proof) noexcept {
  try {
    if (commitment.hash_alg != crypto::kHashAlgorithm) return false;
    if (proof.label != label) return false;

    Digest leaf;
    if (proof.kind == ZksProof::Kind::kInclusion) {
      if (!value || !proof.value || !proof.salt) return false;
      if (*proof.value != *value) return false;
      if (component_label(*value) != label) return false;
      leaf = leaf_digest(*proof.salt, label, *value);
    } else {
      if (value || proof.value || proof.salt) return false;
      leaf = smt::empty_digest(smt::kDepth);
    }
    auto root = smt::root_from_path(label, leaf, proof.path);
    return root && *root == commitment.root;
  } catch (...) {
    return false;
  }
}

}  // namespace zksbom::zks
