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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "zksbom/bytes.h"
#include "zksbom/core_model.h"
#include "zksbom/crypto.h"
#include "zksbom/sparse_merkle_tree.h"

// Zero-knowledge-set style commitments over a Datastore, realized as a
// salted sparse Merkle tree:
//
//   salt(l) = H(0x02 || seed || l)
//   leaf(l) = H(0x00 || salt(l) || l || H(v))
//
// Salts hide labels and values from dictionary attacks. The number of
// non-empty siblings on a path still reveals roughly log2 of the set size.
namespace zksbom::zks {

using crypto::Seed;

struct Commitment {
  Digest root;
  std::string hash_alg{crypto::kHashAlgorithm};

  friend bool operator==(const Commitment&, const Commitment&) = default;
};

struct SecretState {
  Seed seed{};
  Datastore datastore;

  friend bool operator==(const SecretState&, const SecretState&) = default;
};

struct ZksProof {
  enum class Kind : std::uint8_t { kNonInclusion = 0x00, kInclusion = 0x01 };

  Kind kind = Kind::kNonInclusion;
  Digest label;
  std::optional<Digest> salt;
  std::optional<std::string> value;
  smt::MerklePath path;

  friend bool operator==(const ZksProof&, const ZksProof&) = default;
};

inline constexpr std::uint8_t kProofVersion = 0x01;

// version || kind || label || [salt || u16be len || value] || bitmap || siblings
Bytes encode_proof(const ZksProof& proof);
// nullopt on any structural defect, including trailing bytes.
std::optional<ZksProof> decode_proof(ByteView wire);

Digest derive_salt(const Seed& seed, const Digest& label);
Digest leaf_digest(const Digest& salt, const Digest& label,
                   std::string_view value);

struct QueryResult {
  ZksProof proof;
  std::optional<std::string> value;
};

// A commitment together with the tree needed to answer queries quickly.
class CommittedSet {
 public:
  explicit CommittedSet(SecretState state);

  const Commitment& commitment() const { return commitment_; }
  const SecretState& state() const { return state_; }

  QueryResult query(const Digest& label) const;

 private:
  SecretState state_;
  smt::SparseMerkleTree tree_;
  Commitment commitment_;
};

std::pair<Commitment, SecretState> commit(const Datastore& datastore,
                                          const Seed& seed);

// Rebuilds the tree from `state`; prefer CommittedSet for repeated queries.
QueryResult query(const SecretState& state, const Digest& label);

// Needs nothing beyond its arguments. Never throws.
bool verify(const Commitment& commitment, const Digest& label,
            const std::optional<std::string>& value,
            const ZksProof& proof) noexcept;

}  // namespace zksbom::zks
