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

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "zksbom/bytes.h"

// Depth-256 sparse Merkle tree shared by the ZKS engine and the
// transparency log map. A key's bits, most significant first, select the
// left (0) or right (1) child from the root down; the leaf sits at depth 256.
//
//   E[256]  = 0^32
//   E[d-1]  = H(0x01 || E[d] || E[d])
//   node    = H(0x01 || left || right)
namespace zksbom::smt {

inline constexpr std::size_t kDepth = 256;
inline constexpr std::size_t kBitmapBytes = kDepth / 8;

// Digest of an empty subtree rooted at `depth` (0 = root, 256 = leaf).
const Digest& empty_digest(std::size_t depth);

// Authentication path. Bit i of `bitmap` (MSB-first) is set when the
// sibling of the path node at depth i+1 is non-empty; `siblings` lists only
// those, ordered from the root towards the leaf.
struct MerklePath {
  std::array<std::uint8_t, kBitmapBytes> bitmap{};
  std::vector<Digest> siblings;

  bool has_sibling(std::size_t level) const {
    return (bitmap[level / 8] >> (7 - level % 8)) & 1U;
  }
  friend bool operator==(const MerklePath&, const MerklePath&) = default;
};

// Root implied by placing `leaf` at `key` under `path`. nullopt when the
// bitmap popcount disagrees with the sibling count or a listed sibling is
// the empty digest for its depth (non-canonical encoding).
std::optional<Digest> root_from_path(const Digest& key, const Digest& leaf,
                                     const MerklePath& path);

class SparseMerkleTree {
 public:
  SparseMerkleTree() = default;

  // Builds from (key, leaf digest) pairs with distinct keys.
  static SparseMerkleTree build(std::map<Digest, Digest> leaves);

  // Sets the leaf at `key` (insert or overwrite) and refreshes the path.
  void insert(const Digest& key, const Digest& leaf);

  Digest root() const;
  MerklePath path(const Digest& key) const;
  std::optional<Digest> leaf(const Digest& key) const;
  std::size_t size() const { return leaves_.size(); }

 private:
  struct NodeKey {
    std::uint16_t depth;
    Digest prefix;
    friend bool operator==(const NodeKey&, const NodeKey&) = default;
  };
  struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const noexcept;
  };

  Digest node_digest(std::size_t depth, const Digest& prefix) const;
  Digest build_range(std::size_t depth, const Digest& prefix,
                     std::map<Digest, Digest>::const_iterator first,
                     std::map<Digest, Digest>::const_iterator last,
                     std::size_t count);

  std::map<Digest, Digest> leaves_;
  // Every branch node (two non-empty children) and every topmost
  // single-leaf subtree. Other non-empty nodes are recomputed on demand.
  std::unordered_map<NodeKey, Digest, NodeKeyHash> nodes_;
};

}  // namespace zksbom::smt
