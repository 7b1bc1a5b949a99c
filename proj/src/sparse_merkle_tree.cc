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

#include "zksbom/sparse_merkle_tree.h"

#include <bit>
#include <iterator>

#include "zksbom/crypto.h"

namespace zksbom::smt {
namespace {

using crypto::Domain;
using crypto::hash_pair;

std::array<Digest, kDepth + 1> make_empty_digests() {
  std::array<Digest, kDepth + 1> out;
  out[kDepth] = Digest();
  for (std::size_t d = kDepth; d > 0; --d) {
    out[d - 1] = hash_pair(Domain::kNode, out[d], out[d]);
  }
  return out;
}

// `key` with every bit at index >= depth cleared.
Digest mask_prefix(const Digest& key, std::size_t depth) {
  Digest out = key;
  std::uint8_t* raw = out.data();
  for (std::size_t byte = depth / 8; byte < Digest::kSize; ++byte) {
    std::size_t keep = byte == depth / 8 ? depth % 8 : 0;
    raw[byte] &= static_cast<std::uint8_t>(0xff00U >> keep);
  }
  return out;
}

Digest with_bit(const Digest& key, std::size_t index, bool value) {
  Digest out = key;
  std::uint8_t mask = static_cast<std::uint8_t>(0x80U >> (index % 8));
  if (value) {
    out.data()[index / 8] |= mask;
  } else {
    out.data()[index / 8] &= static_cast<std::uint8_t>(~mask);
  }
  return out;
}

bool has_prefix(const Digest& key, const Digest& prefix, std::size_t depth) {
  return mask_prefix(key, depth) == prefix;
}

Digest combine(bool node_is_right, const Digest& node, const Digest& sibling) {
  return node_is_right ? hash_pair(Domain::kNode, sibling, node)
                       : hash_pair(Domain::kNode, node, sibling);
}

// Digest at `depth` of a subtree holding only `leaf` at `key`.
Digest hash_up(const Digest& key, const Digest& leaf, std::size_t depth) {
  Digest node = leaf;
  for (std::size_t level = kDepth; level > depth; --level) {
    node = combine(key.bit(level - 1), node, empty_digest(level));
  }
  return node;
}

}  // namespace

const Digest& empty_digest(std::size_t depth) {
  static const std::array<Digest, kDepth + 1> kEmpty = make_empty_digests();
  return kEmpty[depth];
}

std::optional<Digest> root_from_path(const Digest& key, const Digest& leaf,
                                     const MerklePath& path) {
  std::size_t expected = 0;
  for (std::uint8_t b : path.bitmap) expected += std::popcount(b);
  if (expected != path.siblings.size()) return std::nullopt;

  Digest node = leaf;
  std::size_t next = path.siblings.size();
  for (std::size_t level = kDepth; level > 0; --level) {
    const std::size_t index = level - 1;
    const Digest* sibling = &empty_digest(level);
    if (path.has_sibling(index)) {
      sibling = &path.siblings[--next];
      if (*sibling == empty_digest(level)) return std::nullopt;
    }
    node = combine(key.bit(index), node, *sibling);
  }
  return node;
}

std::size_t SparseMerkleTree::NodeKeyHash::operator()(
    const NodeKey& k) const noexcept {
  return DigestHash{}(k.prefix) ^ (static_cast<std::size_t>(k.depth) *
                                   0x9e3779b97f4a7c15ULL);
}

SparseMerkleTree SparseMerkleTree::build(std::map<Digest, Digest> leaves) {
  SparseMerkleTree tree;
  tree.leaves_ = std::move(leaves);
  Digest root = tree.build_range(0, Digest(), tree.leaves_.cbegin(),
                                 tree.leaves_.cend(), tree.leaves_.size());
  tree.nodes_[{0, Digest()}] = root;
  return tree;
}

Digest SparseMerkleTree::build_range(
    std::size_t depth, const Digest& prefix,
    std::map<Digest, Digest>::const_iterator first,
    std::map<Digest, Digest>::const_iterator last, std::size_t count) {
  if (count == 0) return empty_digest(depth);
  if (count == 1) {
    Digest digest = hash_up(first->first, first->second, depth);
    nodes_[{static_cast<std::uint16_t>(depth), prefix}] = digest;
    return digest;
  }
  // Keys are sorted, so the left child's keys form a leading run.
  auto split = first;
  std::size_t left_count = 0;
  while (split != last && !split->first.bit(depth)) {
    ++split;
    ++left_count;
  }
  Digest left = build_range(depth + 1, prefix, first, split, left_count);
  Digest right = build_range(depth + 1, with_bit(prefix, depth, true), split,
                             last, count - left_count);
  Digest digest = hash_pair(Domain::kNode, left, right);
  if (left_count != 0 && left_count != count) {
    nodes_[{static_cast<std::uint16_t>(depth), prefix}] = digest;
  }
  return digest;
}

Digest SparseMerkleTree::node_digest(std::size_t depth,
                                     const Digest& prefix) const {
  if (auto it = nodes_.find({static_cast<std::uint16_t>(depth), prefix});
      it != nodes_.end()) {
    return it->second;
  }
  auto first = leaves_.lower_bound(prefix);
  if (first == leaves_.end() || !has_prefix(first->first, prefix, depth)) {
    return empty_digest(depth);
  }
  auto second = std::next(first);
  if (second == leaves_.end() || !has_prefix(second->first, prefix, depth)) {
    return hash_up(first->first, first->second, depth);
  }
  // Branch nodes are always cached; reaching here means a cache gap, so
  // fall back to recursion rather than return a wrong digest.
  Digest left = node_digest(depth + 1, prefix);
  Digest right = node_digest(depth + 1, with_bit(prefix, depth, true));
  return hash_pair(Domain::kNode, left, right);
}

void SparseMerkleTree::insert(const Digest& key, const Digest& leaf) {
  leaves_[key] = leaf;
  Digest node = leaf;
  for (std::size_t level = kDepth; level > 0; --level) {
    const std::size_t index = level - 1;
    const Digest own_prefix = mask_prefix(key, level);
    const Digest sibling_prefix = with_bit(own_prefix, index, !key.bit(index));
    const Digest sibling = node_digest(level, sibling_prefix);
    const bool branch = sibling != empty_digest(level);
    if (branch) {
      nodes_[{static_cast<std::uint16_t>(level), own_prefix}] = node;
      nodes_[{static_cast<std::uint16_t>(level), sibling_prefix}] = sibling;
    }
    node = combine(key.bit(index), node, sibling);
    if (branch) {
      nodes_[{static_cast<std::uint16_t>(index), mask_prefix(key, index)}] =
          node;
    }
  }
  nodes_[{0, Digest()}] = node;
}

Digest SparseMerkleTree::root() const {
  if (auto it = nodes_.find({0, Digest()}); it != nodes_.end()) {
    return it->second;
  }
  return empty_digest(0);
}

MerklePath SparseMerkleTree::path(const Digest& key) const {
  MerklePath out;
  for (std::size_t index = 0; index < kDepth; ++index) {
    const std::size_t level = index + 1;
    const Digest sibling_prefix =
        with_bit(mask_prefix(key, level), index, !key.bit(index));
    Digest sibling = node_digest(level, sibling_prefix);
    if (sibling != empty_digest(level)) {
      out.bitmap[index / 8] |= static_cast<std::uint8_t>(0x80U >> (index % 8));
      out.siblings.push_back(sibling);
    }
  }
  return out;
}

std::optional<Digest> SparseMerkleTree::leaf(const Digest& key) const {
  if (auto it = leaves_.find(key); it != leaves_.end()) return it->second;
  return std::nullopt;
}

}  // namespace zksbom::smt
