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
#include <cstdint>
#include <string_view>

#include "zksbom/bytes.h"

namespace zksbom::crypto {

// Identifier recorded in every persisted artifact that depends on H.
inline constexpr std::string_view kHashAlgorithm = "blake2b-256";

// One-byte domain separation tags prefixed to protocol-internal hashes.
enum class Domain : std::uint8_t {
  kLeaf = 0x00,
  kNode = 0x01,
  kSalt = 0x02,
  kArtifactBinding = 0x03,
};

Digest hash(ByteView message);
inline Digest hash(std::string_view message) { return hash(as_bytes(message)); }

// Incremental hashing over concatenated parts.
class Hasher {
 public:
  Hasher();
  explicit Hasher(Domain tag) : Hasher() { update(static_cast<std::uint8_t>(tag)); }

  Hasher& update(ByteView part);
  Hasher& update(const Digest& part) { return update(part.bytes()); }
  Hasher& update(std::uint8_t byte) { return update(ByteView(&byte, 1)); }
  Digest finish();

 private:
  alignas(64) std::array<std::uint8_t, 384> state_;
};

// hash(tag || left || right) without the streaming setup cost.
Digest hash_pair(Domain tag, const Digest& left, const Digest& right);

using Seed = std::array<std::uint8_t, 32>;

// Draws 32 bytes from the operating system CSPRNG.
Seed random_seed();

struct PublicKey {
  Bytes bytes;
  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

// Never written by any protocol message; kept only in memory or key files.
struct PrivateKey {
  Bytes bytes;
};

struct KeyPair {
  PublicKey public_key;
  PrivateKey private_key;
};

struct Signature {
  Bytes bytes;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Ed25519 key pair derived deterministically from a 32-byte seed.
KeyPair keygen(ByteView seed);

// Public half embedded in an Ed25519 secret key. Throws kInvalidKey.
PublicKey public_key_of(const PrivateKey& key);

// Deterministic Ed25519 signature. Throws kInvalidKey for a malformed key.
Signature sign(ByteView message, const PrivateKey& key);

// Never throws; any malformed input yields false.
bool verify_sig(const Signature& signature, ByteView message,
                const PublicKey& key) noexcept;

}  // namespace zksbom::crypto
