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

#include "zksbom/crypto.h"

#include <sodium.h>

#include <cstdlib>
#include <stdexcept>

#include "zksbom/errors.h"

namespace zksbom::crypto {
namespace {

static_assert(sizeof(crypto_generichash_state) <= 384);

struct SodiumInit {
  SodiumInit() {
    if (sodium_init() < 0) std::abort();
  }
};

void ensure_sodium() { static SodiumInit init; }

crypto_generichash_state* as_state(std::uint8_t* raw) {
  return reinterpret_cast<crypto_generichash_state*>(raw);
}

}  // namespace

Digest hash(ByteView message) {
  ensure_sodium();
  std::array<std::uint8_t, Digest::kSize> out{};
  crypto_generichash(out.data(), out.size(), message.data(), message.size(),
                     nullptr, 0);
  return Digest(out);
}

Hasher::Hasher() {
  ensure_sodium();
  crypto_generichash_init(as_state(state_.data()), nullptr, 0, Digest::kSize);
}

Hasher& Hasher::update(ByteView part) {
  crypto_generichash_update(as_state(state_.data()), part.data(), part.size());
  return *this;
}

Digest Hasher::finish() {
  std::array<std::uint8_t, Digest::kSize> out{};
  crypto_generichash_final(as_state(state_.data()), out.data(), out.size());
  return Digest(out);
}

Digest hash_pair(Domain tag, const Digest& left, const Digest& right) {
  std::array<std::uint8_t, 1 + 2 * Digest::kSize> buffer;
  buffer[0] = static_cast<std::uint8_t>(tag);
  std::copy(left.array().begin(), left.array().end(), buffer.begin() + 1);
  std::copy(right.array().begin(), right.array().end(),
            buffer.begin() + 1 + Digest::kSize);
  return hash(buffer);
}

Seed random_seed() {
  ensure_sodium();
  Seed seed;
  randombytes_buf(seed.data(), seed.size());
  return seed;
}

KeyPair keygen(ByteView seed) {
  ensure_sodium();
  if (seed.size() != crypto_sign_SEEDBYTES) {
    throw Error(ErrorCode::kBadSeedLength,
                "expected 32 seed bytes, got " + std::to_string(seed.size()));
  }
  KeyPair pair;
  pair.public_key.bytes.resize(crypto_sign_PUBLICKEYBYTES);
  pair.private_key.bytes.resize(crypto_sign_SECRETKEYBYTES);
  crypto_sign_seed_keypair(pair.public_key.bytes.data(),
                           pair.private_key.bytes.data(), seed.data());
  return pair;
}

PublicKey public_key_of(const PrivateKey& key) {
  ensure_sodium();
  if (key.bytes.size() != crypto_sign_SECRETKEYBYTES) {
    throw Error(ErrorCode::kInvalidKey, "private key must be 64 bytes");
  }
  PublicKey out;
  out.bytes.resize(crypto_sign_PUBLICKEYBYTES);
  crypto_sign_ed25519_sk_to_pk(out.bytes.data(), key.bytes.data());
  return out;
}

Signature sign(ByteView message, const PrivateKey& key) {
  ensure_sodium();
  if (key.bytes.size() != crypto_sign_SECRETKEYBYTES) {
    throw Error(ErrorCode::kInvalidKey, "private key must be 64 bytes");
  }
  // The secret key embeds its public half; a mismatch means the key was
  // assembled from unrelated parts.
  std::array<std::uint8_t, crypto_sign_PUBLICKEYBYTES> derived;
  crypto_sign_ed25519_sk_to_pk(derived.data(), key.bytes.data());
  std::array<std::uint8_t, crypto_sign_SEEDBYTES> seed;
  crypto_sign_ed25519_sk_to_seed(seed.data(), key.bytes.data());
  std::array<std::uint8_t, crypto_sign_PUBLICKEYBYTES> expected;
  std::array<std::uint8_t, crypto_sign_SECRETKEYBYTES> scratch;
  crypto_sign_seed_keypair(expected.data(), scratch.data(), seed.data());
  sodium_memzero(scratch.data(), scratch.size());
  sodium_memzero(seed.data(), seed.size());
  if (derived != expected) {
    throw Error(ErrorCode::kInvalidKey, "private key is inconsistent");
  }

  Signature sig;
  sig.bytes.resize(crypto_sign_BYTES);
  crypto_sign_detached(sig.bytes.data(), nullptr, message.data(),
                       message.size(), key.bytes.data());
  return sig;
}

bool verify_sig(const Signature& signature, ByteView message,
                const PublicKey& key) noexcept {
  ensure_sodium();
  if (signature.bytes.size() != crypto_sign_BYTES) return false;
  if (key.bytes.size() != crypto_sign_PUBLICKEYBYTES) return false;
  return crypto_sign_verify_detached(signature.bytes.data(), message.data(),
                                     message.size(), key.bytes.data()) == 0;
}

}  // namespace zksbom::crypto
