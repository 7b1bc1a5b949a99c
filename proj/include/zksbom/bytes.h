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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zksbom {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

std::string to_hex(ByteView bytes);

// Accepts upper or lower case; nullopt on odd length or non-hex characters.
std::optional<Bytes> from_hex(std::string_view hex);

inline ByteView as_bytes(std::string_view text) {
  return {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()};
}

// A 256-bit hash output. Ordering is lexicographic over the raw bytes.
class Digest {
 public:
  static constexpr std::size_t kSize = 32;

  constexpr Digest() = default;
  explicit constexpr Digest(const std::array<std::uint8_t, kSize>& bytes)
      : bytes_(bytes) {}

  // nullopt unless `bytes` is exactly 32 octets.
  static std::optional<Digest> from_bytes(ByteView bytes);
  // nullopt unless `hex` is exactly 64 hex characters.
  static std::optional<Digest> from_hex(std::string_view hex);

  std::string hex() const { return to_hex(bytes_); }
  ByteView bytes() const { return bytes_; }
  const std::array<std::uint8_t, kSize>& array() const { return bytes_; }
  std::uint8_t* data() { return bytes_.data(); }

  // Bit `index` counted from the most significant bit of byte 0.
  bool bit(std::size_t index) const {
    return (bytes_[index / 8] >> (7 - index % 8)) & 1U;
  }

  bool is_zero() const;

  friend auto operator<=>(const Digest&, const Digest&) = default;

 private:
  std::array<std::uint8_t, kSize> bytes_{};
};

struct DigestHash {
  std::size_t operator()(const Digest& d) const noexcept;
};

}  // namespace zksbom
