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

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "zksbom/bytes.h"
#include "zksbom/errors.h"

namespace zksbom::tools {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
}

inline std::string trimmed(std::string s) {
  auto space = [](unsigned char c) { return std::isspace(c); };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), space));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), space).base(), s.end());
  return s;
}

// Hex text file holding exactly `size` bytes.
inline Bytes read_hex_file(const std::filesystem::path& path, std::size_t size) {
  auto bytes = from_hex(trimmed(read_file(path)));
  if (!bytes || bytes->size() != size) {
    throw Error(ErrorCode::kMalformedInput,
                path.string() + ": expected " + std::to_string(size) + " hex bytes");
  }
  return *bytes;
}

inline Digest parse_digest(const std::string& hex) {
  auto d = Digest::from_hex(trimmed(hex));
  if (!d) throw Error(ErrorCode::kMalformedInput, "not a 32-byte hex digest: " + hex);
  return *d;
}

}  // namespace zksbom::tools
