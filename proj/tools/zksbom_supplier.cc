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


#include <iostream>

#include "CLI11.hpp"
#include "tool_util.h"
#include "zksbom/client_tools.h"
#include "zksbom/transparency_log.h"

using namespace zksbom;

namespace {

std::optional<Ecosystem> hint_of(const std::string& token) {
  if (token.empty()) return std::nullopt;
  auto eco = parse_ecosystem_token(token);
  if (!eco) throw Error(ErrorCode::kMalformedInput, "unknown ecosystem " + token);
  return eco;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zkSBOM supplier tools"};
  app.require_subcommand(1);

  std::string secret_out, public_out;
  auto* keygen = app.add_subcommand("keygen", "create a signing key");
  keygen->add_option("--secret", secret_out, "seed file to write")->required();
  keygen->add_option("--public", public_out, "public key file to write")->required();

  std::string sbom, seed_hex, commitment, ecosystem;
  auto* check = app.add_subcommand("check", "recompute the operator's commitment");
  check->add_option("--sbom", sbom)->required()->check(CLI::ExistingFile);
  check->add_option("--seed", seed_hex, "seed returned by the operator (hex)")->required();
  check->add_option("--commitment", commitment)->required();
  check->add_option("--ecosystem", ecosystem, "ecosystem for components without a purl");

  std::string artifact, key, log_dir, pub_commitment;
  auto* publish = app.add_subcommand("publish", "sign and log a commitment");
  publish->add_option("--artifact", artifact)->required()->check(CLI::ExistingFile);
  publish->add_option("--commitment", pub_commitment)->required();
  publish->add_option("--key", key, "seed file from keygen")->required()->check(CLI::ExistingFile);
  publish->add_option("--log", log_dir, "transparency log directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*keygen) {
      auto seed = crypto::random_seed();
      auto kp = crypto::keygen(seed);
      tools::write_file(secret_out, to_hex(seed) + "\n");
      tools::write_file(public_out, to_hex(kp.public_key.bytes) + "\n");
      std::cout << to_hex(kp.public_key.bytes) << "\n";
      return 0;
    }
    if (*check) {
      auto seed_bytes = from_hex(tools::trimmed(seed_hex));
      if (!seed_bytes || seed_bytes->size() != 32) {
        throw Error(ErrorCode::kBadSeedLength, "seed must be 32 hex bytes");
      }
      zks::Seed seed;
      std::copy(seed_bytes->begin(), seed_bytes->end(), seed.begin());
      bool ok = client::supplier_check_commitment(
          tools::read_file(sbom), seed, {tools::parse_digest(commitment)}, hint_of(ecosystem));
      std::cout << (ok ? "match" : "MISMATCH") << "\n";
      return ok ? 0 : 1;
    }
    auto kp = crypto::keygen(tools::read_hex_file(key, 32));
    auto log = tlog::load_log(log_dir);
    auto digest = client::supplier_publish(as_bytes(tools::read_file(artifact)),
                                           {tools::parse_digest(pub_commitment)},
                                           kp.private_key, log);
    tlog::save_log(log, log_dir);
    std::cout << digest.hex() << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
