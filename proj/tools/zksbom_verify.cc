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
#include "zksbom/advisory_db.h"
#include "zksbom/client_tools.h"
#include "zksbom/proof_response.h"
#include "zksbom/transparency_log.h"

using namespace zksbom;

namespace {

constexpr int kNotAffected = 0;
constexpr int kAffected = 1;
constexpr int kInvalid = 2;

int publication(const std::string& artifact_path, const std::string& log_dir,
                const std::string& digest_hex, const std::string& pubkey_path) {
  auto artifact = tools::read_file(artifact_path);
  auto log = tlog::load_log(log_dir);
  crypto::PublicKey pk{tools::read_hex_file(pubkey_path, 32)};
  auto check = client::consumer_check_publication(as_bytes(artifact),
                                                  tools::parse_digest(digest_hex), log, pk);
  if (!check.ok) {
    std::cout << "Invalid: " << check.detail << "\n";
    return kInvalid;
  }
  std::cout << check.commitment->root.hex() << "\n";
  std::cerr << check.detail << "\n";
  return kNotAffected;
}

int proofs(const std::string& commitment_hex, const std::string& cve,
           const std::string& proofs_path, const std::string& advisories) {
  auto db = advisory::AdvisoryDb::load(advisories);
  auto response = proof_response_from_json(tools::read_file(proofs_path));
  if (response.cve != cve) {
    std::cout << "Invalid: proofs answer " << response.cve << ", not " << cve << "\n";
    return kInvalid;
  }
  zks::Commitment c{tools::parse_digest(commitment_hex)};
  Verdict v = client::consumer_verify_proofs(c, cve, response.proofs, db);
  std::cout << verdict_name(v.kind) << ": " << v.detail << "\n";
  switch (v.kind) {
    case Verdict::Kind::kAffected:
      return kAffected;
    case Verdict::Kind::kNotAffected:
      return kNotAffected;
    case Verdict::Kind::kInvalid:
      break;
  }
  return kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zkSBOM consumer verifier"};
  app.require_subcommand(1);

  std::string artifact, log_dir, digest, pubkey;
  auto* pub = app.add_subcommand("publication", "check an artifact's log entry");
  pub->add_option("--artifact", artifact)->required()->check(CLI::ExistingFile);
  pub->add_option("--log", log_dir, "transparency log directory")->required();
  pub->add_option("--digest", digest, "trusted log digest (hex)")->required();
  pub->add_option("--pubkey", pubkey, "supplier public key file (hex)")
      ->required()
      ->check(CLI::ExistingFile);

  std::string commitment, cve, proofs_path, advisories;
  auto* prf = app.add_subcommand("proofs", "verify a proof response");
  prf->add_option("--commitment", commitment)->required();
  prf->add_option("--cve", cve)->required();
  prf->add_option("--proofs", proofs_path)->required()->check(CLI::ExistingFile);
  prf->add_option("--advisories", advisories)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*pub) return publication(artifact, log_dir, digest, pubkey);
    return proofs(commitment, cve, proofs_path, advisories);
  } catch (const Error& e) {
    std::cout << "Invalid: " << e.what() << "\n";
    return kInvalid;
  }
}
