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

#include "zksbom/errors.h"

namespace zksbom {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedComponent: return "malformed-component";
    case ErrorCode::kBadSeedLength: return "bad-seed-length";
    case ErrorCode::kInvalidKey: return "invalid-key";
    case ErrorCode::kMalformedDocument: return "malformed-document";
    case ErrorCode::kUnsupportedSpecVersion: return "unsupported-spec-version";
    case ErrorCode::kDuplicateArtifact: return "duplicate-artifact";
    case ErrorCode::kInvalidSignature: return "invalid-signature";
    case ErrorCode::kIoError: return "io-error";
    case ErrorCode::kMalformedFixture: return "malformed-fixture";
    case ErrorCode::kDuplicateAdvisoryId: return "duplicate-advisory-id";
    case ErrorCode::kUnknownCve: return "unknown-cve";
    case ErrorCode::kUnknownCommitment: return "unknown-commitment";
    case ErrorCode::kCorruptRecord: return "corrupt-record";
    case ErrorCode::kStorageFailure: return "storage-failure";
    case ErrorCode::kEmptyInput: return "empty-input";
    case ErrorCode::kFixtureError: return "fixture-error";
    case ErrorCode::kMalformedInput: return "malformed-input";
  }
  return "unknown-error";
}

}  // namespace zksbom
