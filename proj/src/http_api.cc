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

#include "zksbom/http_api.h"

#include "httplib.h"
#include "json.hpp"
#include "zksbom/errors.h"

namespace zksbom::http {
namespace {

void reply_error(httplib::Response& res, int status, const std::string& message) {
  res.status = status;
  res.set_content(nlohmann::json{{"error", message}}.dump(), "application/json");
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownCommitment:
    case ErrorCode::kUnknownCve:
      return 404;
    case ErrorCode::kMalformedDocument:
    case ErrorCode::kUnsupportedSpecVersion:
    case ErrorCode::kMalformedComponent:
    case ErrorCode::kMalformedInput:
      return 400;
    default:
      return 500;
  }
}

template <typename Handler>
void guarded(const Authorizer& authorizer, const httplib::Request& req,
             httplib::Response& res, Handler&& handler) {
  if (authorizer && !authorizer(req)) {
    reply_error(res, 403, "unauthorized");
    return;
  }
  try {
    handler();
  } catch (const Error& e) {
    reply_error(res, status_for(e.code()), e.what());
  } catch (const std::exception& e) {
    reply_error(res, 500, e.what());
  }
}

}  // namespace

void register_routes(httplib::Server& server, op::OperatorService& service,
                     Authorizer authorizer) {
  server.Post("/api/v1/sbom", [&service, authorizer](const httplib::Request& req,
                                                     httplib::Response& res) {
    guarded(authorizer, req, res, [&] {
      std::optional<Ecosystem> hint;
      if (req.has_param("ecosystem")) {
        hint = parse_ecosystem_token(req.get_param_value("ecosystem"));
        if (!hint) throw Error(ErrorCode::kMalformedInput, "unknown ecosystem");
      }
      auto result = service.upload_sbom(req.body, hint);
      nlohmann::json body{{"commitment", result.commitment.root.hex()},
                          {"seed", to_hex(result.seed)}};
      res.set_content(body.dump(), "application/json");
    });
  });

  server.Get("/api/v1/proof", [&service, authorizer](const httplib::Request& req,
                                                     httplib::Response& res) {
    guarded(authorizer, req, res, [&] {
      if (!req.has_param("commitment") || !req.has_param("cve")) {
        throw Error(ErrorCode::kMalformedInput, "commitment and cve are required");
      }
      auto root = Digest::from_hex(req.get_param_value("commitment"));
      if (!root) throw Error(ErrorCode::kMalformedInput, "commitment is not 64 hex chars");
      ProofResponse response;
      response.cve = req.get_param_value("cve");
      response.proofs = service.query_vulnerability(zks::Commitment{*root}, response.cve);
      res.set_content(proof_response_to_json(response), "application/json");
    });
  });
}

}  // namespace zksbom::http
