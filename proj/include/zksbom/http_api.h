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

#include <functional>
#include <string>

#include "zksbom/operator_service.h"

namespace httplib {
class Server;
struct Request;
}  // namespace httplib

namespace zksbom::http {

// Deployments plug in consumer authorization here; the default allows all.
using Authorizer = std::function<bool(const httplib::Request&)>;

//   POST /api/v1/sbom[?ecosystem=MAVEN]      body: CycloneDX JSON
//     200 {"commitment": "<hex>", "seed": "<hex>"}
//   GET  /api/v1/proof?commitment=<hex>&cve=<id>
//     200 proof response body (see proof_response.h)
// 400 malformed input, 403 unauthorized, 404 unknown commitment or CVE.
void register_routes(httplib::Server& server, op::OperatorService& service,
                     Authorizer authorizer = {});

}  // namespace zksbom::http
