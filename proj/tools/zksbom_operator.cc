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


#include <csignal>
#include <iostream>

#include "CLI11.hpp"
#include "httplib.h"
#include "zksbom/advisory_db.h"
#include "zksbom/errors.h"
#include "zksbom/http_api.h"
#include "zksbom/operator_service.h"

namespace {

httplib::Server* g_server = nullptr;

void stop(int) {
  if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zkSBOM operator service"};
  std::string listen = "127.0.0.1:8080";
  std::string store_dir;
  std::string advisories;
  app.add_option("--listen", listen, "host:port to bind");
  app.add_option("--store-dir", store_dir, "commitment record directory")->required();
  app.add_option("--advisories", advisories, "advisory fixture JSON")
      ->required()
      ->check(CLI::ExistingFile);
  CLI11_PARSE(app, argc, argv);

  const auto colon = listen.rfind(':');
  if (colon == std::string::npos) {
    std::cerr << "--listen expects host:port\n";
    return 2;
  }
  const std::string host = listen.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(listen.substr(colon + 1));
  } catch (const std::exception&) {
    std::cerr << "bad port in --listen\n";
    return 2;
  }

  try {
    zksbom::op::OperatorService service(store_dir,
                                        zksbom::advisory::AdvisoryDb::load(advisories));
    httplib::Server server;
    zksbom::http::register_routes(server, service);
    g_server = &server;
    std::signal(SIGINT, stop);
    std::signal(SIGTERM, stop);
    if (!server.bind_to_port(host, port)) {
      std::cerr << "cannot bind " << listen << "\n";
      return 1;
    }
    std::cerr << "listening on " << listen << " with "
              << service.advisories().size() << " advisories\n";
    server.listen_after_bind();
  } catch (const zksbom::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
