#pragma once

#include <chrono>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "json.hpp"
#include "saferoute/service.hpp"

namespace httplib {
class Server;
}

namespace saferoute {

struct ServiceConfig {
  std::chrono::milliseconds time_budget{60'000};
  std::optional<std::filesystem::path> static_dir;
};

struct HttpResponse {
  int status = 200;
  nlohmann::json body;
};

/// POST /api/routes. Status codes: 400 malformed body, 404 unknown graph,
/// 422 invalid weights or bbox, 503 time budget exceeded.
HttpResponse handle_routes(const RouteEngine& engine, const std::string& body,
                           const ServiceConfig& config);

/// GET /api/graph/meta
HttpResponse handle_meta(const RouteEngine& engine);

/// Thin cpp-httplib wrapper around the handlers above.
class RouteServer {
 public:
  RouteServer(std::shared_ptr<const RouteEngine> engine, ServiceConfig config);
  ~RouteServer();
  RouteServer(const RouteServer&) = delete;
  RouteServer& operator=(const RouteServer&) = delete;

  /// Blocks until stop().
  bool listen(const std::string& host, int port);
  /// Returns the bound port, or -1.
  int bind_to_any_port(const std::string& host);
  bool listen_after_bind();
  void wait_until_ready() const;
  void stop();

 private:
  std::shared_ptr<const RouteEngine> engine_;
  ServiceConfig config_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace saferoute
