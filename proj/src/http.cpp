#include "saferoute/http.hpp"

#include "httplib.h"

namespace saferoute {

using nlohmann::json;

namespace {

HttpResponse error(int status, const std::string& message) {
  return {status, {{"error", message}}};
}

struct BadRequest : Error {
  using Error::Error;
};

GeoPoint point_field(const json& body, const char* key) {
  if (!body.contains(key)) throw BadRequest(std::string("missing field '") + key + "'");
  const json& v = body.at(key);
  GeoPoint p;
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    p = {v[0].get<double>(), v[1].get<double>()};
  } else if (v.is_object() && v.contains("lat") && v.contains("lon") &&
             v.at("lat").is_number() && v.at("lon").is_number()) {
    p = {v.at("lat").get<double>(), v.at("lon").get<double>()};
  } else {
    throw BadRequest(std::string("field '") + key + "' must be [lat, lon] or {lat, lon}");
  }
  if (!is_valid(p)) throw BadRequest(std::string("field '") + key + "' is out of range");
  return p;
}

RouteQuery parse_query(const json& body) {
  if (!body.is_object()) throw BadRequest("request body must be a JSON object");
  RouteQuery q;
  q.from = point_field(body, "from");
  q.to = point_field(body, "to");
  if (!body.contains("weights") || !body.at("weights").is_array()) {
    throw BadRequest("field 'weights' must be an array of numbers");
  }
  for (const json& w : body.at("weights")) {
    if (!w.is_number()) throw BadRequest("field 'weights' must be an array of numbers");
    q.weights.push_back(w.get<double>());
  }
  if (body.contains("bbox_dist") && !body.at("bbox_dist").is_null()) {
    if (!body.at("bbox_dist").is_number()) throw BadRequest("field 'bbox_dist' must be a number");
    q.bbox_dist = body.at("bbox_dist").get<double>();
  }
  return q;
}

}  // namespace

HttpResponse handle_routes(const RouteEngine& engine, const std::string& body,
                           const ServiceConfig& config) {
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error& e) {
    return error(400, std::string("malformed JSON: ") + e.what());
  }
  try {
    if (request.is_object() && request.contains("graph") &&
        request.at("graph") != json(engine.name())) {
      return error(404, "unknown graph " + request.at("graph").dump());
    }
    const RouteQuery query = parse_query(request);
    if (query.bbox_dist && !(*query.bbox_dist > 0.0)) {
      return error(422, "bbox_dist must be positive");
    }
    SolveOptions options;
    options.deadline = std::chrono::steady_clock::now() + config.time_budget;
    const RouteResult result = engine.route(query, options);
    json response = {{"routes", routes_to_geojson(result)},
                     {"summary", summary_to_json(result.summary)}};
    if (!result.warnings.empty()) response["warnings"] = result.warnings;
    return {200, std::move(response)};
  } catch (const BadRequest& e) {
    return error(400, e.what());
  } catch (const InvalidWeight& e) {
    return error(422, e.what());
  } catch (const DimensionError& e) {
    return error(422, e.what());
  } catch (const Timeout& e) {
    return error(503, e.what());
  }
}

HttpResponse handle_meta(const RouteEngine& engine) { return {200, engine.meta()}; }

RouteServer::RouteServer(std::shared_ptr<const RouteEngine> engine, ServiceConfig config)
    : engine_(std::move(engine)),
      config_(std::move(config)),
      server_(std::make_unique<httplib::Server>()) {
  auto reply = [](httplib::Response& res, const HttpResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json; charset=utf-8");
  };
  server_->Post("/api/routes", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_routes(*engine_, req.body, config_));
  });
  server_->Get("/api/graph/meta", [this, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, handle_meta(*engine_));
  });
  server_->set_exception_handler(
      [reply](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          reply(res, error(500, e.what()));
        }
      });
  if (config_.static_dir) server_->set_mount_point("/", config_.static_dir->string());
}

RouteServer::~RouteServer() = default;

bool RouteServer::listen(const std::string& host, int port) { return server_->listen(host, port); }

int RouteServer::bind_to_any_port(const std::string& host) {
  return server_->bind_to_any_port(host);
}

bool RouteServer::listen_after_bind() { return server_->listen_after_bind(); }

void RouteServer::wait_until_ready() const { server_->wait_until_ready(); }

void RouteServer::stop() { server_->stop(); }

}  // namespace saferoute
