#pragma once

// Query engine shared by the CLI and the HTTP service, plus the output
// documents both emit.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "saferoute/graph.hpp"
#include "saferoute/solver.hpp"

namespace saferoute {

/// Snap distances above this are reported as warnings.
inline constexpr double kSnapWarningMeters = 500.0;

struct RouteQuery {
  GeoPoint from;
  GeoPoint to;
  std::vector<double> weights;
  std::optional<double> bbox_dist;  // half side in meters, centered on `from`
};

struct RouteSetSummary {
  std::size_t count = 0;
  std::optional<double> mean_length;
  double runtime = 0.0;  // seconds spent in solve
};

struct RouteResult {
  std::shared_ptr<const RoutingGraph> graph;  // graph the routes live in
  std::vector<RouteSolution> routes;
  RouteSetSummary summary;
  WeightVector weights = WeightVector({});
  std::optional<NodeId> source;
  std::optional<NodeId> target;
  double source_snap_m = 0.0;
  double target_snap_m = 0.0;
  std::vector<std::string> warnings;
};

class RouteEngine {
 public:
  explicit RouteEngine(RoutingGraph graph, std::string name = "default");

  const RoutingGraph& graph() const noexcept { return *graph_; }
  const std::string& name() const noexcept { return name_; }

  /// Validates the query (InvalidWeight / DimensionError / GeometryError),
  /// clips to the bounding box when requested, snaps both points to their
  /// nearest nodes and solves. Empty clips and targets outside the box give
  /// an empty result with a warning rather than an error.
  RouteResult route(const RouteQuery& query, const SolveOptions& options = {}) const;

  /// {K, labels, colors, node_count, edge_count, bbox: [w, s, e, n]}
  nlohmann::json meta() const;

 private:
  std::shared_ptr<const RoutingGraph> graph_;
  std::string name_;
};

RouteSetSummary summarize(const std::vector<RouteSolution>& routes, double runtime);

/// Rounds to centimeters, the precision of every metric value we emit.
double round_cm(double meters);

/// RFC 7946 FeatureCollection, coordinates [lon, lat], one feature per route
/// in solver order.
nlohmann::json routes_to_geojson(const RouteResult& result);
nlohmann::json summary_to_json(const RouteSetSummary& summary);

/// Tab-separated table: one row per route with d and d^(omega) columns.
std::string routes_to_table(const RouteResult& result);

/// "lat,lon"
GeoPoint parse_point(std::string_view text);
/// "w1,w2,..."
std::vector<double> parse_number_list(std::string_view text);

}  // namespace saferoute
