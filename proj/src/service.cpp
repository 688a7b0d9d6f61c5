#include "saferoute/service.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace saferoute {

using nlohmann::json;

namespace {

double parse_double(std::string_view text) {
  const auto first = text.find_first_not_of(' ');
  const auto last = text.find_last_not_of(' ');
  if (first == std::string_view::npos) throw ParseError("empty number", 0);
  text = text.substr(first, last - first + 1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("not a number: '" + std::string(text) + "'", 0);
  }
  return value;
}

json rounded(const CostVector& v) {
  json out = json::array();
  for (double x : v.components()) out.push_back(round_cm(x));
  return out;
}

std::string fixed2(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

RouteEngine::RouteEngine(RoutingGraph graph, std::string name)
    : graph_(std::make_shared<const RoutingGraph>(
          graph.has_parallel_edges() ? dedupe_parallel_edges(graph) : std::move(graph))),
      name_(std::move(name)) {}

RouteResult RouteEngine::route(const RouteQuery& query, const SolveOptions& options) const {
  if (!is_valid(query.from) || !is_valid(query.to)) {
    throw GeometryError("query coordinates out of range");
  }
  RouteResult result;
  result.weights = WeightVector(query.weights);
  result.weights.check_against(graph_->scale());
  result.graph = graph_;

  if (query.bbox_dist) {
    const kernels::LatLonBox box = square_box(query.from, *query.bbox_dist);
    const auto in_box = kernels::serial::inside_mask(std::vector{query.to}, box);
    if (!in_box[0]) {
      result.warnings.push_back("target lies outside the bounding box; enlarge bbox_dist");
      return result;
    }
    try {
      result.graph = std::make_shared<const RoutingGraph>(
          bbox_subgraph(*graph_, query.from, *query.bbox_dist));
    } catch (const EmptyGraph&) {
      result.warnings.push_back("no graph nodes inside the bounding box; enlarge bbox_dist");
      return result;
    }
  }

  const RoutingGraph& g = *result.graph;
  result.source = nearest_node(g, query.from);
  result.target = nearest_node(g, query.to);
  result.source_snap_m = haversine_distance(query.from, g.node(*result.source).position);
  result.target_snap_m = haversine_distance(query.to, g.node(*result.target).position);
  if (result.source_snap_m > kSnapWarningMeters) {
    result.warnings.push_back("start snapped " + fixed2(result.source_snap_m) + " m to node " +
                              std::to_string(*result.source));
  }
  if (result.target_snap_m > kSnapWarningMeters) {
    result.warnings.push_back("target snapped " + fixed2(result.target_snap_m) + " m to node " +
                              std::to_string(*result.target));
  }

  const auto start = std::chrono::steady_clock::now();
  result.routes = solve(g, *result.source, *result.target, result.weights, options);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  result.summary = summarize(result.routes, elapsed.count());
  return result;
}

json RouteEngine::meta() const {
  const CategoryScale& scale = graph_->scale();
  json bbox = nullptr;
  if (!graph_->empty()) {
    const auto b = graph_->bounds();
    bbox = {b.min_lon, b.min_lat, b.max_lon, b.max_lat};
  }
  return {{"graph", name_},
          {"K", scale.size()},
          {"labels", scale.labels()},
          {"colors", scale.colors()},
          {"node_count", graph_->node_count()},
          {"edge_count", graph_->edge_count()},
          {"bbox", bbox}};
}

RouteSetSummary summarize(const std::vector<RouteSolution>& routes, double runtime) {
  RouteSetSummary s{routes.size(), std::nullopt, runtime};
  if (!routes.empty()) {
    double sum = 0.0;
    for (const RouteSolution& r : routes) sum += r.total_length;
    s.mean_length = sum / static_cast<double>(routes.size());
  }
  return s;
}

double round_cm(double meters) { return std::round(meters * 100.0) / 100.0; }

json routes_to_geojson(const RouteResult& result) {
  json features = json::array();
  if (result.graph == nullptr) return {{"type", "FeatureCollection"}, {"features", features}};
  const RoutingGraph& g = *result.graph;
  const CategoryScale& scale = g.scale();

  for (std::size_t r = 0; r < result.routes.size(); ++r) {
    const RouteSolution& route = result.routes[r];
    json coordinates = json::array();
    json legs = json::array();
    std::vector<double> breakdown(static_cast<std::size_t>(scale.size()), 0.0);

    for (std::size_t i = 0; i + 1 < route.nodes.size(); ++i) {
      const GraphEdge* edge = g.find_edge(route.nodes[i], route.nodes[i + 1]);
      if (edge == nullptr) throw NotFound("route edge missing from graph");
      const std::size_t first = coordinates.empty() ? 0 : coordinates.size() - 1;
      for (std::size_t p = coordinates.empty() ? 0 : 1; p < edge->geometry.size(); ++p) {
        coordinates.push_back({edge->geometry[p].lon, edge->geometry[p].lat});
      }
      const int c = route.edges[i].category.index;
      breakdown[static_cast<std::size_t>(c - 1)] += route.edges[i].length;
      legs.push_back({{"category", c},
                      {"color", scale.colors()[static_cast<std::size_t>(c - 1)]},
                      {"length_m", round_cm(route.edges[i].length)},
                      {"coordinate_range", {first, coordinates.size() - 1}}});
    }

    json rounded_breakdown = json::array();
    for (double b : breakdown) rounded_breakdown.push_back(round_cm(b));

    json geometry = nullptr;  // a zero-length route has no line geometry
    if (coordinates.size() >= 2) {
      geometry = {{"type", "LineString"}, {"coordinates", std::move(coordinates)}};
    }
    features.push_back({{"type", "Feature"},
                        {"geometry", std::move(geometry)},
                        {"properties",
                         {{"route_index", r},
                          {"nodes", route.nodes},
                          {"weighted_cost", rounded(route.weighted_cost)},
                          {"unweighted_cost", rounded(route.unweighted_cost)},
                          {"total_length_m", round_cm(route.total_length)},
                          {"category_breakdown_m", std::move(rounded_breakdown)},
                          {"color-legs", std::move(legs)}}}});
  }
  return {{"type", "FeatureCollection"}, {"features", std::move(features)}};
}

json summary_to_json(const RouteSetSummary& summary) {
  return {{"count", summary.count},
          {"mean_length", summary.mean_length ? json(round_cm(*summary.mean_length)) : json()},
          {"runtime", summary.runtime}};
}

std::string routes_to_table(const RouteResult& result) {
  const int k = result.graph ? result.graph->scale().size() : result.weights.size() + 1;
  std::ostringstream out;
  out << "route\ttotal_length_m";
  for (int i = 1; i <= k; ++i) out << "\td" << i;
  for (int i = 1; i <= k; ++i) out << "\tdw" << i;
  out << '\n';
  for (std::size_t r = 0; r < result.routes.size(); ++r) {
    const RouteSolution& route = result.routes[r];
    out << r << '\t' << fixed2(route.total_length);
    for (double x : route.unweighted_cost.components()) out << '\t' << fixed2(x);
    for (double x : route.weighted_cost.components()) out << '\t' << fixed2(x);
    out << '\n';
  }
  return out.str();
}

GeoPoint parse_point(std::string_view text) {
  const std::vector<double> v = parse_number_list(text);
  if (v.size() != 2) throw ParseError("expected 'lat,lon', got '" + std::string(text) + "'", 0);
  const GeoPoint p{v[0], v[1]};
  if (!is_valid(p)) throw GeometryError("coordinate out of range: '" + std::string(text) + "'");
  return p;
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_double(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace saferoute
