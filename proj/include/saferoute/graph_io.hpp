#pragma once

// Graph interchange format:
// {"scale": {"K", "labels", "colors"},
//  "nodes": [{"id", "lat", "lon"}],
//  "edges": [{"from", "to", "length_m", "category", "geometry": [[lat, lon], ...]}]}

#include <filesystem>
#include <iosfwd>

#include "json.hpp"
#include "saferoute/graph.hpp"

namespace saferoute {

nlohmann::json scale_to_json(const CategoryScale& scale);
CategoryScale scale_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const RoutingGraph& graph);
/// Throws ParseError for structurally wrong documents; graph validation
/// errors propagate from RoutingGraph.
RoutingGraph graph_from_json(const nlohmann::json& j);

void save_graph(const RoutingGraph& graph, const std::filesystem::path& path);
RoutingGraph load_graph(const std::filesystem::path& path);

}  // namespace saferoute
