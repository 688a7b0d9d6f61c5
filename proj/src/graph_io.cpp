#include "saferoute/graph_io.hpp"

#include <array>
#include <fstream>

namespace saferoute {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("graph document: missing field '") + key + "'", 0);
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph document: field '") + key + "': " + e.what(), 0);
  }
}

}  // namespace

json scale_to_json(const CategoryScale& scale) {
  return {{"K", scale.size()}, {"labels", scale.labels()}, {"colors", scale.colors()}};
}

CategoryScale scale_from_json(const json& j) {
  CategoryScale scale(field<std::vector<std::string>>(j, "labels"),
                      field<std::vector<std::string>>(j, "colors"));
  if (j.contains("K") && field<int>(j, "K") != scale.size()) {
    throw DimensionError("scale K does not match its label count");
  }
  return scale;
}

json graph_to_json(const RoutingGraph& graph) {
  json nodes = json::array();
  json edges = json::array();
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    const GraphNode& n = graph.node_at(i);
    nodes.push_back({{"id", n.id}, {"lat", n.position.lat}, {"lon", n.position.lon}});
    for (const GraphEdge& e : graph.out_edges_at(i)) {
      json geometry = json::array();
      for (const GeoPoint& p : e.geometry) geometry.push_back({p.lat, p.lon});
      edges.push_back({{"from", e.from},
                       {"to", e.to},
                       {"length_m", e.cost.length},
                       {"category", e.cost.category.index},
                       {"geometry", std::move(geometry)}});
    }
  }
  return {{"scale", scale_to_json(graph.scale())},
          {"nodes", std::move(nodes)},
          {"edges", std::move(edges)}};
}

RoutingGraph graph_from_json(const json& j) {
  RoutingGraph graph(scale_from_json(field<json>(j, "scale")));
  for (const json& n : field<json>(j, "nodes")) {
    graph.add_node({field<NodeId>(n, "id"), {field<double>(n, "lat"), field<double>(n, "lon")}});
  }
  for (const json& e : field<json>(j, "edges")) {
    GraphEdge edge;
    edge.from = field<NodeId>(e, "from");
    edge.to = field<NodeId>(e, "to");
    edge.cost.length = field<double>(e, "length_m");
    edge.cost.category = Category{field<int>(e, "category")};
    for (const auto& p : field<std::vector<std::array<double, 2>>>(e, "geometry")) {
      edge.geometry.push_back({p[0], p[1]});
    }
    graph.add_edge(std::move(edge));
  }
  return graph;
}

void save_graph(const RoutingGraph& graph, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << graph_to_json(graph).dump() << '\n';
  if (!out) throw IoError("failed writing " + path.string());
}

RoutingGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what(), e.byte);
  }
  return graph_from_json(j);
}

}  // namespace saferoute
