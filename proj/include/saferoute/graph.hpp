#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "saferoute/geo.hpp"
#include "saferoute/kernels.hpp"
#include "saferoute/ordinal.hpp"

namespace saferoute {

using NodeId = std::int64_t;

struct GraphNode {
  NodeId id = 0;
  GeoPoint position;
};

struct GraphEdge {
  NodeId from = 0;
  NodeId to = 0;
  EdgeCost cost;
  std::vector<GeoPoint> geometry;  // from-position ... to-position
};

/// Directed street graph. Filled once through add_node/add_edge and treated
/// as immutable afterwards; the transformations below return new graphs.
///
/// add_edge accepts parallel edges so that raw ingestion output can be
/// represented; dedupe_parallel_edges establishes the one-edge-per-pair
/// invariant that the solver expects.
class RoutingGraph {
 public:
  explicit RoutingGraph(CategoryScale scale) : scale_(std::move(scale)) {}

  const CategoryScale& scale() const noexcept { return scale_; }

  /// Throws InvalidGraph on duplicate id, GeometryError on a bad coordinate.
  void add_node(GraphNode node);

  /// Validates endpoints, category, length > 0, geometry endpoints and that
  /// the length agrees with the polyline within 0.5%.
  void add_edge(GraphEdge edge);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool empty() const noexcept { return nodes_.empty(); }

  bool contains(NodeId id) const { return index_.contains(id); }
  std::optional<std::size_t> find(NodeId id) const;
  /// Throws NotFound.
  std::size_t index_of(NodeId id) const;

  const std::vector<GraphNode>& nodes() const noexcept { return nodes_; }
  const GraphNode& node_at(std::size_t index) const { return nodes_[index]; }
  const GraphNode& node(NodeId id) const { return nodes_[index_of(id)]; }

  std::span<const GraphEdge> out_edges_at(std::size_t index) const { return out_[index]; }
  std::span<const GraphEdge> out_edges(NodeId id) const { return out_[index_of(id)]; }

  /// Null when there is no such edge; the first one when parallel edges exist.
  const GraphEdge* find_edge(NodeId from, NodeId to) const;

  bool has_parallel_edges() const;

  std::vector<GeoPoint> positions() const;
  std::vector<NodeId> ids() const;

  /// Bounding box of all node positions. Throws EmptyGraph.
  kernels::LatLonBox bounds() const;

 private:
  CategoryScale scale_;
  std::vector<GraphNode> nodes_;
  std::unordered_map<NodeId, std::size_t> index_;
  std::vector<std::vector<GraphEdge>> out_;
  std::size_t edge_count_ = 0;
};

/// Keeps one edge per ordered node pair: the best category, then the shortest.
RoutingGraph dedupe_parallel_edges(const RoutingGraph& graph);

/// Contracts pass-through nodes (two distinct neighbours, every entering
/// direction can continue to the other neighbour). Each maximal chain becomes
/// one edge with summed length, concatenated geometry and the worst category
/// along the chain. Nodes in `keep` are never contracted. Closed chains that
/// return to their start are dropped; isolated rings collapse to their
/// smallest node id. The result is deduplicated.
RoutingGraph simplify(const RoutingGraph& graph, std::span<const NodeId> keep = {});

/// Square of half-side `half_side_m` around `center`, sides along the
/// cardinal directions.
kernels::LatLonBox square_box(GeoPoint center, double half_side_m);

/// Nodes inside square_box(center, half_side_m) and the edges between them.
/// Throws EmptyGraph when no node is inside.
RoutingGraph bbox_subgraph(const RoutingGraph& graph, GeoPoint center, double half_side_m);

/// Node closest to `point` by haversine distance, ties to the smaller id.
/// Throws EmptyGraph.
NodeId nearest_node(const RoutingGraph& graph, GeoPoint point);

}  // namespace saferoute
