#include "saferoute/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "saferoute/error.hpp"

namespace saferoute {

namespace {

constexpr double kEndpointToleranceDeg = 1e-7;
constexpr double kLengthRelTolerance = 0.005;

bool same_position(GeoPoint a, GeoPoint b) {
  return std::abs(a.lat - b.lat) <= kEndpointToleranceDeg &&
         std::abs(a.lon - b.lon) <= kEndpointToleranceDeg;
}

std::string edge_name(const GraphEdge& e) {
  return std::to_string(e.from) + "->" + std::to_string(e.to);
}

bool better_parallel(const GraphEdge& a, const GraphEdge& b) {
  if (a.cost.category != b.cost.category) return a.cost.category < b.cost.category;
  return a.cost.length < b.cost.length;
}

RoutingGraph copy_nodes(const RoutingGraph& graph) {
  RoutingGraph out(graph.scale());
  for (const GraphNode& n : graph.nodes()) out.add_node(n);
  return out;
}

}  // namespace

void RoutingGraph::add_node(GraphNode node) {
  if (!is_valid(node.position)) {
    throw GeometryError("node " + std::to_string(node.id) + " has invalid coordinates");
  }
  if (!index_.emplace(node.id, nodes_.size()).second) {
    throw InvalidGraph("duplicate node id " + std::to_string(node.id));
  }
  nodes_.push_back(node);
  out_.emplace_back();
}

void RoutingGraph::add_edge(GraphEdge edge) {
  const auto from = find(edge.from);
  const auto to = find(edge.to);
  if (!from || !to) throw InvalidGraph("edge " + edge_name(edge) + " has a missing endpoint");
  if (!scale_.contains(edge.cost.category)) {
    throw InvalidCategory("edge " + edge_name(edge) + " has category " +
                          std::to_string(edge.cost.category.index));
  }
  if (!(edge.cost.length > 0.0) || !std::isfinite(edge.cost.length)) {
    throw InvalidGraph("edge " + edge_name(edge) + " must have positive length");
  }
  if (edge.geometry.size() < 2) {
    throw GeometryError("edge " + edge_name(edge) + " geometry needs at least 2 points");
  }
  if (!same_position(edge.geometry.front(), nodes_[*from].position) ||
      !same_position(edge.geometry.back(), nodes_[*to].position)) {
    throw GeometryError("edge " + edge_name(edge) + " geometry does not meet its endpoints");
  }
  const double polyline = haversine_length(edge.geometry);
  if (std::abs(edge.cost.length - polyline) > kLengthRelTolerance * polyline) {
    throw GeometryError("edge " + edge_name(edge) + " length " +
                        std::to_string(edge.cost.length) + " m disagrees with geometry " +
                        std::to_string(polyline) + " m");
  }
  out_[*from].push_back(std::move(edge));
  ++edge_count_;
}

std::optional<std::size_t> RoutingGraph::find(NodeId id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RoutingGraph::index_of(NodeId id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw NotFound("node " + std::to_string(id) + " not in graph");
  return it->second;
}

const GraphEdge* RoutingGraph::find_edge(NodeId from, NodeId to) const {
  const auto i = find(from);
  if (!i) return nullptr;
  for (const GraphEdge& e : out_[*i]) {
    if (e.to == to) return &e;
  }
  return nullptr;
}

bool RoutingGraph::has_parallel_edges() const {
  for (const auto& edges : out_) {
    std::set<NodeId> seen;
    for (const GraphEdge& e : edges) {
      if (!seen.insert(e.to).second) return true;
    }
  }
  return false;
}

std::vector<GeoPoint> RoutingGraph::positions() const {
  std::vector<GeoPoint> out;
  out.reserve(nodes_.size());
  for (const GraphNode& n : nodes_) out.push_back(n.position);
  return out;
}

std::vector<NodeId> RoutingGraph::ids() const {
  std::vector<NodeId> out;
  out.reserve(nodes_.size());
  for (const GraphNode& n : nodes_) out.push_back(n.id);
  return out;
}

kernels::LatLonBox RoutingGraph::bounds() const {
  if (nodes_.empty()) throw EmptyGraph("graph has no nodes");
  kernels::LatLonBox box{90.0, -90.0, 180.0, -180.0};
  for (const GraphNode& n : nodes_) {
    box.min_lat = std::min(box.min_lat, n.position.lat);
    box.max_lat = std::max(box.max_lat, n.position.lat);
    box.min_lon = std::min(box.min_lon, n.position.lon);
    box.max_lon = std::max(box.max_lon, n.position.lon);
  }
  return box;
}

RoutingGraph dedupe_parallel_edges(const RoutingGraph& graph) {
  RoutingGraph out = copy_nodes(graph);
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    std::vector<const GraphEdge*> kept;  // first-seen target order
    for (const GraphEdge& e : graph.out_edges_at(i)) {
      auto it = std::find_if(kept.begin(), kept.end(),
                             [&](const GraphEdge* k) { return k->to == e.to; });
      if (it == kept.end()) {
        kept.push_back(&e);
      } else if (better_parallel(e, **it)) {
        *it = &e;
      }
    }
    for (const GraphEdge* e : kept) out.add_edge(*e);
  }
  return out;
}

RoutingGraph simplify(const RoutingGraph& graph, std::span<const NodeId> keep) {
  const std::size_t n = graph.node_count();
  std::vector<std::set<std::size_t>> succ(n);
  std::vector<std::set<std::size_t>> pred(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const GraphEdge& e : graph.out_edges_at(i)) {
      const std::size_t j = graph.index_of(e.to);
      succ[i].insert(j);
      pred[j].insert(i);
    }
  }

  std::vector<bool> interior(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (succ[i].contains(i) || pred[i].empty()) continue;
    std::set<std::size_t> neighbours = succ[i];
    neighbours.insert(pred[i].begin(), pred[i].end());
    if (neighbours.size() != 2) continue;
    const std::size_t u = *neighbours.begin();
    const std::size_t w = *std::next(neighbours.begin());
    const bool u_ok = !pred[i].contains(u) || succ[i].contains(w);
    const bool w_ok = !pred[i].contains(w) || succ[i].contains(u);
    interior[i] = u_ok && w_ok;
  }
  for (NodeId id : keep) {
    if (const auto i = graph.find(id)) interior[*i] = false;
  }

  std::vector<bool> visited(n, false);
  std::vector<std::size_t> anchors;
  std::vector<GraphEdge> merged;

  auto other_neighbour = [&](std::size_t node, std::size_t prev) {
    std::set<std::size_t> neighbours = succ[node];
    neighbours.insert(pred[node].begin(), pred[node].end());
    for (std::size_t x : neighbours) {
      if (x != prev) return x;
    }
    return prev;
  };

  auto walk_from = [&](std::size_t anchor) {
    for (const GraphEdge& first : graph.out_edges_at(anchor)) {
      GraphEdge chain = first;
      std::size_t prev = anchor;
      std::size_t cur = graph.index_of(first.to);
      while (interior[cur] && cur != anchor) {
        visited[cur] = true;
        const std::size_t next = other_neighbour(cur, prev);
        const GraphEdge* step = graph.find_edge(graph.node_at(cur).id, graph.node_at(next).id);
        if (step == nullptr) break;  // unreachable for interior nodes
        chain.to = step->to;
        chain.cost.length += step->cost.length;
        chain.cost.category = std::max(chain.cost.category, step->cost.category);
        chain.geometry.insert(chain.geometry.end(), step->geometry.begin() + 1,
                              step->geometry.end());
        prev = cur;
        cur = next;
      }
      if (chain.to != chain.from) merged.push_back(std::move(chain));
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (!interior[i]) {
      anchors.push_back(i);
      walk_from(i);
    }
  }
  // Remaining interior nodes form isolated rings; anchor each at its smallest id.
  for (;;) {
    std::optional<std::size_t> ring_anchor;
    for (std::size_t i = 0; i < n; ++i) {
      if (interior[i] && !visited[i] &&
          (!ring_anchor || graph.node_at(i).id < graph.node_at(*ring_anchor).id)) {
        ring_anchor = i;
      }
    }
    if (!ring_anchor) break;
    interior[*ring_anchor] = false;
    visited[*ring_anchor] = true;
    anchors.push_back(*ring_anchor);
    walk_from(*ring_anchor);
  }

  std::sort(anchors.begin(), anchors.end());
  RoutingGraph out(graph.scale());
  for (std::size_t i : anchors) out.add_node(graph.node_at(i));
  for (GraphEdge& e : merged) out.add_edge(std::move(e));
  return dedupe_parallel_edges(out);
}

kernels::LatLonBox square_box(GeoPoint center, double half_side_m) {
  if (!(half_side_m > 0.0)) throw GeometryError("bounding box distance must be positive");
  const double dlat = half_side_m / kMetersPerDegree;
  const double dlon =
      half_side_m / (kMetersPerDegree * std::cos(center.lat * std::numbers::pi / 180.0));
  return {center.lat - dlat, center.lat + dlat, center.lon - dlon, center.lon + dlon};
}

RoutingGraph bbox_subgraph(const RoutingGraph& graph, GeoPoint center, double half_side_m) {
  const kernels::LatLonBox box = square_box(center, half_side_m);
  const std::vector<GeoPoint> positions = graph.positions();
  const std::vector<std::uint8_t> mask = kernels::inside_mask(positions, box);

  RoutingGraph out(graph.scale());
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    if (mask[i]) out.add_node(graph.node_at(i));
  }
  if (out.empty()) throw EmptyGraph("no nodes inside the bounding box");
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    if (!mask[i]) continue;
    for (const GraphEdge& e : graph.out_edges_at(i)) {
      if (mask[graph.index_of(e.to)]) out.add_edge(e);
    }
  }
  return out;
}

NodeId nearest_node(const RoutingGraph& graph, GeoPoint point) {
  if (graph.empty()) throw EmptyGraph("cannot snap to an empty graph");
  const std::vector<GeoPoint> positions = graph.positions();
  const std::vector<NodeId> ids = graph.ids();
  return ids[kernels::nearest_index(positions, ids, point)];
}

}  // namespace saferoute
