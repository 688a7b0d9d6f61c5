#include <functional>

#include "saferoute/solver.hpp"

namespace saferoute {

std::vector<EnumeratedPath> brute_force_oracle(const RoutingGraph& graph, NodeId source,
                                               NodeId target, const WeightVector& weights) {
  weights.check_against(graph.scale());
  const std::size_t s = graph.index_of(source);
  const std::size_t t = graph.index_of(target);
  const bool small = graph.node_count() <= kOracleMaxNodes;

  std::vector<std::pair<CostVector, std::vector<NodeId>>> found;
  std::vector<bool> on_path(graph.node_count(), false);
  std::vector<NodeId> nodes{source};
  std::vector<EdgeCost> edges;
  std::size_t enumerated = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    if (v == t) {
      if (++enumerated > kOracleMaxPaths && !small) {
        throw TooLarge("more than " + std::to_string(kOracleMaxPaths) +
                       " simple paths; graph too large for exhaustive enumeration");
      }
      found.emplace_back(accumulate(edges, weights, graph.scale()), nodes);
      return;
    }
    on_path[v] = true;
    for (const GraphEdge& e : graph.out_edges_at(v)) {
      const std::size_t w = graph.index_of(e.to);
      if (on_path[w]) continue;
      nodes.push_back(e.to);
      edges.push_back(e.cost);
      visit(w);
      nodes.pop_back();
      edges.pop_back();
    }
    on_path[v] = false;
  };
  visit(s);

  std::vector<EnumeratedPath> out;
  for (auto& [cost, path] : pareto_filter(std::move(found))) {
    out.push_back({std::move(cost), std::move(path)});
  }
  return out;
}

}  // namespace saferoute
