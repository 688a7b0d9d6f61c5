#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "saferoute/graph.hpp"
#include "saferoute/ordinal.hpp"

namespace saferoute {

/// One efficient route. Edge i runs from nodes[i] to nodes[i + 1].
struct RouteSolution {
  std::vector<NodeId> nodes;
  std::vector<EdgeCost> edges;
  CostVector weighted_cost;    // d^(omega)
  CostVector unweighted_cost;  // d at omega = 1
  double total_length = 0.0;
};

struct SolveOptions {
  /// Solve throws Timeout once this instant has passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SolveStats {
  std::size_t labels_created = 0;
  std::size_t labels_settled = 0;
};

/// All nondominated weighted cost vectors of source->target paths, one route
/// per vector, in lexicographic order of the weighted vector.
///
/// Label-setting multiobjective Dijkstra: labels leave a priority queue in
/// lexicographic cost order (ties: node id, then creation order) and are
/// settled unless a settled label at their node or at the target dominates
/// or eps-equals them.
///
/// Throws NotFound for unknown nodes, DimensionError when the weights do not
/// fit the graph scale and Timeout when the deadline passes.
std::vector<RouteSolution> solve(const RoutingGraph& graph, NodeId source, NodeId target,
                                 const WeightVector& weights, const SolveOptions& options = {},
                                 SolveStats* stats = nullptr);

struct EnumeratedPath {
  CostVector cost;
  std::vector<NodeId> nodes;
};

inline constexpr std::size_t kOracleMaxNodes = 15;
inline constexpr std::size_t kOracleMaxPaths = 1'000'000;

/// Reference answer by exhaustive depth-first enumeration of simple paths,
/// followed by pareto_filter. Graphs with more than kOracleMaxNodes nodes are
/// accepted only while the enumeration stays within kOracleMaxPaths paths;
/// beyond that TooLarge is thrown.
std::vector<EnumeratedPath> brute_force_oracle(const RoutingGraph& graph, NodeId source,
                                               NodeId target, const WeightVector& weights);

struct SweepRow {
  double omega = 1.0;
  std::size_t route_count = 0;
  std::optional<double> mean_length;  // none when no route exists
  double seconds = 0.0;
};

/// Solves once per value with every omega_i set to that value. `seconds`
/// times the solve alone.
std::vector<SweepRow> sweep_weights(const RoutingGraph& graph, NodeId source, NodeId target,
                                    std::span<const double> omega_values,
                                    const SolveOptions& options = {});

}  // namespace saferoute
