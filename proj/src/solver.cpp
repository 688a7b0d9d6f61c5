#include "saferoute/solver.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <queue>

namespace saferoute {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

struct CompactEdge {
  std::uint32_t head;
  const GraphEdge* edge;
};

struct Label {
  std::uint32_t node;
  std::uint32_t parent;
  const GraphEdge* via;
};

class LabelStore {
 public:
  explicit LabelStore(std::size_t k) : k_(k) {}

  std::uint32_t add(Label label, std::span<const double> cost) {
    labels_.push_back(label);
    costs_.insert(costs_.end(), cost.begin(), cost.end());
    return static_cast<std::uint32_t>(labels_.size() - 1);
  }

  const Label& operator[](std::uint32_t id) const { return labels_[id]; }
  std::span<const double> cost(std::uint32_t id) const { return {costs_.data() + id * k_, k_}; }
  std::size_t size() const noexcept { return labels_.size(); }

 private:
  std::size_t k_;
  std::vector<Label> labels_;
  std::vector<double> costs_;
};

// True when `a` dominates or eps-equals `b`.
bool covers(std::span<const double> a, std::span<const double> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i] + kEqualityTolerance) return false;
  }
  return true;
}

bool strictly_dominates(std::span<const double> a, std::span<const double> b) {
  bool better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i] + kEqualityTolerance) return false;
    if (a[i] < b[i] - kEqualityTolerance) better = true;
  }
  return better;
}

bool covered_by(const std::vector<std::uint32_t>& frontier, const LabelStore& store,
                std::span<const double> cost) {
  return std::any_of(frontier.begin(), frontier.end(),
                     [&](std::uint32_t id) { return covers(store.cost(id), cost); });
}

void check_deadline(const SolveOptions& options) {
  if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
    throw Timeout("route computation exceeded its time budget");
  }
}

}  // namespace

std::vector<RouteSolution> solve(const RoutingGraph& graph, NodeId source, NodeId target,
                                 const WeightVector& weights, const SolveOptions& options,
                                 SolveStats* stats) {
  const CategoryScale& scale = graph.scale();
  weights.check_against(scale);
  const auto s = static_cast<std::uint32_t>(graph.index_of(source));
  const auto t = static_cast<std::uint32_t>(graph.index_of(target));
  const std::size_t k = static_cast<std::size_t>(scale.size());
  const ContributionTable table(scale, weights);

  std::vector<std::vector<CompactEdge>> adjacency(graph.node_count());
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    for (const GraphEdge& e : graph.out_edges_at(i)) {
      adjacency[i].push_back({static_cast<std::uint32_t>(graph.index_of(e.to)), &e});
    }
  }

  LabelStore store(k);
  std::vector<std::vector<std::uint32_t>> frontier(graph.node_count());

  auto later = [&](std::uint32_t a, std::uint32_t b) {
    const auto ca = store.cost(a);
    const auto cb = store.cost(b);
    if (!std::equal(ca.begin(), ca.end(), cb.begin())) {
      return std::lexicographical_compare(cb.begin(), cb.end(), ca.begin(), ca.end());
    }
    const NodeId na = graph.node_at(store[a].node).id;
    const NodeId nb = graph.node_at(store[b].node).id;
    if (na != nb) return na > nb;
    return a > b;
  };
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, decltype(later)> queue(later);

  const std::vector<double> zero(k, 0.0);
  queue.push(store.add({s, kNone, nullptr}, zero));

  std::vector<double> next(k);
  std::size_t settled = 0;
  while (!queue.empty()) {
    if ((settled & 1023U) == 0) check_deadline(options);
    const std::uint32_t id = queue.top();
    queue.pop();
    const std::uint32_t v = store[id].node;
    const auto cost = store.cost(id);

    if (covered_by(frontier[t], store, cost) || covered_by(frontier[v], store, cost)) continue;

    auto& here = frontier[v];
    std::erase_if(here, [&](std::uint32_t other) {
      return strictly_dominates(cost, store.cost(other));
    });
    here.push_back(id);
    ++settled;

    if (v == t) continue;
    for (const CompactEdge& ce : adjacency[v]) {
      const auto row = table.row(ce.edge->cost.category);
      const auto base = store.cost(id);  // re-read: add() may reallocate
      for (std::size_t i = 0; i < k; ++i) next[i] = base[i] + ce.edge->cost.length * row[i];
#ifndef NDEBUG
      for (std::size_t i = 0; i < k; ++i) assert(next[i] >= base[i]);
#endif
      if (covered_by(frontier[ce.head], store, next) || covered_by(frontier[t], store, next)) {
        continue;
      }
      queue.push(store.add({ce.head, id, ce.edge}, next));
    }
  }

  if (stats != nullptr) {
    stats->labels_created = store.size();
    stats->labels_settled = settled;
  }

  const WeightVector ones = WeightVector::ones(k - 1);
  std::vector<RouteSolution> out;
  out.reserve(frontier[t].size());
  for (std::uint32_t id : frontier[t]) {
    RouteSolution route;
    for (std::uint32_t cur = id; cur != kNone; cur = store[cur].parent) {
      route.nodes.push_back(graph.node_at(store[cur].node).id);
      if (store[cur].via != nullptr) route.edges.push_back(store[cur].via->cost);
    }
    std::reverse(route.nodes.begin(), route.nodes.end());
    std::reverse(route.edges.begin(), route.edges.end());
    const auto c = store.cost(id);
    route.weighted_cost = CostVector(std::vector<double>(c.begin(), c.end()));
    route.unweighted_cost = accumulate(route.edges, ones, scale);
    route.total_length = route.unweighted_cost[0];
    out.push_back(std::move(route));
  }
  return out;
}

std::vector<SweepRow> sweep_weights(const RoutingGraph& graph, NodeId source, NodeId target,
                                    std::span<const double> omega_values,
                                    const SolveOptions& options) {
  const std::size_t dims = static_cast<std::size_t>(graph.scale().size()) - 1;
  std::vector<SweepRow> rows;
  for (double omega : omega_values) {
    const WeightVector weights = WeightVector::uniform(dims, omega);
    const auto start = std::chrono::steady_clock::now();
    const std::vector<RouteSolution> routes = solve(graph, source, target, weights, options);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    SweepRow row{omega, routes.size(), std::nullopt, elapsed.count()};
    if (!routes.empty()) {
      double sum = 0.0;
      for (const RouteSolution& r : routes) sum += r.total_length;
      row.mean_length = sum / static_cast<double>(routes.size());
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace saferoute
