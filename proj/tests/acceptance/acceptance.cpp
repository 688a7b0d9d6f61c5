// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "geojson_check.hpp"
#include "httplib.h"
#include "saferoute/error.hpp"
#include "saferoute/graph_io.hpp"
#include "saferoute/http.hpp"
#include "saferoute/osm.hpp"
#include "saferoute/service.hpp"
#include "test_graphs.hpp"

using namespace saferoute;
using namespace saferoute::testing;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

bool close_vec(const CostVector& a, const std::vector<double>& b, double rel) {
  if (a.size() != static_cast<int>(b.size())) return false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double x = a[static_cast<int>(i)];
    if (b[i] == 0.0 ? x != 0.0 : !close_rel(x, b[i], rel)) return false;
  }
  return true;
}

// Every vector any criterion sees from solve(); checked for monotonicity.
std::vector<CostVector> g_emitted;

std::vector<RouteSolution> solve_recorded(const RoutingGraph& g, NodeId s, NodeId t,
                                          const WeightVector& w) {
  auto routes = solve(g, s, t, w);
  for (const RouteSolution& r : routes) {
    g_emitted.push_back(r.weighted_cost);
    g_emitted.push_back(r.unweighted_cost);
  }
  return routes;
}

Outcome two_route_golden() {
  Outcome o;
  const auto start = Clock::now();
  const CategoryScale scale = two_level();
  const std::vector<EdgeCost> hat{{6.0, Category{1}}, {1.0, Category{2}}};
  const std::vector<EdgeCost> tilde{{8.0, Category{1}}};

  const WeightVector one({1.0});
  const CostVector h1 = accumulate(hat, one, scale);
  const CostVector t1 = accumulate(tilde, one, scale);
  o.require(close_vec(h1, {7.0, 1.0}, 1e-9), "x-hat at omega 1 is not (7, 1)");
  o.require(close_vec(t1, {8.0, 0.0}, 1e-9), "x-tilde at omega 1 is not (8, 0)");
  o.require(!dominates(h1, t1) && !dominates(t1, h1), "omega 1 vectors are comparable");

  const WeightVector w({2.3});
  const CostVector h2 = accumulate(hat, w, scale);
  const CostVector t2 = accumulate(tilde, w, scale);
  o.require(close_vec(h2, {8.3, 1.0}, 1e-9), "x-hat at omega 2.3 is not (8.3, 1)");
  o.require(close_vec(t2, {8.0, 0.0}, 1e-9), "x-tilde at omega 2.3 is not (8, 0)");
  o.require(dominates(t2, h2), "x-tilde does not dominate x-hat at omega 2.3");

  const double elapsed = seconds_since(start);
  o.require(elapsed < 1.0, "took longer than 1 s");
  if (o.pass) {
    std::ostringstream d;
    d << "(7,1) vs (8,0) incomparable; (8.3,1) dominated by (8,0); " << elapsed << " s";
    o.detail = d.str();
  }
  return o;
}

constexpr int kInstances = 250;

std::vector<RandomInstance> instances() {
  std::mt19937_64 rng(0x5AFE2026);
  std::vector<RandomInstance> out;
  // half across the whole size range, half close to the upper bounds
  for (int i = 0; i < kInstances; ++i) {
    out.push_back(i % 2 == 0 ? random_instance(rng, 12, 30) : random_instance(rng, 12, 30, 9, 22));
  }
  return out;
}

Outcome oracle_equivalence(const std::vector<RandomInstance>& all) {
  Outcome o;
  const auto start = Clock::now();
  std::size_t vectors = 0;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const RandomInstance& inst = all[i];
    // the drawn weights, and omega = 1 where Pareto sets are largest
    for (const WeightVector& w : {inst.weights, WeightVector::ones(inst.weights.size())}) {
      const auto routes = solve_recorded(inst.graph, inst.source, inst.target, w);
      const auto paths = brute_force_oracle(inst.graph, inst.source, inst.target, w);
      vectors += paths.size();
      largest = std::max(largest, paths.size());
      o.require(same_vector_set(costs_of(routes), costs_of(paths)),
                "instance " + std::to_string(i) + ": Pareto sets differ");
    }
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 60.0, "took longer than 60 s");
  if (o.pass) {
    std::ostringstream d;
    d << all.size() << " instances x 2 weightings, " << vectors << " nondominated vectors, largest set " << largest
      << ", " << elapsed << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome shortest_membership(const std::vector<RandomInstance>& all) {
  Outcome o;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const RandomInstance& inst = all[i];
    const auto routes = solve_recorded(inst.graph, inst.source, inst.target,
                                       WeightVector::ones(inst.weights.size()));
    const double reference = shortest_distance(inst.graph, inst.source, inst.target);
    if (routes.empty()) {
      o.require(std::isinf(reference), "instance " + std::to_string(i) + ": no routes");
      continue;
    }
    double best = routes.front().total_length;
    for (const RouteSolution& r : routes) best = std::min(best, r.total_length);
    o.require(close_rel(best, reference, 1e-6),
              "instance " + std::to_string(i) + ": shortest route missing");
  }
  if (o.pass) o.detail = std::to_string(all.size()) + " instances";
  return o;
}

// 4 x 5 street grid, two-way blocks of 150 m plus detours, four categories.
RoutingGraph city_grid() {
  std::mt19937_64 rng(20);
  std::uniform_int_distribution<int> category(1, 4);
  std::uniform_real_distribution<double> detour(0.0, 60.0);
  std::vector<GeoPoint> pos;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 5; ++c) pos.push_back(offset_meters(kOrigin, 150.0 * c, 150.0 * r));
  }
  std::vector<EdgeSpec> edges;
  auto link = [&](NodeId a, NodeId b) {
    const double len = haversine_distance(pos[static_cast<std::size_t>(a)],
                                          pos[static_cast<std::size_t>(b)]) + detour(rng);
    const int cat = category(rng);
    edges.push_back({a, b, len, cat});
    edges.push_back({b, a, len, cat});
  };
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 5; ++c) {
      const NodeId id = r * 5 + c;
      if (c + 1 < 5) link(id, id + 1);
      if (r + 1 < 4) link(id, id + 5);
    }
  }
  return make_graph(CategoryScale::four_level(), pos, edges);
}

Outcome sweep_shape() {
  Outcome o;
  const std::vector<double> omegas{1, 2, 4, 8, 16};
  std::ostringstream d;
  auto check = [&](const std::string& name, const RoutingGraph& g, NodeId s, NodeId t) {
    for (double w : omegas) {
      solve_recorded(g, s, t, WeightVector::uniform(static_cast<std::size_t>(g.scale().size() - 1), w));
    }
    const auto rows = sweep_weights(g, s, t, omegas);
    d << name << " counts";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      d << (i == 0 ? " " : ",") << rows[i].route_count;
      if (i > 0) {
        o.require(rows[i].route_count <= rows[i - 1].route_count,
                  name + ": count rises between omega " + std::to_string(omegas[i - 1]) +
                      " and " + std::to_string(omegas[i]));
      }
    }
    o.require(rows.front().route_count > 0, name + ": no route at omega 1");
  };
  check("diamond", diamond(), kDiamondS, kDiamondT);
  d << "; ";
  check("grid", city_grid(), 0, 19);
  const std::string counts = d.str();
  o.detail = o.pass ? counts : o.detail + " (" + counts + ")";
  return o;
}

Outcome simplification_soundness() {
  Outcome o;
  std::mt19937_64 rng(0xC4A1);
  std::size_t queries = 0;
  std::size_t removed = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + trial % 3;
    const ChainGraph cg = random_chain_graph(rng, k, false);
    const RoutingGraph simple = simplify(cg.graph);
    removed += cg.graph.node_count() - simple.node_count();
    const WeightVector w = WeightVector::uniform(static_cast<std::size_t>(k - 1), 1.0 + trial % 4);
    for (NodeId s : cg.skeleton_nodes) {
      for (NodeId t : cg.skeleton_nodes) {
        if (s == t) continue;
        ++queries;
        const auto before = solve_recorded(cg.graph, s, t, w);
        const auto after = solve_recorded(simple, s, t, w);
        o.require(same_vector_set(costs_of(before), costs_of(after)),
                  "trial " + std::to_string(trial) + ": Pareto sets differ for " +
                      std::to_string(s) + "->" + std::to_string(t));
      }
    }
  }
  std::size_t chains = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const ChainGraph cg = random_chain_graph(rng, 4, true);
    const RoutingGraph simple = simplify(cg.graph);
    for (const ChainGraph::Chain& c : cg.chains) {
      ++chains;
      const GraphEdge* e = simple.find_edge(c.from, c.to);
      if (e == nullptr) {
        o.require(false, "mixed trial " + std::to_string(trial) + ": chain edge missing");
        continue;
      }
      o.require(e->cost.category.index == c.worst_category,
                "mixed trial " + std::to_string(trial) + ": merged category is not the maximum");
      o.require(close_rel(e->cost.length, c.length, 1e-6),
                "mixed trial " + std::to_string(trial) + ": length not preserved");
    }
  }
  if (o.pass) {
    o.detail = "50 uniform graphs (" + std::to_string(queries) + " queries, " +
               std::to_string(removed) + " nodes contracted); 50 mixed graphs (" +
               std::to_string(chains) + " chains)";
  }
  return o;
}

Outcome ingestion_goldens() {
  using osm::TagMap;
  Outcome o;
  o.require(osm::categorize({{"highway", "residential"}}).index == 3, "residential is not 3");
  o.require(osm::categorize({{"highway", "primary"}}).index == 4, "primary is not 4");
  o.require(osm::categorize({{"highway", "secondary"}, {"cycleway", "lane"}}).index == 2,
            "cycle lane is not 2");
  o.require(osm::categorize({{"highway", "path"}, {"bicycle", "designated"}, {"cycleway", "track"}})
                    .index == 1,
            "separated designated path is not 1");
  o.require(!osm::bike_filter({{"highway", "steps"}}), "steps not excluded");
  o.require(!osm::bike_filter({{"highway", "motorway"}}), "motorway not excluded");
  o.require(osm::bike_filter({{"highway", "residential"}}), "residential excluded");

  auto dedupe_pick = [](std::vector<EdgeSpec> specs) {
    const RoutingGraph g = make_graph(CategoryScale::four_level(),
                                      {kOrigin, offset_meters(kOrigin, 100, 0)}, specs);
    return dedupe_parallel_edges(g).find_edge(0, 1)->cost;
  };
  const EdgeCost best = dedupe_pick({{0, 1, 200.0, 2}, {0, 1, 150.0, 4}});
  o.require(best.category.index == 2 && best.length == 200.0, "best category did not win");
  const EdgeCost shortest = dedupe_pick({{0, 1, 200.0, 2}, {0, 1, 180.0, 2}});
  o.require(shortest.category.index == 2 && shortest.length == 180.0,
            "shortest of the best category did not win");
  if (o.pass) o.detail = "4 category, 3 filter and 2 dedupe fixtures";
  return o;
}

Outcome service_contract() {
  Outcome o;
  auto engine = std::make_shared<const RouteEngine>(
      load_graph(std::string(SAFEROUTE_FIXTURES) + "/diamond.json"), "diamond");
  RouteServer server(engine, {});
  const int port = server.bind_to_any_port("127.0.0.1");
  if (port <= 0) {
    o.require(false, "could not bind a port");
    return o;
  }
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  const GeoPoint s = engine->graph().node(kDiamondS).position;
  const GeoPoint t = engine->graph().node(kDiamondT).position;
  httplib::Client client("127.0.0.1", port);
  auto post = [&](double w) {
    const json body = {{"from", {s.lat, s.lon}}, {"to", {t.lat, t.lon}}, {"weights", {w}}};
    return client.Post("/api/routes", body.dump(), "application/json");
  };
  std::ostringstream d;
  for (const auto& [w, expected] : std::vector<std::pair<double, std::size_t>>{{1.0, 2}, {4.0, 1}}) {
    auto res = post(w);
    if (!res || res->status != 200) {
      o.require(false, "request at omega " + std::to_string(w) + " failed");
      continue;
    }
    const json doc = json::parse(res->body, nullptr, false);
    const json& routes = doc.is_object() && doc.contains("routes") ? doc.at("routes") : json();
    const std::string problem = geojson_problem(routes);
    o.require(problem.empty(), "invalid GeoJSON: " + problem);
    const std::size_t n = routes.is_object() ? routes["features"].size() : 0;
    o.require(n == expected, "omega " + std::to_string(w) + " gave " + std::to_string(n) + " features");
    d << "omega " << w << " -> " << n << " features; ";
  }
  auto bad = post(0.5);
  o.require(bad && bad->status == 422, "weight 0.5 was not rejected with 422");
  d << "omega 0.5 -> " << (bad ? bad->status : -1);

  server.stop();
  worker.join();
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome reduction_and_monotone() {
  Outcome o;
  for (int k = 2; k <= 6; ++k) {
    const CategoryScale scale = CategoryScale::generic(k);
    const WeightVector ones = WeightVector::ones(static_cast<std::size_t>(k - 1));
    for (int c = 1; c <= k; ++c) {
      o.require(k_weighted(Category{c}, ones, scale) == k_vector(Category{c}, scale),
                "k_weighted(., 1) differs from k_vector for K=" + std::to_string(k));
    }
  }
  std::size_t bad = 0;
  for (const CostVector& v : g_emitted) bad += v.is_monotone() ? 0 : 1;
  o.require(bad == 0, std::to_string(bad) + " emitted vectors are not non-increasing");
  if (o.pass) {
    o.detail = "K=2..6 contribution rows; " + std::to_string(g_emitted.size()) +
               " emitted vectors non-increasing";
  }
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](const std::string& name, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    if (!o.pass) ++failures;
  };

  const std::vector<RandomInstance> random = instances();
  report("two-route-golden", two_route_golden);
  report("oracle-equivalence", [&] { return oracle_equivalence(random); });
  report("shortest-path-membership", [&] { return shortest_membership(random); });
  report("omega-sweep-shape", sweep_shape);
  report("simplification-soundness", simplification_soundness);
  report("ingestion-goldens", ingestion_goldens);
  report("service-contract", service_contract);
  // last, so it sees the vectors produced by every criterion above
  report("omega-1-reduction-and-monotone-vectors", reduction_and_monotone);
  return failures == 0 ? 0 : 1;
}
