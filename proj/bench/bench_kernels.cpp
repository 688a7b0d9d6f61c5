#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "saferoute/kernels.hpp"
#include "saferoute/solver.hpp"

using namespace saferoute;

namespace {

constexpr GeoPoint kCenter{48.7758, 9.1829};

std::vector<GeoPoint> random_points(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-0.05, 0.05);
  std::vector<GeoPoint> out(n);
  for (GeoPoint& p : out) p = {kCenter.lat + d(rng), kCenter.lon + d(rng)};
  return out;
}

template <bool Parallel>
void BM_SegmentLengths(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_points(n, 1);
  const auto b = random_points(n, 2);
  std::vector<double> out(n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::segment_lengths(a, b, out);
    } else {
      kernels::serial::segment_lengths(a, b, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <bool Parallel>
void BM_NearestIndex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto points = random_points(n, 3);
  std::vector<std::int64_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<std::int64_t>(i);
  for (auto _ : state) {
    std::size_t idx = 0;
    if constexpr (Parallel) {
      idx = kernels::nearest_index(points, ids, kCenter);
    } else {
      idx = kernels::serial::nearest_index(points, ids, kCenter);
    }
    benchmark::DoNotOptimize(idx);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <bool Parallel>
void BM_InsideMask(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto points = random_points(n, 4);
  const kernels::LatLonBox box{kCenter.lat - 0.02, kCenter.lat + 0.02, kCenter.lon - 0.02,
                               kCenter.lon + 0.02};
  for (auto _ : state) {
    auto mask = Parallel ? kernels::inside_mask(points, box) : kernels::serial::inside_mask(points, box);
    benchmark::DoNotOptimize(mask.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

// side x side two-way street grid, 120 m blocks, four categories.
RoutingGraph grid(int side) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> category(1, 4);
  RoutingGraph g(CategoryScale::four_level());
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      g.add_node({r * side + c, offset_meters(kCenter, 120.0 * c, 120.0 * r)});
    }
  }
  auto link = [&](NodeId a, NodeId b) {
    const GeoPoint pa = g.node(a).position;
    const GeoPoint pb = g.node(b).position;
    const double len = haversine_distance(pa, pb);
    const Category cat{category(rng)};
    g.add_edge({a, b, {len, cat}, {pa, pb}});
    g.add_edge({b, a, {len, cat}, {pb, pa}});
  };
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      const NodeId id = r * side + c;
      if (c + 1 < side) link(id, id + 1);
      if (r + 1 < side) link(id, id + side);
    }
  }
  return g;
}

void BM_SolveGrid(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const double omega = static_cast<double>(state.range(1));
  const RoutingGraph g = grid(side);
  const NodeId target = side * side - 1;
  std::size_t routes = 0;
  for (auto _ : state) {
    routes = solve(g, 0, target, WeightVector::uniform(3, omega)).size();
    benchmark::DoNotOptimize(routes);
  }
  state.counters["routes"] = static_cast<double>(routes);
}

}  // namespace

BENCHMARK(BM_SegmentLengths<false>)->Name("segment_lengths/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_SegmentLengths<true>)->Name("segment_lengths/openmp")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_NearestIndex<false>)->Name("nearest_index/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_NearestIndex<true>)->Name("nearest_index/openmp")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_InsideMask<false>)->Name("inside_mask/serial")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_InsideMask<true>)->Name("inside_mask/openmp")->Range(1 << 12, 1 << 20);
BENCHMARK(BM_SolveGrid)
    ->Name("solve_grid")
    ->ArgsProduct({{6, 10}, {1, 2, 4, 16}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
