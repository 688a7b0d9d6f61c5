#include "saferoute/kernels.hpp"

#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "saferoute/error.hpp"

namespace saferoute::kernels {

namespace {

void check_sizes(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": input sizes differ");
}

struct Candidate {
  double distance = std::numeric_limits<double>::infinity();
  std::int64_t id = std::numeric_limits<std::int64_t>::max();
  std::size_t index = std::numeric_limits<std::size_t>::max();

  bool better_than(const Candidate& o) const noexcept {
    return distance < o.distance || (distance == o.distance && id < o.id);
  }
};

bool inside(GeoPoint p, const LatLonBox& box) noexcept {
  return p.lat >= box.min_lat && p.lat <= box.max_lat && p.lon >= box.min_lon &&
         p.lon <= box.max_lon;
}

}  // namespace

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void segment_lengths(std::span<const GeoPoint> from, std::span<const GeoPoint> to,
                     std::span<double> out) {
  check_sizes(from.size(), to.size(), "segment_lengths");
  check_sizes(from.size(), out.size(), "segment_lengths");
  const auto n = static_cast<std::ptrdiff_t>(from.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        haversine_distance(from[static_cast<std::size_t>(i)], to[static_cast<std::size_t>(i)]);
  }
}

std::size_t nearest_index(std::span<const GeoPoint> positions,
                          std::span<const std::int64_t> ids, GeoPoint query) {
  check_sizes(positions.size(), ids.size(), "nearest_index");
  const auto n = static_cast<std::ptrdiff_t>(positions.size());
  Candidate best;
#pragma omp parallel
  {
    Candidate local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      const Candidate c{haversine_distance(positions[k], query), ids[k], k};
      if (c.better_than(local)) local = c;
    }
#pragma omp critical(saferoute_nearest)
    if (local.better_than(best)) best = local;
  }
  return n == 0 ? positions.size() : best.index;
}

std::vector<std::uint8_t> inside_mask(std::span<const GeoPoint> positions, LatLonBox box) {
  std::vector<std::uint8_t> mask(positions.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(positions.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    mask[static_cast<std::size_t>(i)] = inside(positions[static_cast<std::size_t>(i)], box);
  }
  return mask;
}

namespace serial {

void segment_lengths(std::span<const GeoPoint> from, std::span<const GeoPoint> to,
                     std::span<double> out) {
  check_sizes(from.size(), to.size(), "segment_lengths");
  check_sizes(from.size(), out.size(), "segment_lengths");
  for (std::size_t i = 0; i < from.size(); ++i) out[i] = haversine_distance(from[i], to[i]);
}

std::size_t nearest_index(std::span<const GeoPoint> positions,
                          std::span<const std::int64_t> ids, GeoPoint query) {
  check_sizes(positions.size(), ids.size(), "nearest_index");
  Candidate best;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Candidate c{haversine_distance(positions[i], query), ids[i], i};
    if (c.better_than(best)) best = c;
  }
  return positions.empty() ? 0 : best.index;
}

std::vector<std::uint8_t> inside_mask(std::span<const GeoPoint> positions, LatLonBox box) {
  std::vector<std::uint8_t> mask(positions.size(), 0);
  for (std::size_t i = 0; i < positions.size(); ++i) mask[i] = inside(positions[i], box);
  return mask;
}

}  // namespace serial

}  // namespace saferoute::kernels
