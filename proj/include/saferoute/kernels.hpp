#pragma once

// Data-parallel inner loops used by ingestion and graph queries. The default
// versions run under OpenMP; kernels::serial holds the reference loops they
// are tested and benchmarked against. Both produce identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "saferoute/geo.hpp"

namespace saferoute::kernels {

/// Axis-aligned lat/lon box, bounds inclusive.
struct LatLonBox {
  double min_lat, max_lat, min_lon, max_lon;
};

/// out[i] = haversine_distance(from[i], to[i])
void segment_lengths(std::span<const GeoPoint> from, std::span<const GeoPoint> to,
                     std::span<double> out);

/// Index of the position closest to `query`; ties go to the smaller id.
/// Returns positions.size() for empty input.
std::size_t nearest_index(std::span<const GeoPoint> positions,
                          std::span<const std::int64_t> ids, GeoPoint query);

/// mask[i] = 1 when positions[i] lies inside the box.
std::vector<std::uint8_t> inside_mask(std::span<const GeoPoint> positions, LatLonBox box);

/// Threads OpenMP will use (1 when built without OpenMP).
int max_threads() noexcept;

namespace serial {

void segment_lengths(std::span<const GeoPoint> from, std::span<const GeoPoint> to,
                     std::span<double> out);
std::size_t nearest_index(std::span<const GeoPoint> positions,
                          std::span<const std::int64_t> ids, GeoPoint query);
std::vector<std::uint8_t> inside_mask(std::span<const GeoPoint> positions, LatLonBox box);

}  // namespace serial

}  // namespace saferoute::kernels
