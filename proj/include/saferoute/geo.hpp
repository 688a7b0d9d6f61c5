#pragma once

#include <span>
#include <vector>

namespace saferoute {

inline constexpr double kEarthRadiusMeters = 6'371'000.0;
/// Equirectangular scale used for local offsets and bounding boxes.
inline constexpr double kMetersPerDegree = 111'320.0;

/// WGS84 position in degrees.
struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

bool is_valid(GeoPoint p) noexcept;

/// Great-circle distance in meters.
double haversine_distance(GeoPoint a, GeoPoint b) noexcept;

/// Sum of segment distances. Throws GeometryError for fewer than 2 points.
double haversine_length(std::span<const GeoPoint> polyline);

/// Point displaced by the given local east/north offsets (equirectangular).
GeoPoint offset_meters(GeoPoint origin, double east_m, double north_m) noexcept;

/// Polyline from `a` to `b` whose haversine length is `length` meters.
/// Returns [a, b] when the straight segment already has that length,
/// otherwise [a, apex, b] with the apex on the perpendicular bisector.
/// Throws GeometryError when `length` is shorter than the direct distance.
std::vector<GeoPoint> detour_polyline(GeoPoint a, GeoPoint b, double length);

}  // namespace saferoute
