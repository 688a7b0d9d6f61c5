#include "saferoute/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "saferoute/error.hpp"

namespace saferoute {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

}  // namespace

bool is_valid(GeoPoint p) noexcept {
  return std::isfinite(p.lat) && std::isfinite(p.lon) && p.lat >= -90.0 && p.lat <= 90.0 &&
         p.lon >= -180.0 && p.lon <= 180.0;
}

double haversine_distance(GeoPoint a, GeoPoint b) noexcept {
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dphi = (b.lat - a.lat) * kDegToRad;
  const double dlambda = (b.lon - a.lon) * kDegToRad;
  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlambda / 2.0);
  const double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  return 2.0 * kEarthRadiusMeters * std::asin(std::min(1.0, std::sqrt(h)));
}

double haversine_length(std::span<const GeoPoint> polyline) {
  if (polyline.size() < 2) throw GeometryError("a polyline needs at least 2 points");
  double total = 0.0;
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    total += haversine_distance(polyline[i - 1], polyline[i]);
  }
  return total;
}

GeoPoint offset_meters(GeoPoint origin, double east_m, double north_m) noexcept {
  const double dlat = north_m / kMetersPerDegree;
  const double dlon = east_m / (kMetersPerDegree * std::cos(origin.lat * kDegToRad));
  return {origin.lat + dlat, origin.lon + dlon};
}

std::vector<GeoPoint> detour_polyline(GeoPoint a, GeoPoint b, double length) {
  const double direct = haversine_distance(a, b);
  if (!(length > 0.0)) throw GeometryError("detour length must be positive");
  if (std::abs(length - direct) <= 1e-9 * length) return {a, b};
  if (length < direct) {
    throw GeometryError("requested length " + std::to_string(length) +
                        " m is shorter than the direct distance " + std::to_string(direct) +
                        " m");
  }

  const GeoPoint mid{(a.lat + b.lat) / 2.0, (a.lon + b.lon) / 2.0};
  // Unit normal to a->b in local meters; east when a and b coincide.
  const double cos_lat = std::cos(mid.lat * kDegToRad);
  const double dx = (b.lon - a.lon) * kMetersPerDegree * cos_lat;
  const double dy = (b.lat - a.lat) * kMetersPerDegree;
  const double norm = std::hypot(dx, dy);
  const double nx = norm > 0.0 ? -dy / norm : 1.0;
  const double ny = norm > 0.0 ? dx / norm : 0.0;

  auto apex = [&](double h) { return offset_meters(mid, nx * h, ny * h); };
  auto path_length = [&](double h) {
    const GeoPoint m = apex(h);
    return haversine_distance(a, m) + haversine_distance(m, b);
  };

  double lo = 0.0;
  double hi = length;
  for (int iter = 0; iter < 200 && hi - lo > 1e-12 * length; ++iter) {
    const double h = 0.5 * (lo + hi);
    (path_length(h) < length ? lo : hi) = h;
  }
  return {a, apex(0.5 * (lo + hi)), b};
}

}  // namespace saferoute
