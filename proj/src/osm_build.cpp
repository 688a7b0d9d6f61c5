#include <algorithm>
#include <unordered_map>

#include "saferoute/error.hpp"
#include "saferoute/kernels.hpp"
#include "saferoute/osm.hpp"

namespace saferoute::osm {

namespace {

struct Segment {
  std::int64_t from;
  std::int64_t to;
  Category category;
  bool forward;
  bool backward;
};

bool contains_normalized(const std::vector<std::string>& options, const std::string& value) {
  return std::any_of(options.begin(), options.end(),
                     [&](const std::string& o) { return normalize_value(o) == value; });
}

}  // namespace

RoutingGraph build_graph(const std::vector<RawNode>& nodes, const std::vector<RawWay>& ways,
                         const CategoryScale& scale, const TagRules& rules,
                         std::vector<std::string>* warnings) {
  if (scale.size() != 4) {
    throw DimensionError("OSM categorisation produces 4 categories, scale has " +
                         std::to_string(scale.size()));
  }
  auto warn = [&](std::string message) {
    if (warnings != nullptr) warnings->push_back(std::move(message));
  };

  std::unordered_map<std::int64_t, GeoPoint> position;
  position.reserve(nodes.size());
  for (const RawNode& n : nodes) position.emplace(n.id, GeoPoint{n.lat, n.lon});

  std::vector<Segment> segments;
  for (const RawWay& way : ways) {
    if (!bike_filter(way.tags, rules)) continue;
    const Category category = categorize(way.tags, rules);
    const std::string oneway = normalized_value(way.tags, "oneway");
    const bool contraflow = normalized_value(way.tags, "oneway:bicycle") == "no";
    const bool forward_only = contains_normalized(rules.oneway_values, oneway) && !contraflow;
    const bool reverse_only =
        contains_normalized(rules.reverse_oneway_values, oneway) && !contraflow;

    for (std::size_t i = 1; i < way.node_refs.size(); ++i) {
      const std::int64_t a = way.node_refs[i - 1];
      const std::int64_t b = way.node_refs[i];
      if (!position.contains(a) || !position.contains(b)) {
        warn("way " + std::to_string(way.id) + " references a missing node, segment skipped");
        continue;
      }
      segments.push_back({a, b, category, !reverse_only, !forward_only});
    }
  }

  std::vector<GeoPoint> from(segments.size());
  std::vector<GeoPoint> to(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i) {
    from[i] = position.at(segments[i].from);
    to[i] = position.at(segments[i].to);
  }
  std::vector<double> lengths(segments.size());
  kernels::segment_lengths(from, to, lengths);

  std::vector<std::int64_t> used;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (lengths[i] > 0.0) {
      used.push_back(segments[i].from);
      used.push_back(segments[i].to);
    }
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  RoutingGraph graph(scale);
  for (std::int64_t id : used) graph.add_node({id, position.at(id)});

  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& s = segments[i];
    if (!(lengths[i] > 0.0)) {
      warn("zero-length segment " + std::to_string(s.from) + "-" + std::to_string(s.to) +
           " skipped");
      continue;
    }
    if (s.forward) graph.add_edge({s.from, s.to, {lengths[i], s.category}, {from[i], to[i]}});
    if (s.backward) graph.add_edge({s.to, s.from, {lengths[i], s.category}, {to[i], from[i]}});
  }
  return dedupe_parallel_edges(graph);
}

}  // namespace saferoute::osm
