#pragma once

// OSM XML ingestion: parse, bicycle filter, four-level safety
// categorisation and graph construction.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "saferoute/graph.hpp"

namespace saferoute::osm {

using TagMap = std::map<std::string, std::string, std::less<>>;

struct RawNode {
  std::int64_t id = 0;
  double lat = 0.0;
  double lon = 0.0;
};

struct RawWay {
  std::int64_t id = 0;
  std::vector<std::int64_t> node_refs;
  TagMap tags;
};

struct OsmData {
  std::vector<RawNode> nodes;
  std::vector<RawWay> ways;
  std::vector<std::string> warnings;
};

/// Parses an <osm> document. Ways referencing unknown nodes, or with fewer
/// than two refs, are dropped with a warning. Throws ParseError carrying the
/// byte offset of malformed XML.
OsmData parse_osm_xml(std::string_view document);
OsmData parse_osm_file(const std::filesystem::path& path);

/// Tag lists driving bike_filter, categorize and oneway handling. Values are
/// compared after trimming and lower-casing; keys are compared verbatim.
struct TagRules {
  // bike_filter
  std::vector<std::string> excluded_highways{"motorway", "motorway_link", "steps"};
  std::map<std::string, std::vector<std::string>> excluded_values{{"bicycle", {"no"}},
                                                                  {"access", {"private"}}};
  // categorize
  std::vector<std::string> cycleway_keys{"bicycle",
                                         "cycleway",
                                         "cycleway:left",
                                         "cycleway:right",
                                         "bicycle_road",
                                         "cycleway:right:bicycle",
                                         "cycleway:left:bicycle"};
  std::string no_cycleway_value{"none"};
  std::vector<std::string> separated_keys{"bicycle", "bicycle_road"};
  std::vector<std::string> separated_values{"yes", "designated"};
  std::vector<std::string> quiet_highways{"residential", "living_street", "track", "bridleway"};
  // oneway
  std::vector<std::string> oneway_values{"yes", "true", "1"};
  std::vector<std::string> reverse_oneway_values{"-1"};

  /// Defaults overridden by whichever keys `j` contains. Unknown keys are
  /// rejected with ParseError.
  static TagRules from_json(const nlohmann::json& j);
  static TagRules load(const std::filesystem::path& path);
  nlohmann::json to_json() const;
};

/// True for ways with a highway tag that cyclists may use.
bool bike_filter(const TagMap& tags, const TagRules& rules = {});

/// Safety category 1..4: separated cycleway, other cycleway, quiet street
/// without cycleway, everything else.
Category categorize(const TagMap& tags, const TagRules& rules = {});

/// Trimmed and lower-cased.
std::string normalize_value(std::string_view value);

/// normalize_value of the tag `key`, or empty when absent.
std::string normalized_value(const TagMap& tags, std::string_view key);

/// Turns kept ways into directed segment edges (reverse edges unless
/// oneway), then dedupes parallel edges. `scale` must have 4 categories.
/// Zero-length segments are skipped and reported in `warnings`.
RoutingGraph build_graph(const std::vector<RawNode>& nodes, const std::vector<RawWay>& ways,
                         const CategoryScale& scale, const TagRules& rules = {},
                         std::vector<std::string>* warnings = nullptr);

}  // namespace saferoute::osm
