#include "doctest.h"
#include "saferoute/error.hpp"
#include "saferoute/osm.hpp"

using namespace saferoute;
using namespace saferoute::osm;

namespace {

const std::string kFixture = std::string(SAFEROUTE_FIXTURES) + "/small.osm";

}  // namespace

TEST_SUITE("osm-ingest") {
  TEST_CASE("parse minimal document") {
    const auto data = parse_osm_xml(R"(<osm>
      <node id="1" lat="48.0" lon="9.0"/>
      <node id="2" lat="48.001" lon="9.0"/>
      <way id="7"><nd ref="1"/><nd ref="2"/><tag k="highway" v="residential"/>
        <tag k="surface" v="asphalt"/></way>
    </osm>)");
    CHECK(data.nodes.size() == 2);
    REQUIRE(data.ways.size() == 1);
    CHECK(data.ways[0].node_refs == std::vector<std::int64_t>{1, 2});
    CHECK(data.ways[0].tags.at("surface") == "asphalt");
    CHECK(data.warnings.empty());
  }

  TEST_CASE("empty document") {
    const auto data = parse_osm_xml("<osm/>");
    CHECK(data.nodes.empty());
    CHECK(data.ways.empty());
  }

  TEST_CASE("way with a missing node is dropped with a warning") {
    const auto data = parse_osm_xml(R"(<osm><node id="1" lat="1" lon="1"/>
      <way id="3"><nd ref="1"/><nd ref="2"/><tag k="highway" v="path"/></way></osm>)");
    CHECK(data.ways.empty());
    REQUIRE(data.warnings.size() == 1);
    CHECK(data.warnings[0].find("missing node 2") != std::string::npos);
  }

  TEST_CASE("malformed XML reports a byte offset") {
    const std::string doc = "<osm><node id=\"1\" lat=\"1\" lon=\"1\"></osm>";
    try {
      parse_osm_xml(doc);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.byte_offset() > 0);
      CHECK(e.byte_offset() <= doc.size());
    }
    CHECK_THROWS_AS(parse_osm_xml("<gpx/>"), ParseError);
    CHECK_THROWS_AS(parse_osm_xml("<osm><node id=\"x\" lat=\"1\" lon=\"1\"/></osm>"), ParseError);
    CHECK_THROWS_AS(parse_osm_xml(""), ParseError);
    CHECK_THROWS_AS(parse_osm_file("/nonexistent.osm"), IoError);
  }

  TEST_CASE("bike_filter") {
    CHECK_FALSE(bike_filter({{"highway", "steps"}}));
    CHECK_FALSE(bike_filter({{"highway", "motorway"}}));
    CHECK_FALSE(bike_filter({{"highway", "motorway_link"}}));
    CHECK_FALSE(bike_filter({{"highway", "primary"}, {"bicycle", "no"}}));
    CHECK_FALSE(bike_filter({{"highway", "service"}, {"access", "private"}}));
    CHECK_FALSE(bike_filter({{"building", "yes"}}));
    CHECK(bike_filter({{"highway", "residential"}}));
    CHECK(bike_filter({{"highway", " Residential "}}));
    CHECK_FALSE(bike_filter({{"highway", "STEPS"}}));
  }

  TEST_CASE("categorize") {
    CHECK(categorize({{"highway", "secondary"}, {"cycleway", "lane"}}).index == 2);
    CHECK(categorize({{"highway", "path"}, {"bicycle", "designated"}, {"cycleway", "track"}}).index == 1);
    CHECK(categorize({{"highway", "residential"}}).index == 3);
    CHECK(categorize({{"highway", "primary"}}).index == 4);

    CHECK(categorize({{"highway", "primary"}, {"cycleway", "none"}}).index == 4);
    CHECK(categorize({{"highway", "primary"}, {"cycleway", "None "}}).index == 4);
    CHECK(categorize({{"highway", "living_street"}, {"cycleway:left", "none"}}).index == 3);
    CHECK(categorize({{"highway", "track"}}).index == 3);
    CHECK(categorize({{"highway", "bridleway"}}).index == 3);
    CHECK(categorize({{"highway", "primary"}, {"cycleway:right", "lane"}}).index == 2);
    CHECK(categorize({{"highway", "primary"}, {"cycleway:left:bicycle", "yes"}}).index == 2);
    // separated through either key
    CHECK(categorize({{"highway", "residential"}, {"bicycle_road", "yes"}}).index == 1);
    CHECK(categorize({{"highway", "cycleway"}, {"bicycle", "Designated"}}).index == 1);
    // a cycleway key with a non-separating value
    CHECK(categorize({{"highway", "residential"}, {"bicycle", "dismount"}}).index == 2);
  }

  TEST_CASE("categorize partitions inputs into four stable branches") {
    const std::vector<std::string> highways{"residential", "primary", "path", "track", "secondary"};
    const std::vector<std::string> values{"", "none", "yes", "designated", "lane"};
    for (const auto& h : highways) {
      for (const auto& b : values) {
        for (const auto& c : values) {
          TagMap tags{{"highway", h}};
          if (!b.empty()) tags["bicycle"] = b;
          if (!c.empty()) tags["cycleway"] = c;
          const int first = categorize(tags).index;
          CHECK(first >= 1);
          CHECK(first <= 4);
          CHECK(categorize(tags).index == first);
        }
      }
    }
  }

  TEST_CASE("rule overrides from JSON") {
    const TagRules rules = TagRules::from_json(
        {{"quiet_highways", {"residential", "tertiary"}}, {"excluded_highways", {"primary"}}});
    CHECK(categorize({{"highway", "tertiary"}}, rules).index == 3);
    CHECK(categorize({{"highway", "tertiary"}}).index == 4);
    CHECK_FALSE(bike_filter({{"highway", "primary"}}, rules));
    CHECK(bike_filter({{"highway", "steps"}}, rules));
    CHECK_THROWS_AS(TagRules::from_json({{"quiet", {"x"}}}), ParseError);
    CHECK_THROWS_AS(TagRules::from_json({{"quiet_highways", 3}}), ParseError);
    CHECK(TagRules::from_json(TagRules{}.to_json()).cycleway_keys == TagRules{}.cycleway_keys);
  }

  TEST_CASE("build_graph directions") {
    const std::vector<RawNode> nodes{{1, 48.0, 9.0}, {2, 48.001, 9.0}, {3, 48.002, 9.0}};
    const CategoryScale scale = CategoryScale::four_level();
    SUBCASE("two-way") {
      const auto g = build_graph(nodes, {{10, {1, 2, 3}, {{"highway", "residential"}}}}, scale);
      CHECK(g.edge_count() == 4);
      CHECK(g.find_edge(2, 1)->cost.category.index == 3);
    }
    SUBCASE("oneway") {
      const auto g = build_graph(nodes, {{10, {1, 2, 3}, {{"highway", "residential"}, {"oneway", "yes"}}}}, scale);
      CHECK(g.edge_count() == 2);
      CHECK(g.find_edge(1, 2) != nullptr);
      CHECK(g.find_edge(2, 1) == nullptr);
    }
    SUBCASE("oneway with bicycle contraflow") {
      const auto g = build_graph(
          nodes,
          {{10, {1, 2, 3}, {{"highway", "residential"}, {"oneway", "yes"}, {"oneway:bicycle", "no"}}}},
          scale);
      CHECK(g.edge_count() == 4);
    }
    SUBCASE("filtered way contributes nothing") {
      const auto g = build_graph(nodes, {{10, {1, 2, 3}, {{"highway", "steps"}}}}, scale);
      CHECK(g.edge_count() == 0);
      CHECK(g.node_count() == 0);
    }
    SUBCASE("needs four categories") {
      CHECK_THROWS_AS(build_graph(nodes, {}, CategoryScale::generic(2)), DimensionError);
    }
  }

  TEST_CASE("fixture file end to end") {
    OsmData data = parse_osm_file(kFixture);
    CHECK(data.nodes.size() == 9);
    CHECK(data.ways.size() == 10);  // way 106 dropped
    CHECK(data.warnings.size() == 1);

    std::vector<std::string> warnings;
    const auto g = build_graph(data.nodes, data.ways, CategoryScale::four_level(), {}, &warnings);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("zero-length") != std::string::npos);
    CHECK_FALSE(g.has_parallel_edges());

    // 3->4 carried by the cycle lane (2) and the primary road (4): lane wins
    CHECK(g.find_edge(3, 4)->cost.category.index == 2);
    // oneway lane contributes no 4->3; only the primary remains
    CHECK(g.find_edge(4, 3)->cost.category.index == 4);
    CHECK(g.find_edge(4, 5)->cost.category.index == 1);
    CHECK(g.find_edge(1, 7)->cost.category.index == 4);
    // steps and motorway removed
    CHECK(g.find_edge(5, 6) == nullptr);
    CHECK(g.find_edge(6, 7) == nullptr);
    CHECK_FALSE(g.contains(6));
    // oneway=-1: only against the way direction
    CHECK(g.find_edge(5, 7) != nullptr);
    CHECK(g.find_edge(7, 5) == nullptr);
    for (const GraphNode& n : g.nodes()) {
      for (const GraphEdge& e : g.out_edges(n.id)) {
        CHECK(e.cost.length > 0.0);
        CHECK(e.cost.category.index >= 1);
        CHECK(e.cost.category.index <= 4);
      }
    }
  }
}
