#include <charconv>
#include <cstring>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <unordered_set>

#include <expat.h>

#include "saferoute/error.hpp"
#include "saferoute/osm.hpp"

namespace saferoute::osm {

namespace {

class ExpatParser {
 public:
  ExpatParser() : parser_(XML_ParserCreate("UTF-8")) {
    if (parser_ == nullptr) throw Error("could not create XML parser");
  }
  ~ExpatParser() { XML_ParserFree(parser_); }
  ExpatParser(const ExpatParser&) = delete;
  ExpatParser& operator=(const ExpatParser&) = delete;

  XML_Parser get() const noexcept { return parser_; }

 private:
  XML_Parser parser_;
};

struct ParseState {
  XML_Parser parser = nullptr;
  OsmData data;
  int depth = 0;
  bool saw_root = false;
  std::optional<RawWay> way;
  std::optional<ParseError> error;

  std::size_t offset() const {
    const XML_Index i = XML_GetCurrentByteIndex(parser);
    return i < 0 ? 0 : static_cast<std::size_t>(i);
  }

  void fail(const std::string& message) {
    if (!error) error.emplace(message, offset());
    XML_StopParser(parser, XML_FALSE);
  }
};

const char* attribute(const XML_Char** atts, const char* name) {
  for (int i = 0; atts[i] != nullptr; i += 2) {
    if (std::strcmp(atts[i], name) == 0) return atts[i + 1];
  }
  return nullptr;
}

template <typename T>
std::optional<T> number(const char* text) {
  if (text == nullptr) return std::nullopt;
  T value{};
  const char* end = text + std::strlen(text);
  const auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

void on_start(void* user, const XML_Char* name, const XML_Char** atts) {
  auto& st = *static_cast<ParseState*>(user);
  ++st.depth;
  if (st.depth == 1) {
    if (std::strcmp(name, "osm") != 0) st.fail(std::string("root element is <") + name + ">, expected <osm>");
    st.saw_root = true;
    return;
  }
  if (st.depth == 2 && std::strcmp(name, "node") == 0) {
    const auto id = number<std::int64_t>(attribute(atts, "id"));
    const auto lat = number<double>(attribute(atts, "lat"));
    const auto lon = number<double>(attribute(atts, "lon"));
    if (!id || !lat || !lon) return st.fail("<node> needs numeric id, lat and lon");
    if (!is_valid(GeoPoint{*lat, *lon})) {
      return st.fail("node " + std::to_string(*id) + " has out-of-range coordinates");
    }
    st.data.nodes.push_back({*id, *lat, *lon});
  } else if (st.depth == 2 && std::strcmp(name, "way") == 0) {
    const auto id = number<std::int64_t>(attribute(atts, "id"));
    if (!id) return st.fail("<way> needs a numeric id");
    st.way.emplace();
    st.way->id = *id;
  } else if (st.depth == 3 && st.way && std::strcmp(name, "nd") == 0) {
    const auto ref = number<std::int64_t>(attribute(atts, "ref"));
    if (!ref) return st.fail("<nd> needs a numeric ref");
    st.way->node_refs.push_back(*ref);
  } else if (st.depth == 3 && st.way && std::strcmp(name, "tag") == 0) {
    const char* k = attribute(atts, "k");
    const char* v = attribute(atts, "v");
    if (k == nullptr || v == nullptr) return st.fail("<tag> needs k and v");
    st.way->tags.insert_or_assign(k, v);
  }
}

void on_end(void* user, const XML_Char* name) {
  auto& st = *static_cast<ParseState*>(user);
  if (st.depth == 2 && st.way && std::strcmp(name, "way") == 0) {
    st.data.ways.push_back(std::move(*st.way));
    st.way.reset();
  }
  --st.depth;
}

void drop_broken_ways(OsmData& data) {
  std::unordered_set<std::int64_t> known;
  known.reserve(data.nodes.size());
  for (const RawNode& n : data.nodes) known.insert(n.id);

  std::vector<RawWay> kept;
  kept.reserve(data.ways.size());
  for (RawWay& w : data.ways) {
    if (w.node_refs.size() < 2) {
      data.warnings.push_back("way " + std::to_string(w.id) + " has fewer than 2 nodes, dropped");
      continue;
    }
    bool dangling = false;
    for (std::int64_t ref : w.node_refs) {
      if (!known.contains(ref)) {
        data.warnings.push_back("way " + std::to_string(w.id) + " references missing node " +
                                std::to_string(ref) + ", dropped");
        dangling = true;
        break;
      }
    }
    if (!dangling) kept.push_back(std::move(w));
  }
  data.ways = std::move(kept);
}

}  // namespace

OsmData parse_osm_xml(std::string_view document) {
  ExpatParser parser;
  ParseState state;
  state.parser = parser.get();
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), on_start, on_end);

  if (document.size() > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
    throw TooLarge("OSM document exceeds 2 GiB");
  }
  const XML_Status status =
      XML_Parse(parser.get(), document.data(), static_cast<int>(document.size()), XML_TRUE);
  if (state.error) throw *state.error;
  if (status != XML_STATUS_OK) {
    throw ParseError(std::string("malformed XML: ") + XML_ErrorString(XML_GetErrorCode(parser.get())),
                     state.offset());
  }
  if (!state.saw_root) throw ParseError("document has no <osm> root", 0);

  drop_broken_ways(state.data);
  return std::move(state.data);
}

OsmData parse_osm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_osm_xml(buffer.str());
}

}  // namespace saferoute::osm
