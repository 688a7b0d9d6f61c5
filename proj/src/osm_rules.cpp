#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "saferoute/error.hpp"
#include "saferoute/osm.hpp"

namespace saferoute::osm {

using nlohmann::json;

std::string normalize_value(std::string_view v) {
  const auto first = v.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = v.find_last_not_of(" \t\r\n");
  std::string out(v.substr(first, last - first + 1));
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

namespace {

bool one_of(const std::string& value, const std::vector<std::string>& options) {
  return std::any_of(options.begin(), options.end(),
                     [&](const std::string& o) { return normalize_value(o) == value; });
}

template <typename T>
void override_from(const json& j, const char* key, T& target) {
  if (!j.contains(key)) return;
  try {
    target = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("tag rules: field '") + key + "': " + e.what(), 0);
  }
}

}  // namespace

std::string normalized_value(const TagMap& tags, std::string_view key) {
  const auto it = tags.find(key);
  return it == tags.end() ? std::string() : normalize_value(it->second);
}

TagRules TagRules::from_json(const json& j) {
  if (!j.is_object()) throw ParseError("tag rules must be a JSON object", 0);
  static const std::set<std::string> known = {
      "excluded_highways", "excluded_values",  "cycleway_keys",  "no_cycleway_value",
      "separated_keys",    "separated_values", "quiet_highways", "oneway_values",
      "reverse_oneway_values"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ParseError("tag rules: unknown field '" + key + "'", 0);
  }
  TagRules rules;
  override_from(j, "excluded_highways", rules.excluded_highways);
  override_from(j, "excluded_values", rules.excluded_values);
  override_from(j, "cycleway_keys", rules.cycleway_keys);
  override_from(j, "no_cycleway_value", rules.no_cycleway_value);
  override_from(j, "separated_keys", rules.separated_keys);
  override_from(j, "separated_values", rules.separated_values);
  override_from(j, "quiet_highways", rules.quiet_highways);
  override_from(j, "oneway_values", rules.oneway_values);
  override_from(j, "reverse_oneway_values", rules.reverse_oneway_values);
  return rules;
}

TagRules TagRules::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  try {
    return from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what(), e.byte);
  }
}

json TagRules::to_json() const {
  return {{"excluded_highways", excluded_highways},
          {"excluded_values", excluded_values},
          {"cycleway_keys", cycleway_keys},
          {"no_cycleway_value", no_cycleway_value},
          {"separated_keys", separated_keys},
          {"separated_values", separated_values},
          {"quiet_highways", quiet_highways},
          {"oneway_values", oneway_values},
          {"reverse_oneway_values", reverse_oneway_values}};
}

bool bike_filter(const TagMap& tags, const TagRules& rules) {
  if (!tags.contains("highway")) return false;
  if (one_of(normalized_value(tags, "highway"), rules.excluded_highways)) return false;
  for (const auto& [key, values] : rules.excluded_values) {
    if (tags.contains(key) && one_of(normalized_value(tags, key), values)) return false;
  }
  return true;
}

Category categorize(const TagMap& tags, const TagRules& rules) {
  const std::string none = normalize_value(rules.no_cycleway_value);
  const bool has_cycleway =
      std::any_of(rules.cycleway_keys.begin(), rules.cycleway_keys.end(), [&](const auto& key) {
        return tags.contains(key) && normalized_value(tags, key) != none;
      });
  const bool separated =
      std::any_of(rules.separated_keys.begin(), rules.separated_keys.end(), [&](const auto& key) {
        return tags.contains(key) && one_of(normalized_value(tags, key), rules.separated_values);
      });

  if (has_cycleway && separated) return Category{1};
  if (has_cycleway) return Category{2};
  if (one_of(normalized_value(tags, "highway"), rules.quiet_highways)) return Category{3};
  return Category{4};
}

}  // namespace saferoute::osm
