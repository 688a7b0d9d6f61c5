#include "saferoute/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "saferoute/graph_io.hpp"
#include "saferoute/http.hpp"
#include "saferoute/osm.hpp"
#include "saferoute/service.hpp"

namespace saferoute {

namespace {

namespace fs = std::filesystem;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string osm;
  std::string config;
  std::string out_path;
  bool no_simplify = false;

  std::string graph;
  std::string from;
  std::string to;
  std::string weights;
  std::optional<double> bbox;
  std::string format = "geojson";
  std::string omegas = "1,2,4,8,16";

  std::string host = "0.0.0.0";
  std::optional<int> port;
  std::string static_dir;
  double time_budget_s = 60.0;
};

std::string fmt2(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

void require_file(const std::string& path, const char* what) {
  if (path.empty() || !fs::is_regular_file(path)) {
    throw IoError(std::string(what) + " file not found: " + path);
  }
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < warnings.size() && i < kShown; ++i) {
    err << "warning: " << warnings[i] << '\n';
  }
  if (warnings.size() > kShown) {
    err << "warning: ... " << warnings.size() - kShown << " more\n";
  }
}

int cmd_ingest(const Options& o, std::ostream& out, std::ostream& err) {
  require_file(o.osm, "OSM");
  osm::TagRules rules;
  if (!o.config.empty()) {
    require_file(o.config, "config");
    rules = osm::TagRules::load(o.config);
  }
  osm::OsmData data = osm::parse_osm_file(o.osm);
  std::vector<std::string> warnings = std::move(data.warnings);
  const RoutingGraph raw =
      osm::build_graph(data.nodes, data.ways, CategoryScale::four_level(), rules, &warnings);
  print_warnings(warnings, err);
  out << "parsed: " << data.nodes.size() << " nodes, " << data.ways.size() << " ways\n";
  out << "before simplification: " << raw.node_count() << " nodes, " << raw.edge_count()
      << " edges\n";
  if (o.no_simplify) {
    save_graph(raw, o.out_path);
  } else {
    const RoutingGraph simple = simplify(raw);
    out << "after simplification: " << simple.node_count() << " nodes, " << simple.edge_count()
        << " edges\n";
    save_graph(simple, o.out_path);
  }
  out << "wrote " << o.out_path << '\n';
  return 0;
}

void print_summary(const RouteSetSummary& s, std::ostream& err) {
  err << "summary: count=" << s.count
      << " mean_length_m=" << (s.mean_length ? fmt2(*s.mean_length) : std::string("null"))
      << " runtime_s=" << s.runtime << '\n';
}

int cmd_route(const Options& o, std::ostream& out, std::ostream& err) {
  require_file(o.graph, "graph");
  if (o.format != "geojson" && o.format != "table") {
    err << "error: --format must be geojson or table\n";
    return kExitUsage;
  }
  const RouteEngine engine(load_graph(o.graph), fs::path(o.graph).stem().string());
  const RouteQuery query{parse_point(o.from), parse_point(o.to), parse_number_list(o.weights),
                         o.bbox};
  const RouteResult result = engine.route(query);
  print_warnings(result.warnings, err);
  if (o.format == "table") {
    out << routes_to_table(result);
  } else {
    out << routes_to_geojson(result).dump() << '\n';
  }
  print_summary(result.summary, err);
  return 0;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  require_file(o.graph, "graph");
  const RoutingGraph graph = dedupe_parallel_edges(load_graph(o.graph));
  const NodeId s = nearest_node(graph, parse_point(o.from));
  const NodeId t = nearest_node(graph, parse_point(o.to));
  const std::vector<double> omegas = parse_number_list(o.omegas);
  for (double w : omegas) (void)WeightVector({w});

  err << "routing node " << s << " -> node " << t << '\n';
  out << "omega\troutes\tmean_length_m\truntime_s\n";
  for (const SweepRow& row : sweep_weights(graph, s, t, omegas)) {
    out << row.omega << '\t' << row.route_count << '\t'
        << (row.mean_length ? fmt2(*row.mean_length) : std::string("-")) << '\t' << row.seconds
        << '\n';
  }
  return 0;
}

int cmd_serve(Options o, std::ostream& out) {
  if (o.graph.empty()) {
    if (const char* env = std::getenv("GRAPH_PATH")) o.graph = env;
  }
  if (!o.port) {
    const char* env = std::getenv("PORT");
    o.port = env ? std::stoi(env) : 8080;
  }
  require_file(o.graph, "graph");
  auto engine = std::make_shared<const RouteEngine>(load_graph(o.graph),
                                                    fs::path(o.graph).stem().string());
  ServiceConfig config;
  config.time_budget = std::chrono::milliseconds(static_cast<long long>(o.time_budget_s * 1000));
  if (!o.static_dir.empty()) config.static_dir = o.static_dir;
  RouteServer server(engine, config);
  out << "serving " << o.graph << " (" << engine->graph().node_count() << " nodes) on "
      << o.host << ':' << *o.port << std::endl;
  return server.listen(o.host, *o.port) ? 0 : kExitError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pareto-optimal safe bicycle routes under ordinal edge categories", "saferoute"};
  app.require_subcommand(1);
  Options o;

  auto* ingest = app.add_subcommand("ingest", "Build a routing graph from an OSM XML extract");
  ingest->add_option("--osm", o.osm, "OSM XML file")->required();
  ingest->add_option("--config", o.config, "JSON tag-rule overrides");
  ingest->add_option("--out", o.out_path, "Output graph JSON")->required();
  ingest->add_flag("--no-simplify", o.no_simplify, "Skip pass-through node contraction");

  auto* route = app.add_subcommand("route", "Compute the Pareto set of safe routes");
  route->add_option("--graph", o.graph, "Graph JSON")->required();
  route->add_option("--from", o.from, "Start as lat,lon")->required();
  route->add_option("--to", o.to, "Target as lat,lon")->required();
  route->add_option("--weights", o.weights, "Detour weights w1,..,wK-1")->required();
  route->add_option("--bbox", o.bbox, "Half side of the square around the start, meters");
  route->add_option("--format", o.format, "geojson or table");

  auto* sweep = app.add_subcommand("sweep", "Route counts for uniform weight settings");
  sweep->add_option("--graph", o.graph, "Graph JSON")->required();
  sweep->add_option("--from", o.from, "Start as lat,lon")->required();
  sweep->add_option("--to", o.to, "Target as lat,lon")->required();
  sweep->add_option("--omegas", o.omegas, "Comma list of uniform omega values");

  auto* serve = app.add_subcommand("serve", "HTTP route service");
  serve->add_option("--graph", o.graph, "Graph JSON (default $GRAPH_PATH)");
  serve->add_option("--host", o.host, "Bind address");
  serve->add_option("--port", o.port, "Port (default $PORT or 8080)");
  serve->add_option("--static", o.static_dir, "Directory with the web UI bundle");
  serve->add_option("--time-budget", o.time_budget_s, "Per-request solve budget, seconds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(o, out, err);
    if (route->parsed()) return cmd_route(o, out, err);
    if (sweep->parsed()) return cmd_sweep(o, out, err);
    if (serve->parsed()) return cmd_serve(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace saferoute
