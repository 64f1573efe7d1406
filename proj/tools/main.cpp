// hidden-ties: infer ties among actors that never appear directly linked.
// Batch pipeline: ingest tabular records into a bipartite actor-resource
// graph, project one side, then measure centralities, communities, cliques
// and egocentric subgraphs. Deterministic output, files as the interchange
// medium.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hidden_ties/error.hpp"
#include "hidden_ties/graph.hpp"
#include "hidden_ties/io.hpp"
#include "hidden_ties/metrics.hpp"
#include "hidden_ties/projection.hpp"

namespace ht = hidden_ties;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ht::input_error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw ht::input_error("cannot open output file: " + out_path);
  file << payload;
  if (!file) throw ht::input_error("cannot write output file: " + out_path);
}

void diag(const std::string& line) { std::cerr << line << "\n"; }

ht::GraphFormat graph_format(const std::string& name) {
  if (name == "json") return ht::GraphFormat::Json;
  if (name == "graphml") return ht::GraphFormat::GraphML;
  if (name == "dot") return ht::GraphFormat::Dot;
  if (name == "csv") return ht::GraphFormat::CsvEdgeList;
  throw ht::usage_error("unknown format: " + name);
}

// graph files are JSON or CSV edge lists; sniff by the first byte
std::variant<ht::UnipartiteGraph, ht::BipartiteGraph> load_graph(
    const std::string& path) {
  const std::string bytes = read_input(path);
  const std::size_t first = bytes.find_first_not_of(" \t\r\n");
  const bool looks_json = first != std::string::npos && bytes[first] == '{';
  return ht::read_graph(bytes, looks_json ? ht::GraphFormat::Json
                                          : ht::GraphFormat::CsvEdgeList);
}

ht::UnipartiteGraph load_unipartite(const std::string& path) {
  auto graph = load_graph(path);
  if (std::holds_alternative<ht::BipartiteGraph>(graph))
    throw ht::input_error("expected a unipartite graph; run 'project' first");
  return std::get<ht::UnipartiteGraph>(std::move(graph));
}

ht::BipartiteGraph load_bipartite(const std::string& path) {
  auto graph = load_graph(path);
  if (std::holds_alternative<ht::UnipartiteGraph>(graph))
    throw ht::input_error("expected a bipartite graph; run 'ingest' first");
  return std::get<ht::BipartiteGraph>(std::move(graph));
}

std::string format_double(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

struct IngestArgs {
  std::string input, out, format = "json";
  std::string actor_col, resource_col, split_delim;
  std::vector<std::string> filters;
  bool no_default_filters = false;
  bool no_trim = false;
};

int cmd_ingest(const IngestArgs& args) {
  ht::IngestConfig config;
  config.actor_column = args.actor_col;
  config.resource_column = args.resource_col;
  if (!args.split_delim.empty()) {
    if (args.split_delim.size() != 1)
      throw ht::usage_error("--split-delim takes a single character");
    config.split_delimiter = args.split_delim[0];
  }
  if (args.no_default_filters) config.filter_values.clear();
  for (const auto& f : args.filters) config.filter_values.push_back(f);
  config.trim_whitespace = !args.no_trim;

  ht::RecordBatch batch = ht::parse_csv(read_input(args.input), config);
  batch.source = args.input;
  const ht::BipartiteGraph graph = ht::batch_to_bipartite(batch);
  write_output(args.out, ht::write_graph(graph, graph_format(args.format)));
  diag("actors=" + std::to_string(graph.actor_count()) +
       " resources=" + std::to_string(graph.resource_count()) +
       " edges=" + std::to_string(graph.edge_count()) +
       " dropped_rows=" + std::to_string(batch.dropped_rows) +
       " deduped_rows=" + std::to_string(batch.deduped_rows));
  return 0;
}

struct ProjectArgs {
  std::string input, out, format = "json", side;
};

int cmd_project(const ProjectArgs& args) {
  const ht::BipartiteGraph graph = load_bipartite(args.input);
  const ht::ProjectionSide side = args.side == "actors"
                                      ? ht::ProjectionSide::Actors
                                      : ht::ProjectionSide::Resources;
  const ht::UnipartiteGraph projected = ht::project(graph, side);
  write_output(args.out, ht::write_graph(projected, graph_format(args.format)));
  diag("vertices=" + std::to_string(projected.vertex_count()) +
       " edges=" + std::to_string(projected.edge_count()) +
       " components=" + std::to_string(ht::connected_components(projected).count()));
  return 0;
}

struct MetricsArgs {
  std::string input, out, format = "json", component = "largest";
  std::string closeness = "raw", betweenness = "raw";
  bool extended = false;
};

std::string aggregates_summary(const ht::NetworkAggregates& agg) {
  return "vertices=" + std::to_string(agg.vertex_count) +
         " edges=" + std::to_string(agg.edge_count) +
         " diameter=" + std::to_string(agg.diameter) +
         " avg_geodesic=" + format_double(agg.average_geodesic, 4) +
         " density=" + (agg.density ? format_double(*agg.density, 4) : "n/a");
}

int cmd_metrics(const MetricsArgs& args) {
  const ht::UnipartiteGraph graph = load_unipartite(args.input);
  if (graph.vertex_count() == 0) throw ht::input_error("empty graph");
  const ht::Variant closeness_variant =
      args.closeness == "raw" ? ht::Variant::Raw : ht::Variant::Normalized;
  const ht::Variant betweenness_variant =
      args.betweenness == "raw" ? ht::Variant::Raw : ht::Variant::Normalized;
  const ht::ReportFormat format =
      args.format == "csv" ? ht::ReportFormat::Csv : ht::ReportFormat::Json;

  const auto decomposition = ht::connected_components(graph);
  auto component_graph = [&](std::size_t index) {
    std::vector<ht::VertexId> keep;
    for (ht::VertexId v = 0; v < graph.vertex_count(); ++v)
      if (decomposition.assignments[v] == index) keep.push_back(v);
    return ht::induced_subgraph(graph, keep);
  };

  std::vector<std::size_t> selected;
  if (args.component == "largest") {
    selected.push_back(0);
  } else if (args.component == "all") {
    for (std::size_t c = 0; c < decomposition.count(); ++c) selected.push_back(c);
  } else {
    std::size_t index = 0;
    try {
      index = std::stoul(args.component);
    } catch (...) {
      throw ht::usage_error("--component expects largest, all, or an index");
    }
    if (index >= decomposition.count())
      throw ht::usage_error("component index out of range (have " +
                            std::to_string(decomposition.count()) + ")");
    selected.push_back(index);
  }

  std::string payload;
  bool json_many = format == ht::ReportFormat::Json && selected.size() > 1;
  std::vector<std::string> parts;
  for (std::size_t index : selected) {
    const ht::UnipartiteGraph component = component_graph(index);
    const ht::MetricsReport report = ht::aggregate_report(component);
    parts.push_back(ht::write_report(report, format, closeness_variant,
                                     betweenness_variant, args.extended));
    diag("component=" + std::to_string(index) + " " +
         aggregates_summary(report.aggregates));
  }
  if (json_many) {
    payload = "[\n";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      // each part is a dumped object ending in a newline
      std::string part = parts[i];
      if (!part.empty() && part.back() == '\n') part.pop_back();
      payload += part;
      payload += i + 1 < parts.size() ? ",\n" : "\n";
    }
    payload += "]\n";
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (format == ht::ReportFormat::Csv && selected.size() > 1)
        payload += "# component " + std::to_string(selected[i]) + "\n";
      payload += parts[i];
    }
  }
  write_output(args.out, payload);
  return 0;
}

struct CommunitiesArgs {
  std::string input, out, format = "json", algorithm;
  std::size_t walk_length = 4;
  std::size_t min_size = 3;
};

int cmd_communities(const CommunitiesArgs& args) {
  const ht::UnipartiteGraph graph = load_unipartite(args.input);
  ht::Partition partition;
  if (args.algorithm == "gn")
    partition = ht::girvan_newman(graph);
  else if (args.algorithm == "cnm")
    partition = ht::clauset_newman_moore(graph);
  else if (args.algorithm == "wt")
    partition = ht::wakita_tsurumi(graph);
  else
    partition = ht::walktrap(graph, args.walk_length);

  const ht::ReportFormat format =
      args.format == "csv" ? ht::ReportFormat::Csv : ht::ReportFormat::Json;
  write_output(args.out, ht::write_report(partition, graph, format, args.min_size));
  diag("algorithm=" + args.algorithm +
       " communities=" + std::to_string(partition.community_count()) +
       " modularity=" + format_double(partition.modularity, 4));
  return 0;
}

struct CliquesArgs {
  std::string input, out, format = "json";
  std::size_t min_k = 3;
};

int cmd_cliques(const CliquesArgs& args) {
  const ht::UnipartiteGraph graph = load_unipartite(args.input);
  const ht::CliqueReport report = ht::clique_report(graph, args.min_k);
  const ht::ReportFormat format =
      args.format == "csv" ? ht::ReportFormat::Csv : ht::ReportFormat::Json;
  write_output(args.out, ht::write_report(report, graph, format));
  diag("total=" + std::to_string(report.total()) +
       " max_clique_size=" + std::to_string(report.max_clique_size) +
       " max_clique_count=" + std::to_string(report.max_clique_count));
  return 0;
}

struct EgoArgs {
  std::string input, out, format = "json", vertex, radius = "1.5";
  long long min_edges = -1;
};

int cmd_ego(const EgoArgs& args) {
  const ht::UnipartiteGraph graph = load_unipartite(args.input);
  const auto id = graph.find(args.vertex);
  if (!id) throw ht::usage_error("unknown vertex: " + args.vertex);
  const ht::EgoRadius radius =
      args.radius == "1" ? ht::EgoRadius::One : ht::EgoRadius::OnePointFive;
  const ht::EgoNetwork ego = ht::ego_network(graph, *id, radius);

  if (args.min_edges >= 0 &&
      ego.subgraph.edge_count() <= static_cast<std::size_t>(args.min_edges)) {
    write_output(args.out, "");
    diag("skipped");
    return 0;
  }
  write_output(args.out, ht::write_graph(ego.subgraph, graph_format(args.format)));
  diag("vertices=" + std::to_string(ego.subgraph.vertex_count()) +
       " edges=" + std::to_string(ego.subgraph.edge_count()));
  return 0;
}

struct ExportArgs {
  std::string input, out, format;
};

int cmd_export(const ExportArgs& args) {
  auto graph = load_graph(args.input);
  std::string payload;
  std::size_t vertices = 0, edges = 0;
  if (std::holds_alternative<ht::UnipartiteGraph>(graph)) {
    const auto& g = std::get<ht::UnipartiteGraph>(graph);
    payload = ht::write_graph(g, graph_format(args.format));
    vertices = g.vertex_count();
    edges = g.edge_count();
  } else {
    const auto& g = std::get<ht::BipartiteGraph>(graph);
    payload = ht::write_graph(g, graph_format(args.format));
    vertices = g.actor_count() + g.resource_count();
    edges = g.edge_count();
  }
  write_output(args.out, payload);
  diag("vertices=" + std::to_string(vertices) + " edges=" + std::to_string(edges));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hidden-ties: bipartite actor-resource networks, projections, "
               "centralities, communities and cliques"};
  app.require_subcommand(1);

  const std::vector<std::string> graph_formats = {"json", "graphml", "dot", "csv"};
  const std::vector<std::string> report_formats = {"json", "csv"};

  IngestArgs ingest;
  auto* ingest_cmd =
      app.add_subcommand("ingest", "Build a bipartite graph from tabular records");
  ingest_cmd->add_option("--input,-i", ingest.input, "CSV file ('-' for stdin)")
      ->required();
  ingest_cmd->add_option("--actor-col", ingest.actor_col, "actor column name")
      ->required();
  ingest_cmd->add_option("--resource-col", ingest.resource_col, "resource column name")
      ->required();
  ingest_cmd->add_option("--split-delim", ingest.split_delim,
                         "split the resource field on this character");
  ingest_cmd->add_option("--filter", ingest.filters,
                         "additional drop values (defaults: Missing, Unknown, N/A)");
  ingest_cmd->add_flag("--no-default-filters", ingest.no_default_filters,
                       "drop only explicitly given filter values");
  ingest_cmd->add_flag("--no-trim", ingest.no_trim, "keep surrounding whitespace");
  ingest_cmd->add_option("--out,-o", ingest.out, "output file (stdout if omitted)");
  ingest_cmd->add_option("--format", ingest.format, "json|graphml|dot|csv")
      ->check(CLI::IsMember(graph_formats));

  ProjectArgs project;
  auto* project_cmd =
      app.add_subcommand("project", "One-mode projection of a bipartite graph");
  project_cmd->add_option("--input,-i", project.input, "bipartite graph (json)")
      ->required();
  project_cmd->add_option("--side", project.side, "actors|resources")
      ->required()
      ->check(CLI::IsMember({"actors", "resources"}));
  project_cmd->add_option("--out,-o", project.out, "output file (stdout if omitted)");
  project_cmd->add_option("--format", project.format, "json|graphml|dot|csv")
      ->check(CLI::IsMember(graph_formats));

  MetricsArgs metrics;
  auto* metrics_cmd =
      app.add_subcommand("metrics", "Vertex centralities and network aggregates");
  metrics_cmd->add_option("--input,-i", metrics.input, "unipartite graph")->required();
  metrics_cmd->add_option("--component", metrics.component, "largest|all|INDEX");
  metrics_cmd->add_option("--closeness", metrics.closeness, "raw|normalized")
      ->check(CLI::IsMember({"raw", "normalized"}));
  metrics_cmd->add_option("--betweenness", metrics.betweenness, "raw|normalized")
      ->check(CLI::IsMember({"raw", "normalized"}));
  metrics_cmd->add_flag("--extended", metrics.extended, "all columns in csv output");
  metrics_cmd->add_option("--out,-o", metrics.out, "output file (stdout if omitted)");
  metrics_cmd->add_option("--format", metrics.format, "json|csv")
      ->check(CLI::IsMember(report_formats));

  CommunitiesArgs communities;
  auto* communities_cmd = app.add_subcommand("communities", "Community detection");
  communities_cmd->add_option("--input,-i", communities.input, "unipartite graph")
      ->required();
  communities_cmd->add_option("--algorithm", communities.algorithm,
                              "gn|cnm|wt|walktrap")
      ->required()
      ->check(CLI::IsMember({"gn", "cnm", "wt", "walktrap"}));
  communities_cmd->add_option("--walk-length", communities.walk_length,
                              "random walk length for walktrap")
      ->check(CLI::Range(static_cast<std::size_t>(1), static_cast<std::size_t>(64)));
  communities_cmd->add_option("--min-size", communities.min_size,
                              "smallest community to list");
  communities_cmd->add_option("--out,-o", communities.out,
                              "output file (stdout if omitted)");
  communities_cmd->add_option("--format", communities.format, "json|csv")
      ->check(CLI::IsMember(report_formats));

  CliquesArgs cliques;
  auto* cliques_cmd = app.add_subcommand("cliques", "Complete-subgraph census");
  cliques_cmd->add_option("--input,-i", cliques.input, "unipartite graph")->required();
  cliques_cmd->add_option("--min-k", cliques.min_k, "smallest clique size to count")
      ->check(CLI::Range(static_cast<std::size_t>(3), static_cast<std::size_t>(1000)));
  cliques_cmd->add_option("--out,-o", cliques.out, "output file (stdout if omitted)");
  cliques_cmd->add_option("--format", cliques.format, "json|csv")
      ->check(CLI::IsMember(report_formats));

  EgoArgs ego;
  auto* ego_cmd = app.add_subcommand("ego", "Egocentric subgraph of a vertex");
  ego_cmd->add_option("--input,-i", ego.input, "unipartite graph")->required();
  ego_cmd->add_option("--vertex", ego.vertex, "vertex label")->required();
  ego_cmd->add_option("--radius", ego.radius, "1|1.5")
      ->check(CLI::IsMember({"1", "1.5"}));
  ego_cmd->add_option("--min-edges", ego.min_edges,
                      "skip egos with at most this many edges");
  ego_cmd->add_option("--out,-o", ego.out, "output file (stdout if omitted)");
  ego_cmd->add_option("--format", ego.format, "json|graphml|dot|csv")
      ->check(CLI::IsMember(graph_formats));

  ExportArgs exports;
  auto* export_cmd = app.add_subcommand("export", "Convert a graph file");
  export_cmd->add_option("--input,-i", exports.input, "graph file")->required();
  export_cmd->add_option("--format", exports.format, "json|graphml|dot|csv")
      ->required()
      ->check(CLI::IsMember(graph_formats));
  export_cmd->add_option("--out,-o", exports.out, "output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (ingest_cmd->parsed()) return cmd_ingest(ingest);
    if (project_cmd->parsed()) return cmd_project(project);
    if (metrics_cmd->parsed()) return cmd_metrics(metrics);
    if (communities_cmd->parsed()) return cmd_communities(communities);
    if (cliques_cmd->parsed()) return cmd_cliques(cliques);
    if (ego_cmd->parsed()) return cmd_ego(ego);
    if (export_cmd->parsed()) return cmd_export(exports);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ht::exit_code_for(e);
  }
  return 0;
}
