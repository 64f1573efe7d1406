#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hidden_ties/communities.hpp"
#include "hidden_ties/graph.hpp"
#include "hidden_ties/metrics.hpp"

namespace hidden_ties {

struct RecordRow {
  std::string actor;
  std::vector<std::string> resources;  // non-empty, deduplicated per row
  std::vector<std::pair<std::string, std::string>> attributes;  // column -> value

  friend bool operator==(const RecordRow&, const RecordRow&) = default;
};

struct RecordBatch {
  std::vector<RecordRow> rows;  // exact-duplicate-free
  std::string source;
  std::size_t dropped_rows = 0;  // filtered or empty actor/resources
  std::size_t deduped_rows = 0;  // exact duplicates collapsed
};

struct IngestConfig {
  std::string actor_column;
  std::string resource_column;
  std::optional<char> split_delimiter;  // split the resource field when set
  std::vector<std::string> filter_values = {"Missing", "Unknown", "N/A"};
  bool trim_whitespace = true;
};

// Header-first CSV (comma separated, double-quote quoting, UTF-8). Rows whose
// actor or any resource token equals a filter value (case-insensitive, whole
// trimmed field) are dropped and counted; exact duplicates collapse to one.
RecordBatch parse_csv(std::string_view bytes, const IngestConfig& config);

// One edge per distinct (actor, resource) pair; weight = number of rows
// carrying the pair. Throws "empty record set" on an empty batch.
BipartiteGraph batch_to_bipartite(const RecordBatch& batch);

enum class GraphFormat { GraphML, Dot, Json, CsvEdgeList };

// Deterministic bytes: vertices ordered by label, edges by (min label,
// max label). CsvEdgeList carries edges only (isolated vertices are dropped
// by the format); Json is lossless.
std::string write_graph(const UnipartiteGraph& g, GraphFormat format);
std::string write_graph(const BipartiteGraph& g, GraphFormat format);

// Json reconstructs either kind (per its "kind" field); CsvEdgeList always
// yields a unipartite graph. Schema violations carry a JSON-pointer-ish path
// or a line number.
std::variant<UnipartiteGraph, BipartiteGraph> read_graph(std::string_view bytes,
                                                         GraphFormat format);

enum class ReportFormat { Json, Csv };

// Csv renders the classic table view: label,degree,betweenness,closeness,
// eigenvector with the chosen variants, values rounded to 3 decimals;
// extended appends every stored column. Json carries all fields at full
// precision.
std::string write_report(const MetricsReport& report, ReportFormat format,
                         Variant closeness_variant = Variant::Raw,
                         Variant betweenness_variant = Variant::Raw,
                         bool extended = false);

// min_size suppresses smaller communities from the listing; the assignments
// mapping stays total.
std::string write_report(const Partition& partition, const UnipartiteGraph& g,
                         ReportFormat format, std::size_t min_size = 1);

std::string write_report(const CliqueReport& report, const UnipartiteGraph& g,
                         ReportFormat format);

}  // namespace hidden_ties
