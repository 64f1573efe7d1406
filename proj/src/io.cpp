#include "hidden_ties/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

#include <json.hpp>

#include "hidden_ties/error.hpp"

namespace hidden_ties {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

std::string format_fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

// fixed 3 decimals with trailing zeros trimmed: 15.000 -> "15", 7.500 -> "7.5"
std::string format_trimmed(double value) {
  std::string s = format_fixed(value, 3);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// --- CSV low-level parsing (RFC 4180 style) ---

struct CsvRow {
  std::size_t line;  // physical line the row starts on
  std::vector<std::string> fields;
};

std::vector<CsvRow> parse_csv_rows(std::string_view bytes) {
  std::vector<CsvRow> rows;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool any = false;
  std::size_t line = 1;
  std::size_t row_line = 1;

  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    rows.push_back({row_line, std::move(fields)});
    fields.clear();
    any = false;
  };

  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const char c = bytes[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < bytes.size() && bytes[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field.empty())
          quoted = true;
        else
          field += c;  // interior quote, keep literally
        any = true;
        break;
      case ',':
        end_field();
        any = true;
        break;
      case '\r':
        break;
      case '\n':
        if (any || !field.empty() || !fields.empty()) end_row();
        ++line;
        row_line = line;
        break;
      default:
        field += c;
        any = true;
        break;
    }
  }
  if (quoted)
    throw input_error("line " + std::to_string(row_line) + ": unterminated quote");
  if (any || !field.empty() || !fields.empty()) end_row();
  return rows;
}

}  // namespace

RecordBatch parse_csv(std::string_view bytes, const IngestConfig& config) {
  if (config.actor_column == config.resource_column)
    throw usage_error("actor and resource columns must differ");

  const auto rows = parse_csv_rows(bytes);
  if (rows.empty()) throw input_error("missing header row");

  const auto& header = rows.front().fields;
  auto column_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (trim(header[i]) == name) return i;
    throw input_error("missing column: " + name);
  };
  const std::size_t actor_col = column_of(config.actor_column);
  const std::size_t resource_col = column_of(config.resource_column);

  auto clean = [&](std::string_view s) {
    return config.trim_whitespace ? trim(s) : std::string(s);
  };
  auto filtered = [&](const std::string& value) {
    return std::any_of(config.filter_values.begin(), config.filter_values.end(),
                       [&](const std::string& f) { return iequals(value, f); });
  };

  RecordBatch batch;
  std::set<std::string> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& [line, fields] = rows[r];
    if (fields.size() != header.size())
      throw input_error("line " + std::to_string(line) + ": expected " +
                        std::to_string(header.size()) + " fields, got " +
                        std::to_string(fields.size()));

    RecordRow row;
    row.actor = clean(fields[actor_col]);

    std::vector<std::string> tokens;
    if (config.split_delimiter) {
      std::string_view rest = fields[resource_col];
      while (true) {
        const std::size_t cut = rest.find(*config.split_delimiter);
        tokens.push_back(clean(rest.substr(0, cut)));
        if (cut == std::string_view::npos) break;
        rest = rest.substr(cut + 1);
      }
    } else {
      tokens.push_back(clean(fields[resource_col]));
    }
    for (const auto& token : tokens) {
      if (token.empty()) continue;
      if (std::find(row.resources.begin(), row.resources.end(), token) ==
          row.resources.end())
        row.resources.push_back(token);
    }

    for (std::size_t i = 0; i < header.size(); ++i)
      if (i != actor_col && i != resource_col)
        row.attributes.emplace_back(trim(header[i]), clean(fields[i]));

    const bool droppable =
        row.actor.empty() || row.resources.empty() || filtered(row.actor) ||
        std::any_of(row.resources.begin(), row.resources.end(), filtered);
    if (droppable) {
      ++batch.dropped_rows;
      continue;
    }

    // exact-duplicate detection over the full row
    std::string key = row.actor;
    for (const auto& t : row.resources) key += '\x1f' + t;
    for (const auto& [k, v] : row.attributes) key += '\x1e' + k + '\x1f' + v;
    if (!seen.insert(key).second) {
      ++batch.deduped_rows;
      continue;
    }
    batch.rows.push_back(std::move(row));
  }
  return batch;
}

BipartiteGraph batch_to_bipartite(const RecordBatch& batch) {
  if (batch.rows.empty()) throw input_error("empty record set");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& row : batch.rows)
    for (const auto& resource : row.resources)
      pairs.emplace_back(row.actor, resource);
  return build_bipartite(pairs);
}

namespace {

// serialization order: vertices by label; edges by (min label, max label)

struct EdgeView {
  std::string source;
  std::string target;
  std::uint32_t weight;
};

std::vector<std::size_t> label_order(const std::vector<std::string>& labels) {
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  return order;
}

std::vector<EdgeView> edge_views(const UnipartiteGraph& g) {
  std::vector<EdgeView> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    std::string a = g.label(e.u), b = g.label(e.v);
    if (b < a) std::swap(a, b);
    out.push_back({std::move(a), std::move(b), e.weight});
  }
  std::sort(out.begin(), out.end(), [](const EdgeView& a, const EdgeView& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  return out;
}

std::vector<EdgeView> edge_views(const BipartiteGraph& g) {
  std::vector<EdgeView> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges())
    out.push_back({g.actor_label(e.actor), g.resource_label(e.resource), e.weight});
  std::sort(out.begin(), out.end(), [](const EdgeView& a, const EdgeView& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  return out;
}

struct VertexView {
  std::string label;
  const char* part;  // nullptr for unipartite
};

std::vector<VertexView> vertex_views(const UnipartiteGraph& g) {
  std::vector<std::string> labels;
  labels.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
  std::vector<VertexView> out;
  for (std::size_t i : label_order(labels)) out.push_back({labels[i], nullptr});
  return out;
}

std::vector<VertexView> vertex_views(const BipartiteGraph& g) {
  std::vector<VertexView> out;
  out.reserve(g.actor_count() + g.resource_count());
  for (VertexId a = 0; a < g.actor_count(); ++a)
    out.push_back({g.actor_label(a), "actor"});
  for (VertexId r = 0; r < g.resource_count(); ++r)
    out.push_back({g.resource_label(r), "resource"});
  std::stable_sort(out.begin(), out.end(),
                   [](const VertexView& a, const VertexView& b) {
                     return a.label < b.label;  // ties keep actors first
                   });
  return out;
}

std::string render_json(const char* kind, const std::vector<VertexView>& vertices,
                        const std::vector<EdgeView>& edges) {
  ordered_json doc;
  doc["kind"] = kind;
  doc["vertices"] = ordered_json::array();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    ordered_json v;
    v["id"] = i;
    v["label"] = vertices[i].label;
    if (vertices[i].part) v["part"] = vertices[i].part;
    doc["vertices"].push_back(std::move(v));
  }
  doc["edges"] = ordered_json::array();
  for (const auto& e : edges) {
    ordered_json j;
    j["source"] = e.source;
    j["target"] = e.target;
    j["weight"] = e.weight;
    doc["edges"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::string render_graphml(bool bipartite, const std::vector<VertexView>& vertices,
                           const std::vector<EdgeView>& edges) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n";
  if (bipartite)
    out += "  <key id=\"part\" for=\"node\" attr.name=\"part\" attr.type=\"string\"/>\n";
  out +=
      "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
      "  <graph id=\"G\" edgedefault=\"undirected\">\n";

  std::unordered_map<std::string, std::size_t> node_id;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    // bipartite labels may collide across parts; qualify the map key by part
    const std::string key =
        vertices[i].part ? std::string(vertices[i].part) + "\x1f" + vertices[i].label
                         : vertices[i].label;
    node_id[key] = i;
    out += "    <node id=\"n" + std::to_string(i) + "\"><data key=\"label\">" +
           xml_escape(vertices[i].label) + "</data>";
    if (vertices[i].part)
      out += "<data key=\"part\">" + std::string(vertices[i].part) + "</data>";
    out += "</node>\n";
  }
  for (const auto& e : edges) {
    const std::size_t s =
        node_id.at(bipartite ? "actor\x1f" + e.source : e.source);
    const std::size_t t =
        node_id.at(bipartite ? "resource\x1f" + e.target : e.target);
    out += "    <edge source=\"n" + std::to_string(s) + "\" target=\"n" +
           std::to_string(t) + "\"><data key=\"weight\">" + std::to_string(e.weight) +
           "</data></edge>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

std::string render_dot(bool bipartite, const std::vector<VertexView>& vertices,
                       const std::vector<EdgeView>& edges) {
  std::string out = "graph G {\n";
  for (const auto& v : vertices) {
    out += "  \"" + dot_escape(v.label) + "\"";
    if (bipartite) out += std::string(" [part=") + v.part + "]";
    out += ";\n";
  }
  for (const auto& e : edges)
    out += "  \"" + dot_escape(e.source) + "\" -- \"" + dot_escape(e.target) +
           "\" [weight=" + std::to_string(e.weight) + "];\n";
  out += "}\n";
  return out;
}

std::string render_csv(const std::vector<EdgeView>& edges) {
  std::string out = "source,target,weight\n";
  for (const auto& e : edges)
    out += csv_escape(e.source) + "," + csv_escape(e.target) + "," +
           std::to_string(e.weight) + "\n";
  return out;
}

}  // namespace

std::string write_graph(const UnipartiteGraph& g, GraphFormat format) {
  const auto vertices = vertex_views(g);
  const auto edges = edge_views(g);
  switch (format) {
    case GraphFormat::Json: return render_json("unipartite", vertices, edges);
    case GraphFormat::GraphML: return render_graphml(false, vertices, edges);
    case GraphFormat::Dot: return render_dot(false, vertices, edges);
    case GraphFormat::CsvEdgeList: return render_csv(edges);
  }
  throw internal_error("unhandled graph format");
}

std::string write_graph(const BipartiteGraph& g, GraphFormat format) {
  const auto vertices = vertex_views(g);
  const auto edges = edge_views(g);
  switch (format) {
    case GraphFormat::Json: return render_json("bipartite", vertices, edges);
    case GraphFormat::GraphML: return render_graphml(true, vertices, edges);
    case GraphFormat::Dot: return render_dot(true, vertices, edges);
    case GraphFormat::CsvEdgeList: return render_csv(edges);
  }
  throw internal_error("unhandled graph format");
}

namespace {

std::uint32_t parse_weight_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0 ||
      j.get<std::uint64_t>() > UINT32_MAX)
    throw input_error("at " + where + ": expected positive integer weight");
  return j.get<std::uint32_t>();
}

std::string string_at(const nlohmann::json& obj, const char* field,
                      const std::string& where) {
  if (!obj.contains(field) || !obj[field].is_string() ||
      obj[field].get<std::string>().empty())
    throw input_error("at " + where + "/" + field + ": expected non-empty string");
  return obj[field].get<std::string>();
}

std::variant<UnipartiteGraph, BipartiteGraph> read_graph_json(std::string_view bytes) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw input_error("at /kind: expected \"unipartite\" or \"bipartite\"");
  const std::string kind = doc["kind"].get<std::string>();
  if (kind != "unipartite" && kind != "bipartite")
    throw input_error("at /kind: expected \"unipartite\" or \"bipartite\"");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw input_error("at /vertices: expected array");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw input_error("at /edges: expected array");

  if (kind == "unipartite") {
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexId> ids;
    std::size_t i = 0;
    for (const auto& v : doc["vertices"]) {
      const std::string where = "/vertices/" + std::to_string(i++);
      const std::string label = string_at(v, "label", where);
      if (!ids.emplace(label, labels.size()).second)
        throw input_error("at " + where + "/label: duplicate label");
      labels.push_back(label);
    }
    std::vector<WeightedEdge> edges;
    i = 0;
    for (const auto& e : doc["edges"]) {
      const std::string where = "/edges/" + std::to_string(i++);
      const std::string source = string_at(e, "source", where);
      const std::string target = string_at(e, "target", where);
      if (!e.contains("weight"))
        throw input_error("at " + where + "/weight: expected positive integer weight");
      const auto su = ids.find(source);
      const auto tu = ids.find(target);
      if (su == ids.end())
        throw input_error("at " + where + "/source: unknown label " + source);
      if (tu == ids.end())
        throw input_error("at " + where + "/target: unknown label " + target);
      edges.push_back({su->second, tu->second, parse_weight_json(e["weight"], where + "/weight")});
    }
    return UnipartiteGraph(std::move(labels), std::move(edges));
  }

  std::vector<std::string> actors, resources;
  std::unordered_map<std::string, VertexId> actor_ids, resource_ids;
  std::size_t i = 0;
  for (const auto& v : doc["vertices"]) {
    const std::string where = "/vertices/" + std::to_string(i++);
    const std::string label = string_at(v, "label", where);
    const std::string part = string_at(v, "part", where);
    if (part == "actor") {
      if (!actor_ids.emplace(label, actors.size()).second)
        throw input_error("at " + where + "/label: duplicate label");
      actors.push_back(label);
    } else if (part == "resource") {
      if (!resource_ids.emplace(label, resources.size()).second)
        throw input_error("at " + where + "/label: duplicate label");
      resources.push_back(label);
    } else {
      throw input_error("at " + where + "/part: expected \"actor\" or \"resource\"");
    }
  }
  std::vector<BipartiteEdge> edges;
  i = 0;
  for (const auto& e : doc["edges"]) {
    const std::string where = "/edges/" + std::to_string(i++);
    const std::string source = string_at(e, "source", where);
    const std::string target = string_at(e, "target", where);
    if (!e.contains("weight"))
      throw input_error("at " + where + "/weight: expected positive integer weight");
    const auto a = actor_ids.find(source);
    const auto r = resource_ids.find(target);
    if (a == actor_ids.end())
      throw input_error("at " + where + "/source: unknown actor " + source);
    if (r == resource_ids.end())
      throw input_error("at " + where + "/target: unknown resource " + target);
    edges.push_back({a->second, r->second, parse_weight_json(e["weight"], where + "/weight")});
  }
  return BipartiteGraph(std::move(actors), std::move(resources), std::move(edges));
}

UnipartiteGraph read_graph_csv(std::string_view bytes) {
  const auto rows = parse_csv_rows(bytes);
  if (rows.empty() || rows.front().fields.size() != 3 ||
      trim(rows.front().fields[0]) != "source" ||
      trim(rows.front().fields[1]) != "target" ||
      trim(rows.front().fields[2]) != "weight")
    throw input_error("line 1: expected header source,target,weight");

  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::vector<WeightedEdge> edges;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& [line, fields] = rows[r];
    if (fields.size() != 3)
      throw input_error("line " + std::to_string(line) + ": expected 3 fields, got " +
                        std::to_string(fields.size()));
    const std::string source = trim(fields[0]);
    const std::string target = trim(fields[1]);
    const std::string weight_text = trim(fields[2]);
    if (source.empty() || target.empty())
      throw input_error("line " + std::to_string(line) + ": empty label");
    char* end = nullptr;
    const unsigned long w = std::strtoul(weight_text.c_str(), &end, 10);
    if (weight_text.empty() || *end != '\0' || w == 0 || w > UINT32_MAX)
      throw input_error("line " + std::to_string(line) + ": invalid weight");
    edges.push_back({intern(source), intern(target), static_cast<std::uint32_t>(w)});
  }
  return UnipartiteGraph(std::move(labels), std::move(edges));
}

}  // namespace

std::variant<UnipartiteGraph, BipartiteGraph> read_graph(std::string_view bytes,
                                                         GraphFormat format) {
  switch (format) {
    case GraphFormat::Json: return read_graph_json(bytes);
    case GraphFormat::CsvEdgeList: return read_graph_csv(bytes);
    default: throw usage_error("only json and csv edge lists can be read");
  }
}

std::string write_report(const MetricsReport& report, ReportFormat format,
                         Variant closeness_variant, Variant betweenness_variant,
                         bool extended) {
  if (format == ReportFormat::Csv) {
    std::string out;
    if (!extended) {
      out = "label,degree,betweenness,closeness,eigenvector\n";
      for (const auto& row : report.vertices) {
        const double b = betweenness_variant == Variant::Raw ? row.betweenness_raw
                                                             : row.betweenness_normalized;
        const double c = closeness_variant == Variant::Raw ? row.closeness_raw
                                                           : row.closeness_normalized;
        out += csv_escape(row.label) + "," + std::to_string(row.degree) + "," +
               format_trimmed(b) + "," + format_fixed(c, 3) + "," +
               format_fixed(row.eigenvector, 3) + "\n";
      }
      return out;
    }
    out =
        "label,degree,degree_centrality,betweenness_raw,betweenness_normalized,"
        "closeness_raw,closeness_normalized,eigenvector,local_clustering\n";
    for (const auto& row : report.vertices)
      out += csv_escape(row.label) + "," + std::to_string(row.degree) + "," +
             format_fixed(row.degree_centrality, 3) + "," +
             format_trimmed(row.betweenness_raw) + "," +
             format_fixed(row.betweenness_normalized, 3) + "," +
             format_fixed(row.closeness_raw, 3) + "," +
             format_fixed(row.closeness_normalized, 3) + "," +
             format_fixed(row.eigenvector, 3) + "," +
             format_fixed(row.local_clustering, 3) + "\n";
    return out;
  }

  ordered_json doc;
  ordered_json agg;
  agg["vertices"] = report.aggregates.vertex_count;
  agg["edges"] = report.aggregates.edge_count;
  if (report.aggregates.density)
    agg["density"] = *report.aggregates.density;
  else
    agg["density"] = nullptr;
  agg["diameter"] = report.aggregates.diameter;
  agg["average_geodesic"] = report.aggregates.average_geodesic;
  agg["connectivity"] = report.aggregates.connectivity;
  if (report.aggregates.degree_centralization)
    agg["degree_centralization"] = *report.aggregates.degree_centralization;
  else
    agg["degree_centralization"] = nullptr;
  ordered_json dist;
  for (const auto& [degree, fraction] : report.aggregates.degree_distribution)
    dist[std::to_string(degree)] = fraction;
  agg["degree_distribution"] = std::move(dist);
  doc["aggregates"] = std::move(agg);

  doc["vertices"] = ordered_json::array();
  for (const auto& row : report.vertices) {
    ordered_json v;
    v["label"] = row.label;
    v["degree"] = row.degree;
    v["degree_centrality"] = row.degree_centrality;
    v["closeness_raw"] = row.closeness_raw;
    v["closeness_normalized"] = row.closeness_normalized;
    v["betweenness_raw"] = row.betweenness_raw;
    v["betweenness_normalized"] = row.betweenness_normalized;
    v["eigenvector"] = row.eigenvector;
    v["local_clustering"] = row.local_clustering;
    doc["vertices"].push_back(std::move(v));
  }
  return doc.dump(2) + "\n";
}

std::string write_report(const Partition& partition, const UnipartiteGraph& g,
                         ReportFormat format, std::size_t min_size) {
  if (format == ReportFormat::Csv) {
    std::string out = "label,community\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      out += csv_escape(g.label(v)) + "," + std::to_string(partition.assignments[v]) + "\n";
    return out;
  }

  const auto groups = partition.groups();
  ordered_json doc;
  doc["modularity"] = partition.modularity;
  doc["community_count"] = groups.size();
  doc["communities"] = ordered_json::array();
  for (std::size_t c = 0; c < groups.size(); ++c) {
    if (groups[c].size() < min_size) continue;
    ordered_json community;
    community["id"] = c;
    community["size"] = groups[c].size();
    community["members"] = ordered_json::array();
    for (VertexId v : groups[c]) community["members"].push_back(g.label(v));
    doc["communities"].push_back(std::move(community));
  }
  ordered_json assignments;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    assignments[g.label(v)] = partition.assignments[v];
  doc["assignments"] = std::move(assignments);
  return doc.dump(2) + "\n";
}

std::string write_report(const CliqueReport& report, const UnipartiteGraph& g,
                         ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::string out = "k,count\n";
    for (const auto& [k, count] : report.counts)
      out += std::to_string(k) + "," + std::to_string(count) + "\n";
    return out;
  }

  ordered_json doc;
  ordered_json counts;
  for (const auto& [k, count] : report.counts) counts[std::to_string(k)] = count;
  doc["counts"] = std::move(counts);
  doc["total"] = report.total();
  doc["max_clique_size"] = report.max_clique_size;
  doc["max_clique_count"] = report.max_clique_count;
  doc["maximal_cliques"] = ordered_json::array();
  for (const auto& clique : report.maximal_cliques) {
    ordered_json members = ordered_json::array();
    for (VertexId v : clique) members.push_back(g.label(v));
    doc["maximal_cliques"].push_back(std::move(members));
  }
  return doc.dump(2) + "\n";
}

}  // namespace hidden_ties
