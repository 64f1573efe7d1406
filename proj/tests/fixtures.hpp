#pragma once

// The 14-pair fixture: 12 actors, 4 resources. Its A-projection and that
// projection's largest component are the graphs behind the reference tables.

#include <string>
#include <utility>
#include <vector>

#include "hidden_ties/graph.hpp"
#include "hidden_ties/projection.hpp"

namespace fixtures {

inline std::vector<std::pair<std::string, std::string>> bp12_pairs(
    bool prefixed = false) {
  const std::string p = prefixed ? "1_" : "";
  return {
      {p + "FactoryThree", "P1"}, {p + "ANB", "P1"},  {p + "Shijiazhuang", "P1"},
      {p + "Remy", "P1"},         {p + "CBF", "P1"},  {p + "Acdhon", "P1"},
      {p + "CBF", "P2"},          {p + "GPO", "P2"},  {p + "Brainy", "P2"},
      {p + "Brainy", "P3"},       {p + "Tman", "P3"}, {p + "China", "P4"},
      {p + "Guilin", "P4"},       {p + "Medipharco", "P4"},
  };
}

inline hidden_ties::BipartiteGraph bp12(bool prefixed = false) {
  const auto pairs = bp12_pairs(prefixed);
  return hidden_ties::build_bipartite(pairs);
}

// A-projection: the K6 component plus the GPO-Brainy-Tman tail and the
// disjoint China-Guilin-Medipharco triangle (12 vertices, 22 edges)
inline hidden_ties::UnipartiteGraph r12(bool prefixed = false) {
  return hidden_ties::project(bp12(prefixed), hidden_ties::ProjectionSide::Actors);
}

// largest component of r12 (9 vertices, 19 edges)
inline hidden_ties::UnipartiteGraph r9(bool prefixed = false) {
  return hidden_ties::largest_component(r12(prefixed));
}

struct ReferenceRow {
  const char* label;
  std::size_t degree;
  double betweenness;   // raw pair counts
  double closeness;     // 1/sum-of-distances
  double eigenvector;   // L1-normalized
};

inline const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = {
      {"FactoryThree", 5, 0, 0.083, 0.149}, {"ANB", 5, 0, 0.083, 0.149},
      {"Shijiazhuang", 5, 0, 0.083, 0.149}, {"Remy", 5, 0, 0.083, 0.149},
      {"CBF", 7, 15, 0.111, 0.163},         {"Acdhon", 5, 0, 0.083, 0.149},
      {"GPO", 2, 0, 0.071, 0.040},          {"Brainy", 3, 7, 0.077, 0.041},
      {"Tman", 1, 0, 0.050, 0.008},
  };
  return rows;
}

}  // namespace fixtures
