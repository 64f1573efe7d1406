#pragma once

#include <utility>

#include "hidden_ties/graph.hpp"

namespace hidden_ties {

enum class ProjectionSide { Actors, Resources };

// One-mode projection: vertices of the chosen part (isolated ones retained),
// an edge wherever two part members share at least one neighbour in the other
// part, weight = number of shared neighbours. Bipartite edge weights play no
// role; only the neighbour sets do.
UnipartiteGraph project(const BipartiteGraph& g, ProjectionSide side);

// (A-projection, B-projection)
std::pair<UnipartiteGraph, UnipartiteGraph> project_both(const BipartiteGraph& g);

}  // namespace hidden_ties
