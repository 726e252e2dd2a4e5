#pragma once

#include <optional>
#include <vector>

#include "hyperopic/graph.hpp"

namespace hyperopic::oracle {

// Structural quantities recomputed by the plainest algorithm available, for
// cross-checking the production metrics.

bool naive_connected(const Graph& g);

// Floyd-Warshall; -1 when disconnected (or n == 0).
int naive_diameter(const Graph& g);

// Shortest cycle via per-edge removal plus BFS; nullopt when acyclic.
std::optional<int> naive_girth(const Graph& g);

// Vertices whose deletion increases the component count.
std::vector<Vertex> naive_cut_vertices(const Graph& g);

} // namespace hyperopic::oracle
