#pragma once

#include <optional>
#include <vector>

#include "hyperopic/graph.hpp"

namespace hyperopic {

struct GraphMetrics {
    bool connected = false;
    int diameter = -1;              // meaningful only when connected
    std::optional<int> girth;       // empty when acyclic
    int min_degree = 0;
    int max_degree = 0;
    bool is_tree = false;
    bool triangle_free = true;
    std::vector<Vertex> cut_vertices;
};

GraphMetrics compute_metrics(const Graph& g);

// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex src);

struct DominatingSet {
    std::vector<Vertex> vertices;
    // Set when the <= floor(n/2) cardinality guarantee is waived (n = 1).
    bool guarantee_waived = false;
};

// Smaller BFS-layer parity class from vertex 0; dominating, and of size at
// most floor(n/2) for connected graphs on n >= 2 vertices.
DominatingSet greedy_dominating_set(const Graph& g);

bool is_dominating(const Graph& g, const std::vector<Vertex>& set);

// True iff G contains K_{d, d+1} as a subgraph: some d-set X with at least
// d+1 common neighbors outside X. Exhaustive over d-subsets; refuses orders
// above `max_order`.
bool contains_biclique(const Graph& g, int d, int max_order = 64);

} // namespace hyperopic
