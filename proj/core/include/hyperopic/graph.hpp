#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperopic/errors.hpp"
#include "hyperopic/vertex_set.hpp"

namespace hyperopic {

// Provenance left behind by generators: family name plus integer parameters.
// Strategies that depend on how a graph was built (incidence planes, joins)
// read it; everything else ignores it.
struct GraphMeta {
    std::string family;
    std::map<std::string, long long> params;
};

// Simple undirected graph with bitset adjacency rows. Loops are game
// semantics (players may pass), not stored edges; the structure is loop-free.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    // Open neighborhood N(v).
    const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    // Closed neighborhood N[v].
    VertexSet closed_neighbors(Vertex v) const;

    int degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].count(); }

    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool is_connected() const;

    void check_vertex(Vertex v) const {
        detail::require(v >= 0 && v < n_, "vertex index out of range");
    }

    GraphMeta meta;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// Intersection of the open neighborhoods of the distinct vertices among
// `cops`. A robber is invisible exactly when it sits in this set (co-location
// aside), so this is the set of potential hiding places for a cop placement.
VertexSet common_neighborhood(const Graph& g, std::span<const Vertex> cops);

} // namespace hyperopic
