#pragma once

#include <cstdint>
#include <vector>

#include "hyperopic/graph.hpp"

namespace hyperopic {

Graph clique(int n);
// K_n with the listed edges removed; rejects removals that disconnect.
Graph clique_minus_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& removed);
Graph path(int n);
Graph cycle(int n);
// Random recursive tree: vertex v attaches to a uniform earlier vertex.
Graph random_tree(int n, std::uint64_t seed);
Graph complete_bipartite(int a, int b);
// Edgeless graph. Disconnected for n >= 2: rejected as a game input
// downstream but a legal join operand.
Graph co_clique(int n);
// Clique vertices 0..r-1, co-clique r..r+s-1, all cross edges present.
// Identical labeling to join(clique(r), co_clique(s)).
Graph clique_join_coclique(int r, int s);
Graph petersen();
// Point-line incidence graph of the projective plane PG(2, q), q prime.
// Points are vertices 0..N-1, lines N..2N-1 with N = q^2+q+1; adjacency is
// containment. Bipartite, (q+1)-regular, girth 6, diameter 3.
Graph incidence_plane(int q);
Graph grid(int rows, int cols);
// Maximal outerplanar graph: seeded random triangulation of an n-gon.
Graph maximal_outerplanar(int n, std::uint64_t seed);

// Disjoint union plus every cross edge; right operand relabeled by +|G|.
Graph join(const Graph& g, const Graph& h);

// Seeded Erdos-Renyi style graph, resampled until connected.
Graph random_connected(int n, double edge_prob, std::uint64_t seed);

// Every connected graph on n vertices up to isomorphism (canonical form =
// lexicographically least adjacency bitmask over all vertex relabelings).
// Exhaustive search, practical for n <= 7.
std::vector<Graph> all_connected_graphs(int n);

} // namespace hyperopic
