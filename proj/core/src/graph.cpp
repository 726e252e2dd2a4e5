#include "hyperopic/graph.hpp"

#include <algorithm>

namespace hyperopic {

Graph::Graph(int n) : n_(n) {
    detail::require(n >= 1, "graph order must be positive");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    detail::require(u != v, "self-loops are implicit; refusing explicit loop edge");
    detail::require(!has_edge(u, v), "duplicate edge");
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
    ++m_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

VertexSet Graph::closed_neighbors(Vertex v) const {
    check_vertex(v);
    VertexSet s = adj_[static_cast<std::size_t>(v)];
    s.insert(v);
    return s;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)].to_vector())
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    VertexSet seen = VertexSet::singleton(n_, 0);
    std::vector<Vertex> stack{0};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : (adj_[static_cast<std::size_t>(u)] - seen).to_vector()) {
            seen.insert(w);
            stack.push_back(w);
        }
    }
    return seen.count() == n_;
}

VertexSet common_neighborhood(const Graph& g, std::span<const Vertex> cops) {
    detail::require(!cops.empty(), "common neighborhood of an empty placement");
    std::vector<Vertex> distinct(cops.begin(), cops.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    g.check_vertex(distinct.front());
    g.check_vertex(distinct.back());
    VertexSet acc = g.neighbors(distinct[0]);
    for (std::size_t i = 1; i < distinct.size(); ++i) acc &= g.neighbors(distinct[i]);
    return acc;
}

} // namespace hyperopic
