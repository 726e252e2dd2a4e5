#include "hyperopic/metrics.hpp"

#include <algorithm>
#include <queue>

#include "hyperopic/errors.hpp"

namespace hyperopic {

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
    g.check_vertex(src);
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex v : g.neighbors(u).to_vector()) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

namespace {

// Articulation vertices via DFS low-link; works per component.
void articulation_dfs(const Graph& g, Vertex u, Vertex parent, int& timer,
                      std::vector<int>& tin, std::vector<int>& low,
                      std::vector<bool>& is_cut) {
    tin[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    int children = 0;
    for (Vertex v : g.neighbors(u).to_vector()) {
        if (v == parent) continue;
        if (tin[static_cast<std::size_t>(v)] >= 0) {
            low[static_cast<std::size_t>(u)] =
                std::min(low[static_cast<std::size_t>(u)], tin[static_cast<std::size_t>(v)]);
        } else {
            articulation_dfs(g, v, u, timer, tin, low, is_cut);
            low[static_cast<std::size_t>(u)] =
                std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
            if (parent >= 0 &&
                low[static_cast<std::size_t>(v)] >= tin[static_cast<std::size_t>(u)]) {
                is_cut[static_cast<std::size_t>(u)] = true;
            }
            ++children;
        }
    }
    if (parent < 0 && children >= 2) is_cut[static_cast<std::size_t>(u)] = true;
}

} // namespace

GraphMetrics compute_metrics(const Graph& g) {
    const int n = g.order();
    GraphMetrics m;
    m.connected = g.is_connected();

    m.min_degree = n > 0 ? g.degree(0) : 0;
    m.max_degree = 0;
    for (Vertex v = 0; v < n; ++v) {
        m.min_degree = std::min(m.min_degree, g.degree(v));
        m.max_degree = std::max(m.max_degree, g.degree(v));
    }

    // Diameter from all-source BFS.
    if (m.connected) {
        int diam = 0;
        for (Vertex src = 0; src < n; ++src) {
            auto dist = bfs_distances(g, src);
            for (int d : dist) diam = std::max(diam, d);
        }
        m.diameter = diam;
    }

    // Girth: min over roots of dist[u] + dist[v] + 1 for non-tree edges of
    // the BFS tree; each such value is the length of a closed walk, hence
    // bounds some cycle, and a shortest cycle is realized from any of its
    // own vertices.
    const auto edges = g.edges();
    int best_cycle = -1;
    for (Vertex src = 0; src < n; ++src) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
        std::queue<Vertex> q;
        dist[static_cast<std::size_t>(src)] = 0;
        q.push(src);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : g.neighbors(u).to_vector()) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    q.push(v);
                }
            }
        }
        for (auto [u, v] : edges) {
            if (dist[static_cast<std::size_t>(u)] < 0 || dist[static_cast<std::size_t>(v)] < 0)
                continue;
            if (parent[static_cast<std::size_t>(u)] == v || parent[static_cast<std::size_t>(v)] == u)
                continue;
            int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
            if (best_cycle < 0 || len < best_cycle) best_cycle = len;
        }
    }
    if (best_cycle >= 0) m.girth = best_cycle;

    m.is_tree = m.connected && g.size() == n - 1;

    m.triangle_free = true;
    for (auto [u, v] : edges) {
        if (g.neighbors(u).intersects(g.neighbors(v))) {
            m.triangle_free = false;
            break;
        }
    }

    {
        std::vector<int> tin(static_cast<std::size_t>(n), -1);
        std::vector<int> low(static_cast<std::size_t>(n), -1);
        std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
        int timer = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (tin[static_cast<std::size_t>(v)] < 0)
                articulation_dfs(g, v, -1, timer, tin, low, is_cut);
        }
        for (Vertex v = 0; v < n; ++v) {
            if (is_cut[static_cast<std::size_t>(v)]) m.cut_vertices.push_back(v);
        }
    }

    return m;
}

bool is_dominating(const Graph& g, const std::vector<Vertex>& set) {
    VertexSet covered(g.order());
    for (Vertex v : set) {
        g.check_vertex(v);
        covered.insert(v);
        covered |= g.neighbors(v);
    }
    return covered.count() == g.order();
}

DominatingSet greedy_dominating_set(const Graph& g) {
    detail::require(g.order() >= 1, "dominating set needs a nonempty graph");
    detail::require(g.is_connected(), "dominating set construction needs a connected graph");
    DominatingSet result;
    if (g.order() == 1) {
        result.vertices = {0};
        result.guarantee_waived = true;
        return result;
    }
    auto dist = bfs_distances(g, 0);
    std::vector<Vertex> even, odd;
    for (Vertex v = 0; v < g.order(); ++v) {
        (dist[static_cast<std::size_t>(v)] % 2 == 0 ? even : odd).push_back(v);
    }
    // Both parity classes dominate a connected graph on >= 2 vertices; the
    // smaller one has at most floor(n/2) vertices.
    result.vertices = odd.size() < even.size() ? odd : even;
    detail::invariant(is_dominating(g, result.vertices), "parity class fails to dominate");
    detail::invariant(static_cast<int>(result.vertices.size()) <= g.order() / 2,
                      "parity class exceeds half the order");
    return result;
}

namespace {

bool biclique_search(const Graph& g, int d, Vertex next, std::vector<Vertex>& chosen,
                     const VertexSet& common) {
    if (static_cast<int>(chosen.size()) == d) {
        VertexSet outside = common;
        for (Vertex x : chosen) outside.erase(x);
        return outside.count() >= d + 1;
    }
    // Adding vertices only shrinks the common neighborhood.
    if (common.count() < d + 1) return false;
    int remaining = d - static_cast<int>(chosen.size());
    for (Vertex v = next; v <= g.order() - remaining; ++v) {
        chosen.push_back(v);
        VertexSet narrowed = common;
        narrowed &= g.neighbors(v);
        if (biclique_search(g, d, v + 1, chosen, narrowed)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool contains_biclique(const Graph& g, int d, int max_order) {
    detail::require(d >= 1, "biclique side must be at least 1");
    detail::require(g.order() <= max_order, "graph too large for exhaustive biclique search");
    if (g.order() < 2 * d + 1) return false;
    std::vector<Vertex> chosen;
    return biclique_search(g, d, 0, chosen, VertexSet::full(g.order()));
}

} // namespace hyperopic
