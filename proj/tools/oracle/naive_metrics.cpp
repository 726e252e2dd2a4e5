#include "oracle/naive_metrics.hpp"

#include <algorithm>
#include <queue>

namespace hyperopic::oracle {
namespace {

constexpr int kInf = 1 << 28;

int component_count(const Graph& g, Vertex skip) {
    int n = g.order();
    std::vector<char> seen(n, 0);
    if (skip >= 0) seen[skip] = 1;
    int comps = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : g.neighbors(u).to_vector())
                if (!seen[v]) { seen[v] = 1; q.push(v); }
        }
    }
    return comps;
}

} // namespace

bool naive_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return component_count(g, -1) == 1;
}

int naive_diameter(const Graph& g) {
    int n = g.order();
    if (n == 0 || !naive_connected(g)) return -1;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (Vertex u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (Vertex v : g.neighbors(u).to_vector()) d[u][v] = 1;
    }
    for (int m = 0; m < n; ++m)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                d[u][v] = std::min(d[u][v], d[u][m] + d[m][v]);
    int diam = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) diam = std::max(diam, d[u][v]);
    return diam;
}

std::optional<int> naive_girth(const Graph& g) {
    int n = g.order();
    int best = kInf;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : g.neighbors(u).to_vector()) {
            if (v < u) continue;
            // Shortest u-v path avoiding the edge uv closes the shortest cycle
            // through that edge.
            std::vector<int> dist(n, kInf);
            dist[u] = 0;
            std::queue<Vertex> q;
            q.push(u);
            while (!q.empty()) {
                Vertex x = q.front();
                q.pop();
                for (Vertex y : g.neighbors(x).to_vector()) {
                    if (x == u && y == v) continue;
                    if (x == v && y == u) continue;
                    if (dist[y] > dist[x] + 1) {
                        dist[y] = dist[x] + 1;
                        q.push(y);
                    }
                }
            }
            if (dist[v] < kInf) best = std::min(best, dist[v] + 1);
        }
    }
    if (best == kInf) return std::nullopt;
    return best;
}

std::vector<Vertex> naive_cut_vertices(const Graph& g) {
    int n = g.order();
    std::vector<Vertex> out;
    if (n <= 1) return out;
    int base = component_count(g, -1);
    for (Vertex v = 0; v < n; ++v)
        if (component_count(g, v) > base) out.push_back(v);
    return out;
}

} // namespace hyperopic::oracle
