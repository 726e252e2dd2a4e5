#include "hyperopic/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

namespace hyperopic {

namespace {

void set_meta(Graph& g, std::string family,
              std::initializer_list<std::pair<const char*, long long>> params = {}) {
    g.meta.family = std::move(family);
    for (auto& [k, v] : params) g.meta.params[k] = v;
}

} // namespace

Graph clique(int n) {
    detail::require(n >= 1, "clique: order must be >= 1");
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    set_meta(g, "clique", {{"n", n}});
    return g;
}

Graph clique_minus_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& removed) {
    detail::require(n >= 1, "clique_minus_edges: order must be >= 1");
    std::vector<std::pair<Vertex, Vertex>> gone;
    for (auto [u, v] : removed) {
        detail::require(u >= 0 && v >= 0 && u < n && v < n && u != v,
                        "clique_minus_edges: removed pair is not a clique edge");
        auto e = std::minmax(u, v);
        detail::require(std::find(gone.begin(), gone.end(), std::make_pair(e.first, e.second)) ==
                            gone.end(),
                        "clique_minus_edges: edge listed twice");
        gone.emplace_back(e.first, e.second);
    }
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (std::find(gone.begin(), gone.end(), std::make_pair(u, v)) == gone.end())
                g.add_edge(u, v);
    detail::require(g.is_connected(), "clique_minus_edges: removals disconnect the graph");
    set_meta(g, "clique-minus-edges",
             {{"n", n}, {"removed", static_cast<long long>(removed.size())}});
    return g;
}

Graph path(int n) {
    detail::require(n >= 1, "path: order must be >= 1");
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    set_meta(g, "path", {{"n", n}});
    return g;
}

Graph cycle(int n) {
    detail::require(n >= 3, "cycle: order must be >= 3");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    set_meta(g, "cycle", {{"n", n}});
    return g;
}

Graph random_tree(int n, std::uint64_t seed) {
    detail::require(n >= 1, "random_tree: order must be >= 1");
    Graph g(n);
    std::mt19937_64 rng(seed);
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> pick(0, v - 1);
        g.add_edge(pick(rng), v);
    }
    set_meta(g, "random-tree", {{"n", n}, {"seed", static_cast<long long>(seed)}});
    return g;
}

Graph complete_bipartite(int a, int b) {
    detail::require(a >= 1 && b >= 1, "complete_bipartite: both sides must be >= 1");
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
    set_meta(g, "complete-bipartite", {{"a", a}, {"b", b}});
    return g;
}

Graph co_clique(int n) {
    detail::require(n >= 1, "co_clique: order must be >= 1");
    Graph g(n);
    set_meta(g, "co-clique", {{"n", n}});
    return g;
}

Graph join(const Graph& g, const Graph& h) {
    int gn = g.order(), hn = h.order();
    detail::require(gn >= 1 && hn >= 1, "join: operands must be non-empty");
    Graph out(gn + hn);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(gn + u, gn + v);
    for (Vertex u = 0; u < gn; ++u)
        for (Vertex v = gn; v < gn + hn; ++v) out.add_edge(u, v);
    set_meta(out, "join", {{"left_n", gn}, {"right_n", hn}});
    return out;
}

Graph clique_join_coclique(int r, int s) {
    detail::require(r >= 1 && s >= 1, "clique_join_coclique: both parts must be >= 1");
    Graph g = join(clique(r), co_clique(s));
    set_meta(g, "clique-join-coclique", {{"r", r}, {"s", s}});
    return g;
}

Graph petersen() {
    Graph g(10);
    for (Vertex v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);          // outer cycle
        g.add_edge(v, v + 5);                // spokes
        g.add_edge(v + 5, (v + 2) % 5 + 5);  // inner pentagram
    }
    set_meta(g, "petersen");
    return g;
}

Graph incidence_plane(int q) {
    detail::require(q >= 2, "incidence_plane: order must be >= 2");
    for (int d = 2; d * d <= q; ++d)
        detail::require(q % d != 0, "incidence_plane: order must be prime");

    // Projective points and lines over GF(q): normalized triples with first
    // nonzero coordinate 1. Duality makes the same list serve both roles.
    std::vector<std::array<int, 3>> reps;
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) reps.push_back({1, y, z});
    for (int z = 0; z < q; ++z) reps.push_back({0, 1, z});
    reps.push_back({0, 0, 1});
    int N = static_cast<int>(reps.size()); // q^2 + q + 1

    Graph g(2 * N);
    for (int p = 0; p < N; ++p)
        for (int l = 0; l < N; ++l) {
            long long dot = 0;
            for (int c = 0; c < 3; ++c) dot += static_cast<long long>(reps[p][c]) * reps[l][c];
            if (dot % q == 0) g.add_edge(p, N + l);
        }
    set_meta(g, "incidence-plane", {{"q", q}, {"points", N}});
    return g;
}

Graph grid(int rows, int cols) {
    detail::require(rows >= 1 && cols >= 1, "grid: both dimensions must be >= 1");
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    set_meta(g, "grid", {{"rows", rows}, {"cols", cols}});
    return g;
}

Graph maximal_outerplanar(int n, std::uint64_t seed) {
    detail::require(n >= 3, "maximal_outerplanar: order must be >= 3");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    std::mt19937_64 rng(seed);
    // Random triangulation of the polygon 0..n-1: split each remaining face
    // chord (a, b) at a uniform interior vertex.
    std::vector<std::pair<Vertex, Vertex>> stack{{0, n - 1}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (b - a < 2) continue;
        std::uniform_int_distribution<Vertex> pick(a + 1, b - 1);
        Vertex c = pick(rng);
        if (!g.has_edge(a, c)) g.add_edge(a, c);
        if (!g.has_edge(c, b)) g.add_edge(c, b);
        stack.push_back({a, c});
        stack.push_back({c, b});
    }
    set_meta(g, "maximal-outerplanar", {{"n", n}, {"seed", static_cast<long long>(seed)}});
    return g;
}

Graph random_connected(int n, double edge_prob, std::uint64_t seed) {
    detail::require(n >= 1, "random_connected: order must be >= 1");
    detail::require(edge_prob > 0.0 && edge_prob <= 1.0, "random_connected: p in (0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_prob);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (g.is_connected()) {
            set_meta(g, "random-connected", {{"n", n}, {"seed", static_cast<long long>(seed)}});
            return g;
        }
    }
    throw Error("random_connected: no connected sample found; raise edge_prob");
}

namespace {

// Adjacency bitmask over the C(n,2) upper-triangle edge slots.
int edge_slot(int n, int u, int v) {
    // slots ordered (0,1),(0,2),...,(0,n-1),(1,2),...
    int base = u * (2 * n - u - 1) / 2;
    return base + (v - u - 1);
}

bool mask_connected(int n, std::uint64_t mask) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int u = 0; u < n; ++u) {
            if (!((frontier >> u) & 1)) continue;
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                int s = edge_slot(n, std::min(u, v), std::max(u, v));
                if ((mask >> s) & 1 && !((seen >> v) & 1)) {
                    seen |= 1ULL << v;
                    next |= 1ULL << v;
                }
            }
        }
        frontier = next;
    }
    return seen == (n == 64 ? ~0ULL : (1ULL << n) - 1);
}

} // namespace

std::vector<Graph> all_connected_graphs(int n) {
    detail::require(n >= 1 && n <= 7, "all_connected_graphs: supported for 1 <= n <= 7");
    if (n == 1) {
        std::vector<Graph> out;
        out.push_back(Graph(1));
        out.back().meta.family = "enumerated";
        return out;
    }
    int slots = n * (n - 1) / 2;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);

    // Precompute, for every permutation, where each edge slot lands.
    std::vector<std::vector<int>> slot_maps;
    do {
        std::vector<int> map(static_cast<std::size_t>(slots));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int pu = perm[static_cast<std::size_t>(u)], pv = perm[static_cast<std::size_t>(v)];
                map[static_cast<std::size_t>(edge_slot(n, u, v))] =
                    edge_slot(n, std::min(pu, pv), std::max(pu, pv));
            }
        slot_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ULL << slots); ++mask) {
        if (!mask_connected(n, mask)) continue;
        bool canonical = true;
        for (const auto& map : slot_maps) {
            std::uint64_t image = 0;
            for (int s = 0; s < slots; ++s)
                if ((mask >> s) & 1) image |= 1ULL << map[static_cast<std::size_t>(s)];
            if (image < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((mask >> edge_slot(n, u, v)) & 1) g.add_edge(u, v);
        g.meta.family = "enumerated";
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace hyperopic
