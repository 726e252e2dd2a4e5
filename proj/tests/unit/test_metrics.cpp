#include "doctest.h"
#include "hyperopic/generators.hpp"
#include "hyperopic/metrics.hpp"
#include "oracle/naive_metrics.hpp"

#include <algorithm>

using namespace hyperopic;

namespace {

std::vector<Graph> metric_corpus() {
    std::vector<Graph> out;
    for (int n = 2; n <= 12; n += 2) out.push_back(path(n));
    for (int n = 3; n <= 11; n += 2) out.push_back(cycle(n));
    out.push_back(clique(6));
    out.push_back(clique_minus_edges(6, {{0, 1}, {2, 3}}));
    out.push_back(complete_bipartite(3, 4));
    out.push_back(petersen());
    out.push_back(grid(3, 4));
    out.push_back(grid(2, 5));
    for (std::uint64_t s = 1; s <= 4; ++s) {
        out.push_back(random_tree(11, s));
        out.push_back(random_connected(9, 0.3, s));
        out.push_back(maximal_outerplanar(10, s));
    }
    for (const Graph& g : all_connected_graphs(5)) out.push_back(g);
    return out;
}

} // namespace

TEST_CASE("metrics agree with direct recomputation across the corpus") {
    for (const Graph& g : metric_corpus()) {
        GraphMetrics m = compute_metrics(g);
        CHECK(m.connected == oracle::naive_connected(g));
        CHECK(m.diameter == oracle::naive_diameter(g));
        CHECK(m.girth == oracle::naive_girth(g));
        CHECK(m.cut_vertices == oracle::naive_cut_vertices(g));

        int dmin = g.order() ? g.degree(0) : 0, dmax = dmin;
        for (Vertex v = 0; v < g.order(); ++v) {
            dmin = std::min(dmin, g.degree(v));
            dmax = std::max(dmax, g.degree(v));
        }
        CHECK(m.min_degree == dmin);
        CHECK(m.max_degree == dmax);

        CHECK(m.is_tree == (m.connected && g.size() == g.order() - 1));
        CHECK(m.triangle_free == (!m.girth || *m.girth > 3));
    }
}

TEST_CASE("hand-checked metric values") {
    GraphMetrics p4 = compute_metrics(path(4));
    CHECK(p4.connected);
    CHECK(p4.diameter == 3);
    CHECK(p4.is_tree);
    CHECK(!p4.girth.has_value());
    CHECK(p4.min_degree == 1);
    CHECK(p4.max_degree == 2);
    CHECK(p4.cut_vertices == std::vector<Vertex>{1, 2});

    GraphMetrics c5 = compute_metrics(cycle(5));
    CHECK(c5.diameter == 2);
    CHECK(c5.girth == 5);
    CHECK(c5.triangle_free);
    CHECK(c5.cut_vertices.empty());

    CHECK(compute_metrics(clique(4)).girth == 3);
    CHECK(!compute_metrics(clique(4)).triangle_free);
    CHECK(compute_metrics(grid(3, 3)).diameter == 4);
}

TEST_CASE("bfs distances") {
    Graph g = path(5);
    CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(bfs_distances(g, 2) == std::vector<int>{2, 1, 0, 1, 2});
    Graph h(3);
    h.add_edge(0, 1);
    CHECK(bfs_distances(h, 0) == std::vector<int>{0, 1, -1});
}

TEST_CASE("dominating set guarantee") {
    for (const Graph& g : metric_corpus()) {
        if (!g.is_connected() || g.order() < 2) continue;
        DominatingSet d = greedy_dominating_set(g);
        CHECK(!d.guarantee_waived);
        CHECK(is_dominating(g, d.vertices));
        CHECK(int(d.vertices.size()) <= g.order() / 2);
    }
    DominatingSet one = greedy_dominating_set(clique(1));
    CHECK(one.vertices == std::vector<Vertex>{0});
    CHECK(one.guarantee_waived);

    CHECK(is_dominating(cycle(6), {0, 3}));
    CHECK(!is_dominating(cycle(6), {0, 1}));
}

TEST_CASE("biclique containment") {
    CHECK(contains_biclique(path(3), 1));       // K_{1,2} is P_3 itself
    CHECK(!contains_biclique(path(2), 1));
    CHECK(contains_biclique(cycle(4), 1));
    CHECK(contains_biclique(clique(5), 2));     // K_{2,3} inside K_5
    CHECK(!contains_biclique(clique(4), 2));    // only two outside candidates
    CHECK(!contains_biclique(petersen(), 2));   // girth 5 forbids C_4
    CHECK(contains_biclique(complete_bipartite(2, 3), 2));
    CHECK(contains_biclique(incidence_plane(2), 1));
}
