#include "doctest.h"
#include "hyperopic/errors.hpp"
#include "hyperopic/generators.hpp"
#include "hyperopic/graph.hpp"
#include "hyperopic/io.hpp"

using namespace hyperopic;

TEST_CASE("graph construction and adjacency") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.neighbors(1).to_vector() == std::vector<Vertex>{0, 2});
    CHECK(g.closed_neighbors(1).to_vector() == std::vector<Vertex>{0, 1, 2});
    CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.is_connected());

    Graph h(3);
    CHECK(!h.is_connected());
    h.add_edge(0, 1);
    CHECK(!h.is_connected());
    h.add_edge(1, 2);
    CHECK(h.is_connected());
}

TEST_CASE("graph input validation") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), InputError);
    CHECK_THROWS_AS(Graph(0), InputError);
}

TEST_CASE("common neighborhood") {
    Graph c4 = cycle(4);
    // Distinct occupied vertices only: a doubled cop adds nothing.
    CHECK(common_neighborhood(c4, std::vector<Vertex>{0, 2}).to_vector() ==
          std::vector<Vertex>{1, 3});
    CHECK(common_neighborhood(c4, std::vector<Vertex>{0, 0}).to_vector() ==
          std::vector<Vertex>{1, 3});
    CHECK(common_neighborhood(c4, std::vector<Vertex>{0, 1}).empty());

    Graph k3 = clique(3);
    CHECK(common_neighborhood(k3, std::vector<Vertex>{0}).to_vector() ==
          std::vector<Vertex>{1, 2});
    CHECK(common_neighborhood(k3, std::vector<Vertex>{0, 1}).to_vector() ==
          std::vector<Vertex>{2});
}

TEST_CASE("edge list round trip") {
    Graph g = cycle(5);
    std::string text = write_edge_list(g);
    Graph back = parse_edge_list(text);
    CHECK(back.order() == 5);
    CHECK(back.edges() == g.edges());

    CHECK_THROWS_AS(parse_edge_list("oops"), InputError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n1 0\n"), InputError); // must be u < v
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n0 1\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 5\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\nextra"), InputError);
}

TEST_CASE("graph6 hand-checked bytes") {
    // Two vertices: order byte 63+2 = 'A'. K_2 sets the single adjacency
    // bit, padded to six bits: 100000 -> 63+32 = '_'; the empty graph pads
    // zeros -> '?'.
    CHECK(graph6_encode(clique(2)) == "A_");
    CHECK(graph6_encode(Graph(2)) == "A?");
    CHECK(graph6_decode("A_").has_edge(0, 1));
    CHECK(graph6_decode("A?").size() == 0);
    CHECK(graph6_decode(">>graph6<<A_\n").size() == 1);

    CHECK_THROWS_AS(graph6_decode(""), InputError);
    CHECK_THROWS_AS(graph6_decode("A"), InputError);   // truncated bit field
    CHECK_THROWS_AS(graph6_decode("A_~"), InputError); // trailing bytes
}

TEST_CASE("graph6 round trip over an exhaustive corpus") {
    for (const Graph& g : all_connected_graphs(5)) {
        Graph back = graph6_decode(graph6_encode(g));
        CHECK(back.order() == g.order());
        CHECK(back.edges() == g.edges());
    }
    Graph p = petersen();
    CHECK(graph6_decode(graph6_encode(p)).edges() == p.edges());
}

TEST_CASE("format dispatch") {
    CHECK(parse_graph("3 2\n0 1\n1 2\n").order() == 3);
    CHECK(parse_graph("A_").order() == 2);
    CHECK(parse_graph("3 2\n0 1\n1 2\n", GraphFormat::edge_list).size() == 2);
    CHECK(parse_graph("A_", GraphFormat::graph6).size() == 1);
    CHECK_THROWS_AS(parse_graph("A_", GraphFormat::edge_list), InputError);
    CHECK_THROWS_AS(parse_graph("", GraphFormat::automatic), InputError);
}
