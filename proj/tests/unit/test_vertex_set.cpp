#include "doctest.h"
#include "hyperopic/vertex_set.hpp"

#include <set>

using hyperopic::Vertex;
using hyperopic::VertexSet;

TEST_CASE("vertex set basics") {
    VertexSet s(10);
    CHECK(s.universe() == 10);
    CHECK(s.empty());
    CHECK(s.count() == 0);
    CHECK(s.first() == -1);

    s.insert(3);
    s.insert(7);
    s.insert(3);
    CHECK(s.count() == 2);
    CHECK(s.contains(3));
    CHECK(s.contains(7));
    CHECK(!s.contains(4));
    CHECK(s.first() == 3);

    s.erase(3);
    CHECK(!s.contains(3));
    CHECK(s.count() == 1);
    CHECK(s.first() == 7);

    CHECK(s.to_string() == "{7}");
    s.insert(0);
    s.insert(2);
    CHECK(s.to_string() == "{0,2,7}");
    CHECK(s.to_vector() == std::vector<Vertex>{0, 2, 7});
}

TEST_CASE("vertex set algebra") {
    VertexSet a(8), b(8);
    for (Vertex v : {0, 1, 2, 5}) a.insert(v);
    for (Vertex v : {1, 2, 6}) b.insert(v);

    CHECK((a & b).to_vector() == std::vector<Vertex>{1, 2});
    CHECK((a | b).to_vector() == std::vector<Vertex>{0, 1, 2, 5, 6});
    CHECK((a - b).to_vector() == std::vector<Vertex>{0, 5});

    CHECK((a & b).subset_of(a));
    CHECK((a & b).subset_of(b));
    CHECK(!a.subset_of(b));
    CHECK(a.intersects(b));
    CHECK(!(a - b).intersects(b));

    VertexSet empty(8);
    CHECK(empty.subset_of(a));
    CHECK(!a.intersects(empty));
}

TEST_CASE("complement and full trim past word boundaries") {
    // Universe 70 spans two words; the complement must not leak bits
    // beyond vertex 69.
    VertexSet s(70);
    s.insert(0);
    s.insert(69);
    VertexSet c = s.complement();
    CHECK(c.count() == 68);
    CHECK(!c.contains(0));
    CHECK(!c.contains(69));
    CHECK(c.contains(1));
    CHECK(c.contains(68));

    CHECK(VertexSet::full(70).count() == 70);
    CHECK(VertexSet::full(70).complement().empty());
    CHECK(VertexSet::singleton(70, 64).first() == 64);
}

TEST_CASE("ordering, equality, hashing") {
    VertexSet a(6), b(6);
    a.insert(1);
    b.insert(1);
    CHECK(a == b);
    b.insert(4);
    CHECK(a != b);
    CHECK(a < b);

    // Distinct contents land in distinct std::set slots.
    std::set<VertexSet> pool;
    for (Vertex v = 0; v < 6; ++v) pool.insert(VertexSet::singleton(6, v));
    CHECK(pool.size() == 6);

    CHECK(a.hash() != b.hash());
}
