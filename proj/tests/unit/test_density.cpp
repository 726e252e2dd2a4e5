#include "doctest.h"
#include "hyperopic/density.hpp"
#include "oracle/brute_density.hpp"

#include <random>
#include <tuple>
#include <vector>

using namespace hyperopic;

TEST_CASE("join element cop numbers") {
    CHECK(clique_join_cop_number(2, 2) == 2);
    CHECK(clique_join_cop_number(3, 2) == 2);
    CHECK(clique_join_cop_number(4, 3) == 3);
    CHECK(clique_join_cop_number(5, 2) == 3);
    CHECK(clique_join_cop_number(6, 9) == 4);
    CHECK_THROWS_AS(clique_join_cop_number(1, 2), InputError);
    CHECK_THROWS_AS(clique_join_cop_number(2, 1), InputError);
}

TEST_CASE("element density") {
    CHECK(element_density(2, 2) == Rational(1, 2));
    CHECK(element_density(4, 5) == Rational(1, 3));
    CHECK(element_density(2, 5) == Rational(2, 7));
    CHECK(element_density(2, 9) == Rational(2, 11));
    CHECK(element_density(15, 5) == Rational(2, 5));
    // An odd clique part uses the floor: (5,5) sits at 3/10.
    CHECK(element_density(5, 5) == Rational(3, 10));
}

TEST_CASE("density margin sign") {
    CHECK(density_margin(2, 5, Rational(1, 3)) == 1);
    CHECK(density_margin(2, 9, Rational(1, 4)) == 3);
    CHECK(density_margin(2, 2, Rational(1, 3)) == -2);
    CHECK(density_margin(4, 5, Rational(1, 3)) == 0); // exactly on target
    // Positive margin iff density strictly below target.
    CHECK((density_margin(2, 7, Rational(1, 4)) > 0) ==
          (element_density(2, 7) < Rational(1, 4)));
    CHECK_THROWS_AS(density_margin(2, 2, Rational(1, 2)), InputError);  // 2a = b
    CHECK_THROWS_AS(density_margin(2, 2, Rational(2, 3)), InputError);  // above 1/2
}

TEST_CASE("balance equation solutions") {
    DiophantineSolution s = solve_diophantine(Rational(1, 3), 2, 5);
    CHECK(s.x == 2);
    CHECK(s.y == 0);

    DiophantineSolution t = solve_diophantine(Rational(1, 4), 2, 9);
    CHECK(t.x == 4);
    CHECK(t.y == 1);

    CHECK_THROWS_AS(solve_diophantine(Rational(1, 3), 2, 2), NeedPaddingError);

    // Solutions land exactly on the target and x stays even.
    std::vector<std::tuple<Rational, int, int>> probes = {{Rational(2, 7), 2, 6},
                                                          {Rational(1, 3), 4, 9},
                                                          {Rational(3, 8), 2, 4},
                                                          {Rational(1, 5), 2, 10}};
    for (auto [target, i, j] : probes) {
        DiophantineSolution u = solve_diophantine(target, i, j);
        CHECK(u.x % 2 == 0);
        CHECK(u.x >= 0);
        CHECK(u.y >= 0);
        CHECK(element_density(int(i + u.x), int(j + u.y)) == target);
    }
}

TEST_CASE("balance equation matches brute scan") {
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 60) {
        int b = int(rng() % 28) + 3;
        int a = int(rng() % (b / 2)) + 1;
        if (2 * a >= b) continue;
        Rational target(a, b);
        int i = 2 * (int(rng() % 6) + 1);
        int j = int(rng() % 24) + 2;
        if (density_margin(i, j, target) <= 0) continue;
        DiophantineSolution got = solve_diophantine(target, i, j);
        auto want = oracle::brute_balance(target, i, j, 2000);
        REQUIRE(want.has_value());
        CHECK(got.x == want->first);
        CHECK(got.y == want->second);
        ++done;
    }
}

TEST_CASE("padding to a positive margin") {
    CHECK(pad_for_positive_beta(Rational(1, 3), 2, 2) == 5);
    CHECK(density_margin(2, 4, Rational(1, 3)) <= 0);
    CHECK(density_margin(2, 5, Rational(1, 3)) > 0);

    // Minimal padded j' for target 1/4 from (2,2): margins flip at 7.
    CHECK(pad_for_positive_beta(Rational(1, 4), 2, 2) == 7);
    CHECK(density_margin(2, 6, Rational(1, 4)) <= 0);
    CHECK(density_margin(2, 7, Rational(1, 4)) > 0);

    CHECK(pad_for_positive_beta(Rational(1, 3), 4, 5) == 6);

    // Already-positive margins change nothing.
    CHECK(pad_for_positive_beta(Rational(1, 3), 2, 9) == 9);
}

TEST_CASE("approximant sequences") {
    // Endpoint 0: harmonic tail.
    auto zero = approximant_sequence(Rational(0), 3);
    REQUIRE(zero.size() == 4);
    CHECK(zero[0] == Rational(1, 2));
    CHECK(zero[1] == Rational(1, 3));
    CHECK(zero[2] == Rational(1, 4));
    CHECK(zero[3] == Rational(1, 5));

    // Endpoint 1/2: n/(2n+1) from below.
    auto half = approximant_sequence(Rational(1, 2), 3);
    REQUIRE(half.size() == 4);
    CHECK(half[0] == Rational(1, 2));
    CHECK(half[1] == Rational(1, 3));
    CHECK(half[2] == Rational(2, 5));
    CHECK(half[3] == Rational(3, 7));

    // Interior targets: convergents, then the target repeated.
    auto third = approximant_sequence(Rational(1, 3), 2);
    REQUIRE(third.size() == 3);
    CHECK(third[0] == Rational(1, 2));
    CHECK(third[1] == Rational(1, 3));
    CHECK(third[2] == Rational(1, 3));

    for (const std::string& name : {"1/pi", "1/e", "sqrt2/4"}) {
        auto target = named_target(name);
        REQUIRE(target.has_value());
        CHECK(Rational(0) < *target);
        CHECK(*target < Rational(1, 2));
        // Their continued fractions run at most ten convergents deep, so
        // twelve terms are enough to land on the target itself.
        auto seq = approximant_sequence(*target, 12);
        REQUIRE(seq.size() == 13);
        CHECK(seq[0] == Rational(1, 2));
        CHECK(seq.back() == *target);
        for (std::size_t idx = 1; idx < seq.size(); ++idx) {
            CHECK(Rational(0) < seq[idx]);
            CHECK(seq[idx] < Rational(1, 2));
            if (idx >= 2) {
                CHECK((seq[idx] - *target).abs() <= (seq[idx - 1] - *target).abs());
            }
        }
    }
    CHECK(!named_target("phi").has_value());

    CHECK_THROWS_AS(approximant_sequence(Rational(3, 5), 2), InputError);
    CHECK_THROWS_AS(approximant_sequence(Rational(-1, 3), 2), InputError);
}

TEST_CASE("pinned irrational stand-ins") {
    CHECK(*named_target("1/pi") == Rational(113, 355));
    CHECK(*named_target("1/e") == Rational(1001, 2721));
    CHECK(*named_target("sqrt2/4") == Rational(1393, 3940));
}

TEST_CASE("chain construction, worked example") {
    Chain c = build_chain(Rational(1, 3), 1);
    REQUIRE(c.rows.size() == 2);

    const ChainRow& seed = c.rows[0];
    CHECK(seed.n == 0);
    CHECK(seed.p == Rational(1, 2));
    CHECK(seed.i == 2);
    CHECK(seed.j == 2);
    CHECK(seed.cop_number == 2);
    CHECK(seed.order == 4);
    CHECK(seed.density == Rational(1, 2));

    // Adjoin one co-clique vertex (2,3), pad to (2,5), balance with (2,0).
    const ChainRow& row = c.rows[1];
    CHECK(row.n == 1);
    CHECK(row.p == Rational(1, 3));
    CHECK(row.i == 4);
    CHECK(row.j == 5);
    CHECK(row.x_added == 2);
    CHECK(row.y_added == 0);
    CHECK(row.cop_number == 3);
    CHECK(row.order == 9);
    CHECK(row.density == Rational(1, 3));
}

TEST_CASE("chain invariants across targets") {
    std::vector<Rational> targets = {Rational(0), Rational(1, 4), Rational(1, 3),
                                     Rational(1, 2), *named_target("1/pi")};
    for (const Rational& target : targets) {
        Chain c = build_chain(target, 8);
        REQUIRE(c.rows.size() == 9);
        CHECK(c.target == target);
        CHECK(c.rows[0].i == 2);
        CHECK(c.rows[0].j == 2);
        for (std::size_t idx = 0; idx < c.rows.size(); ++idx) {
            const ChainRow& r = c.rows[idx];
            // Realized density is exact, not approximate.
            CHECK(r.density == r.p);
            CHECK(r.density == element_density(r.i, r.j));
            CHECK(r.order == r.i + r.j);
            CHECK(r.cop_number == clique_join_cop_number(r.i, r.j));
            CHECK(r.x_added % 2 == 0);
            CHECK(r.x_added >= 0);
            CHECK(r.y_added >= 0);
            if (idx > 0) {
                // Containment: both parts only ever grow.
                CHECK(r.i >= c.rows[idx - 1].i);
                CHECK(r.j >= c.rows[idx - 1].j);
            }
        }
    }
}

TEST_CASE("chain rejects unusable approximant lists") {
    // The seed density is pinned to 1/2.
    CHECK_THROWS_AS(build_chain_from({Rational(1, 3), Rational(1, 3)}, Rational(1, 3)),
                    InputError);
    // Interior approximants must lie strictly inside (0, 1/2): the element
    // arithmetic cannot land on 1/2 again once the part sizes grow.
    CHECK_THROWS_AS(build_chain_from({Rational(1, 2), Rational(1, 2)}, Rational(1, 2)),
                    InputError);
    CHECK_THROWS_AS(build_chain_from({Rational(1, 2), Rational(0)}, Rational(0)), InputError);
    CHECK_THROWS_AS(build_chain(Rational(1, 3), -1), InputError);
}
