#include "doctest.h"
#include "hyperopic/generators.hpp"
#include "hyperopic/solver.hpp"
#include "oracle/naive_game.hpp"

#include <algorithm>

using namespace hyperopic;

TEST_CASE("fixed-cop verdicts on landmark instances") {
    // One hyperopic cop never wins a triangle: the robber is always hidden.
    CHECK(!solve_fixed_cops(clique(3), 1).cop_win);
    // But wins any path.
    CHECK(solve_fixed_cops(path(5), 1).cop_win);

    // K_5 needs three hyperopic cops.
    CHECK(!solve_fixed_cops(clique(5), 2).cop_win);
    CHECK(solve_fixed_cops(clique(5), 3).cop_win);

    // Classical K_5 falls to one cop.
    SolveOptions classical;
    classical.mode = GameMode::classical;
    CHECK(solve_fixed_cops(clique(5), 1, classical).cop_win);

    // Solved strictly, the status must say so.
    CHECK(solve_fixed_cops(clique(3), 1).status == SolveStatus::solved);
}

TEST_CASE("cop numbers on landmark families") {
    CHECK(cop_number(clique(1), GameMode::hyperopic).value() == 1);
    CHECK(cop_number(path(7), GameMode::hyperopic).value() == 1);
    CHECK(cop_number(random_tree(8, 5), GameMode::hyperopic).value() == 1);
    CHECK(cop_number(cycle(4), GameMode::hyperopic).value() == 2);
    CHECK(cop_number(cycle(4), GameMode::classical).value() == 2);
    CHECK(cop_number(clique_minus_edges(6, {{0, 1}}), GameMode::hyperopic).value() == 3);

    CopNumberResult pet_h = cop_number(petersen(), GameMode::hyperopic);
    CHECK(pet_h.exact());
    CHECK(pet_h.value() == 3);
    CopNumberResult pet_c = cop_number(petersen(), GameMode::classical);
    CHECK(pet_c.exact());
    CHECK(pet_c.value() == 3);
}

TEST_CASE("exact round counts") {
    // Scanning every placement yields the true optimum; the default run
    // stops at the first winner and reports that placement's bound.
    SolveOptions all;
    all.all_placements = true;

    // C_4 with cops on opposite corners: the first move covers both hidden
    // vertices, so capture in one round.
    SolveResult c4 = solve_fixed_cops(cycle(4), 2, all);
    CHECK(c4.cop_win);
    CHECK(c4.rounds == 1);

    // The default scan meets the doubled placement {0,0} first, which needs
    // a spreading move before the covering one.
    SolveResult c4_first = solve_fixed_cops(cycle(4), 2);
    CHECK(c4_first.cop_win);
    CHECK(c4_first.rounds == 2);
    CHECK(c4_first.placement == CopConfig{0, 0});

    // K_6 with three cops: the best placement leaves three free vertices,
    // the move covers them.
    SolveResult k6 = solve_fixed_cops(clique(6), 3, all);
    CHECK(k6.cop_win);
    CHECK(k6.rounds == 1);

    // Classical P_3 from the center: one step to either leaf.
    SolveOptions classical_all;
    classical_all.mode = GameMode::classical;
    classical_all.all_placements = true;
    SolveResult p3 = solve_fixed_cops(path(3), 1, classical_all);
    CHECK(p3.cop_win);
    CHECK(p3.rounds == 1);
    CHECK(p3.placement == CopConfig{1});

    // A placement covering the whole graph wins before any move.
    CHECK(solve_fixed_cops(clique(1), 1).rounds == 0);
    CHECK(solve_fixed_cops(clique(2), 2, all).rounds == 0);
}

TEST_CASE("solver matches the naive sweep oracle") {
    // Every connected graph on up to five vertices, one and two cops, both
    // perception modes: identical verdicts and identical optimal rounds.
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            for (int k = 1; k <= 2; ++k) {
                for (GameMode mode : {GameMode::hyperopic, GameMode::classical}) {
                    SolveOptions opts;
                    opts.mode = mode;
                    opts.all_placements = true;
                    SolveResult got = solve_fixed_cops(g, k, opts);
                    oracle::NaiveSolve want = oracle::naive_solve(g, k, mode);
                    REQUIRE(got.status == SolveStatus::solved);
                    CHECK(got.cop_win == want.cop_win);
                    if (want.cop_win) CHECK(got.rounds == want.rounds);
                }
            }
        }
    }
}

TEST_CASE("dominance pruning preserves verdicts") {
    for (const Graph& g : all_connected_graphs(5)) {
        for (int k = 1; k <= 2; ++k) {
            SolveOptions exact;
            exact.all_placements = true;
            SolveOptions pruned;
            pruned.use_dominance = true;
            SolveResult a = solve_fixed_cops(g, k, exact);
            SolveResult b = solve_fixed_cops(g, k, pruned);
            CHECK(a.cop_win == b.cop_win);
            // Pruned rounds stay a valid upper bound on the exact optimum.
            if (a.cop_win) CHECK(b.rounds >= a.rounds);
        }
    }
}

TEST_CASE("distinct placement restriction") {
    SolveOptions distinct;
    distinct.distinct_only = true;
    SolveResult r = solve_fixed_cops(cycle(4), 2, distinct);
    CHECK(r.cop_win);
    CHECK(r.rounds == 1);
    // Winning with distinct cops implies winning without the restriction.
    for (const Graph& g : all_connected_graphs(4)) {
        SolveResult d = solve_fixed_cops(g, 2, distinct);
        if (d.cop_win) CHECK(solve_fixed_cops(g, 2).cop_win);
    }
}

TEST_CASE("cop count monotonicity") {
    for (const Graph& g : {cycle(5), clique(5), petersen()}) {
        bool won = false;
        for (int k = 1; k <= (g.order() + 1) / 2; ++k) {
            bool win = solve_fixed_cops(g, k).cop_win;
            if (won) CHECK(win); // adding a cop never hurts
            won = won || win;
        }
        CHECK(won); // ceil(n/2) always suffices
    }
}

TEST_CASE("cop number bracketing") {
    CopNumberResult r = cop_number(cycle(6), GameMode::hyperopic);
    CHECK(r.status == SolveStatus::solved);
    CHECK(r.exact());
    CHECK(r.lower == r.upper);
    CHECK(r.value() == r.upper);
    CHECK(r.lower >= 1);
    CHECK(r.upper <= 3);
}

TEST_CASE("resource limits are reported, not hidden") {
    SolveOptions tight;
    tight.limits.max_positions = 5;
    SolveResult r = solve_fixed_cops(petersen(), 2, tight);
    CHECK(r.status == SolveStatus::position_limit);
    CHECK(!r.cop_win);

    SolveLimits tiny;
    tiny.max_positions = 5;
    CopNumberResult n = cop_number(petersen(), GameMode::hyperopic, tiny);
    CHECK(n.status == SolveStatus::position_limit);
    CHECK(!n.exact());
}

TEST_CASE("strategy extraction yields a playable winning table") {
    // Classical P_3: start at the center, one entry per visible leaf.
    SolveOptions classical;
    classical.mode = GameMode::classical;
    auto p3 = extract_strategy(path(3), 1, classical);
    REQUIRE(p3.has_value());
    CHECK(p3->mode == GameMode::classical);
    CHECK(p3->k == 1);
    CHECK(p3->initial == CopConfig{1});
    CHECK(p3->rounds_bound == 1);
    const StrategyTable::Entry* e0 = p3->find({1}, VertexSet::singleton(3, 0));
    REQUIRE(e0);
    CHECK(e0->move == CopConfig{0});

    // Hyperopic C_4: the scan keeps the first one-round placement, the
    // adjacent pair {0,1}. Its empty common neighborhood makes both free
    // vertices visible, and each entry steps a cop onto the robber.
    auto c4 = extract_strategy(cycle(4), 2);
    REQUIRE(c4.has_value());
    CHECK(c4->rounds_bound == 1);
    CHECK(c4->initial == CopConfig{0, 1});
    const StrategyTable::Entry* e2 = c4->find({0, 1}, VertexSet::singleton(4, 2));
    REQUIRE(e2);
    CHECK(e2->move == CopConfig{0, 2});
    const StrategyTable::Entry* e3 = c4->find({0, 1}, VertexSet::singleton(4, 3));
    REQUIRE(e3);
    CHECK(e3->move == CopConfig{0, 3});

    // Losing counts extract nothing.
    CHECK(!extract_strategy(clique(3), 1).has_value());

    // Tables from one cop never stack cops; a doubled placement can.
    auto p4 = extract_strategy(path(4), 1);
    REQUIRE(p4.has_value());
    CHECK(lonely_check(*p4));
}
