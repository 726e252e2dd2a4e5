#include "acceptance/criteria.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "hyperopic/density.hpp"
#include "hyperopic/generators.hpp"
#include "hyperopic/metrics.hpp"
#include "hyperopic/solver.hpp"
#include "hyperopic/strategy.hpp"
#include "hyperopic/verify.hpp"
#include "oracle/brute_density.hpp"
#include "oracle/naive_game.hpp"

namespace hyperopic::acceptance {
namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int hyperopic_number(const Graph& g) {
    CopNumberResult r = cop_number(g, GameMode::hyperopic);
    if (!r.exact()) throw Error("acceptance: hyperopic cop number hit a resource limit");
    return r.value();
}

int classical_number(const Graph& g) {
    CopNumberResult r = cop_number(g, GameMode::classical);
    if (!r.exact()) throw Error("acceptance: classical cop number hit a resource limit");
    return r.value();
}

// Two triangles sharing one vertex; the shared vertex cuts.
Graph bowtie() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Two triangles joined by a bridge edge.
Graph barbell() {
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

// C_4 with a pendant vertex.
Graph c4_leaf() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}});
}

// C_5 with a pendant vertex.
Graph c5_leaf() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});
}

bool criterion_trees(std::ostream& log) {
    bool ok = true;
    double worst = 0.0;
    for (int s = 1; s <= 20; ++s) {
        int n = 4 + (s * 5) % 9; // deterministic spread over 4..12
        Graph t = random_tree(n, std::uint64_t(s));
        auto t0 = std::chrono::steady_clock::now();
        int ch = hyperopic_number(t);
        double dt = seconds_since(t0);
        worst = std::max(worst, dt);
        if (ch != 1) {
            log << "  tree seed " << s << " (n=" << n << "): expected 1, got " << ch << "\n";
            ok = false;
        }
        if (dt >= 5.0) {
            log << "  tree seed " << s << " took " << dt << "s\n";
            ok = false;
        }
    }
    log << "  20 random trees solved to 1, slowest " << worst << "s\n";

    int found = 0;
    for (int s = 1; found < 20 && s <= 200; ++s) {
        int n = 5 + s % 4; // 5..8
        Graph g = random_connected(n, 0.45, std::uint64_t(s));
        if (compute_metrics(g).is_tree) continue;
        ++found;
        auto t0 = std::chrono::steady_clock::now();
        bool one_cop = solve_fixed_cops(g, 1).cop_win;
        double dt = seconds_since(t0);
        if (one_cop) {
            log << "  non-tree seed " << s << " (n=" << n << "): one hidden-robber cop wins\n";
            ok = false;
        }
        if (dt >= 5.0) {
            log << "  non-tree seed " << s << " took " << dt << "s\n";
            ok = false;
        }
    }
    if (found < 20) {
        log << "  only " << found << " non-trees generated\n";
        ok = false;
    }
    log << "  20 random connected non-trees all need at least 2 cops\n";
    return ok;
}

bool criterion_cliques(std::ostream& log) {
    bool ok = true;
    for (int n = 2; n <= 7; ++n) {
        int got = hyperopic_number(clique(n));
        int want = (n + 1) / 2;
        log << "  K_" << n << ": " << got << " (expected " << want << ")\n";
        if (got != want) ok = false;
    }
    return ok;
}

bool criterion_clique_minus(std::ostream& log) {
    bool ok = true;
    for (int n = 4; n <= 7; ++n) {
        int got = hyperopic_number(clique_minus_edges(n, {{0, 1}}));
        int want = n / 2;
        log << "  K_" << n << " minus an edge: " << got << " (expected " << want << ")\n";
        if (got != want) ok = false;
    }
    for (int n = 5; n <= 7; ++n) {
        int bound = (n + 1) / 2 - 1;
        int shared = hyperopic_number(clique_minus_edges(n, {{0, 1}, {0, 2}}));
        int disjoint = hyperopic_number(clique_minus_edges(n, {{0, 1}, {2, 3}}));
        log << "  K_" << n << " minus two edges: shared " << shared << ", disjoint " << disjoint
            << " (bound " << bound << ")\n";
        if (shared > bound || disjoint > bound) ok = false;
    }
    return ok;
}

bool criterion_petersen(std::ostream& log) {
    int h = hyperopic_number(petersen());
    int c = classical_number(petersen());
    log << "  petersen: hidden-robber " << h << ", classical " << c << " (both expected 3)\n";
    return h == 3 && c == 3;
}

bool criterion_incidence(std::ostream& log) {
    Graph g = incidence_plane(2);
    SolveOptions classical;
    classical.mode = GameMode::classical;
    bool two_lose = !solve_fixed_cops(g, 2, classical).cop_win;
    bool three_win = solve_fixed_cops(g, 3, classical).cop_win;
    log << "  order-2 plane (14 vertices): classical 2 cops "
        << (two_lose ? "lose" : "WIN") << ", 3 cops " << (three_win ? "win" : "LOSE") << "\n";

    // Upper bound via the executable line-cover strategy; the classical
    // number is a lower bound on the hidden-robber number.
    auto s = make_strategy("incidence_plane", g);
    VerifyResult v = verify_strategy(g, *s);
    bool captured = v.kind == VerifyResult::Kind::capture;
    log << "  line-cover strategy with " << s->cop_count() << " cops: "
        << (captured ? "capture" : "NO capture") << " (worst " << v.worst_rounds
        << " rounds, " << v.states << " states)\n";
    bool ok = two_lose && three_win && captured && s->cop_count() == 3;
    if (ok) log << "  hidden-robber number = 3 (strategy upper bound meets classical lower bound)\n";
    return ok;
}

bool criterion_planar(std::ostream& log) {
    bool ok = true;
    for (int s = 1; s <= 10; ++s) {
        int n = 5 + s % 6; // 5..10
        Graph m = maximal_outerplanar(n, std::uint64_t(s));
        if (!solve_fixed_cops(m, 2).cop_win) {
            log << "  outerplanar seed " << s << " (n=" << n << "): 2 cops do not win\n";
            ok = false;
        }
    }
    log << "  10 maximal outerplanar graphs: 2 hidden-robber cops suffice\n";
    for (auto [r, c] : {std::pair{3, 3}, {3, 4}}) {
        Graph g = grid(r, c);
        bool win = solve_fixed_cops(g, 3).cop_win;
        log << "  grid " << r << "x" << c << ": 3 cops " << (win ? "win" : "LOSE") << "\n";
        if (!win) ok = false;
    }
    return ok;
}

struct BoundFailure {
    std::string graph;
    std::string rule;
};

void check_bounds(const Graph& g, const std::string& label, std::vector<BoundFailure>& fails) {
    GraphMetrics m = compute_metrics(g);
    int c = classical_number(g);
    int ch = hyperopic_number(g);
    int n = g.order();
    auto fail = [&](const std::string& rule) { fails.push_back({label, rule}); };

    if (!(1 <= c && c <= ch)) fail("classical <= hidden-robber");
    if (ch > (n + 1) / 2) fail("ceil(n/2) ceiling");
    if (!m.cut_vertices.empty() && ch > c + 1) fail("cut vertex => c+1");
    if (m.triangle_free && ch > c + 1) fail("triangle-free => c+1");
    if (m.diameter >= 3 && ch > c + 2) fail("diameter >= 3 => c+2");
    if (m.diameter >= 3 && m.min_degree <= c && ch > c + 1) fail("diam >= 3, delta <= c => c+1");
    if (m.diameter == 2 && ch > std::min(m.min_degree + 1, m.max_degree))
        fail("diameter 2 => min(delta+1, Delta)");
    bool girth_high = !m.girth.has_value() || *m.girth >= 5;
    if (m.diameter >= 3 && girth_high && ch > c + 1) fail("diam >= 3, girth >= 5 => c+1");
}

bool criterion_bounds(std::ostream& log) {
    std::vector<BoundFailure> fails;
    int checked = 0;
    for (int n = 1; n <= 6; ++n) {
        int idx = 0;
        for (const Graph& g : all_connected_graphs(n)) {
            check_bounds(g, "n=" + std::to_string(n) + "#" + std::to_string(idx++), fails);
            ++checked;
        }
    }
    log << "  exhaustive: all " << checked << " connected graphs on <= 6 vertices\n";
    for (int s = 1; s <= 50; ++s) {
        int n = 7 + s % 2;
        Graph g = random_connected(n, 0.35, std::uint64_t(s));
        check_bounds(g, "random seed " + std::to_string(s), fails);
        ++checked;
    }
    log << "  plus 50 random connected graphs on 7..8 vertices\n";
    for (const BoundFailure& f : fails) log << "  VIOLATION " << f.graph << ": " << f.rule << "\n";
    log << "  " << checked << " graphs, " << fails.size() << " violations\n";
    return fails.empty();
}

bool criterion_oracle(std::ostream& log) {
    int disagreements = 0;
    int checked = 0;
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            for (int k = 1; k <= 2; ++k) {
                SolveOptions opts;
                opts.all_placements = true;
                SolveResult got = solve_fixed_cops(g, k, opts);
                oracle::NaiveSolve want = oracle::naive_solve(g, k, GameMode::hyperopic);
                ++checked;
                if (got.status != SolveStatus::solved || got.cop_win != want.cop_win ||
                    (want.cop_win && got.rounds != want.rounds)) {
                    ++disagreements;
                    log << "  MISMATCH n=" << n << " k=" << k << ": solver ("
                        << got.cop_win << "," << got.rounds << ") naive (" << want.cop_win
                        << "," << want.rounds << ")\n";
                }
            }
        }
    }
    log << "  " << checked << " instances (all connected n <= 6, k <= 2): " << disagreements
        << " disagreements\n";
    return disagreements == 0;
}

bool criterion_strategies(std::ostream& log) {
    struct Row {
        const char* name;
        const char* label;
        Graph g;
    };
    std::vector<Row> rows;
    auto add = [&rows](const char* name, const char* label, Graph g) {
        rows.push_back({name, label, std::move(g)});
    };

    add("tree", "P_6", path(6));
    add("tree", "random tree 7", random_tree(7, 1));
    add("tree", "random tree 9", random_tree(9, 2));

    add("dominating_set", "K_5", clique(5));
    add("dominating_set", "K_6", clique(6));
    add("dominating_set", "K_7", clique(7));

    add("clique_minus_edge", "K_4-e", clique_minus_edges(4, {{0, 1}}));
    add("clique_minus_edge", "K_6-e", clique_minus_edges(6, {{0, 1}}));
    add("clique_minus_edge", "K_7-e", clique_minus_edges(7, {{2, 5}}));

    add("clique_minus_two_edges", "K_5 shared", clique_minus_edges(5, {{0, 1}, {0, 2}}));
    add("clique_minus_two_edges", "K_5 disjoint", clique_minus_edges(5, {{0, 1}, {2, 3}}));
    add("clique_minus_two_edges", "K_6 shared", clique_minus_edges(6, {{0, 1}, {0, 2}}));
    add("clique_minus_two_edges", "K_7 disjoint", clique_minus_edges(7, {{0, 1}, {2, 3}}));

    add("cut_vertex_composite", "bowtie", bowtie());
    add("cut_vertex_composite", "barbell", barbell());
    add("cut_vertex_composite", "C_4 plus leaf", c4_leaf());

    add("triangle_free_shadow", "C_6", cycle(6));
    add("triangle_free_shadow", "K_{2,3}", complete_bipartite(2, 3));
    add("triangle_free_shadow", "grid 2x3", grid(2, 3));

    add("diameter3_sentinels", "C_7", cycle(7));
    add("diameter3_sentinels", "C_8", cycle(8));
    add("diameter3_sentinels", "grid 2x4", grid(2, 4));

    add("min_degree_sentinel", "C_8", cycle(8));
    add("min_degree_sentinel", "C_4 plus leaf", c4_leaf());
    add("min_degree_sentinel", "C_5 plus leaf", c5_leaf());

    add("diameter2_delta", "C_4", cycle(4));
    add("diameter2_delta", "C_5", cycle(5));
    add("diameter2_delta", "K_{3,3}", complete_bipartite(3, 3));
    add("diameter2_delta", "petersen", petersen());

    add("diameter2_maxdeg", "C_4", cycle(4));
    add("diameter2_maxdeg", "C_5", cycle(5));
    add("diameter2_maxdeg", "K_{3,3}", complete_bipartite(3, 3));

    add("join_isolated", "C_4 join 2K_1", join(cycle(4), co_clique(2)));
    add("join_isolated", "P_3 join 2K_1", join(path(3), co_clique(2)));
    add("join_isolated", "K_4 join 2K_1", join(clique(4), co_clique(2)));

    add("incidence_plane", "order 2", incidence_plane(2));
    add("incidence_plane", "order 3", incidence_plane(3));
    add("incidence_plane", "order 5", incidence_plane(5));

    add("lonely_lift", "outerplanar 7", maximal_outerplanar(7, 1));
    add("lonely_lift", "outerplanar 8", maximal_outerplanar(8, 2));
    add("lonely_lift", "outerplanar 9", maximal_outerplanar(9, 3));

    bool ok = true;
    std::string current;
    int captures = 0;
    for (const Row& row : rows) {
        if (row.name != current) {
            if (!current.empty() && captures < 3) {
                log << "  " << current << ": only " << captures << " capture verdicts\n";
                ok = false;
            }
            current = row.name;
            captures = 0;
        }
        try {
            auto s = make_strategy(row.name, row.g);
            VerifyResult v = verify_strategy(row.g, *s);
            bool captured = v.kind == VerifyResult::Kind::capture;
            std::ostringstream line;
            line << "  " << row.name << " on " << row.label << ": "
                 << (captured ? "capture" : "NO CAPTURE") << " with " << s->cop_count()
                 << " cops, worst " << v.worst_rounds << " rounds";
            if (captured) ++captures;
            else ok = false;

            if (row.g.order() <= 10) {
                int ch = hyperopic_number(row.g);
                line << ", exact number " << ch;
                if (s->cop_count() < ch) {
                    line << " EXCEEDS STRATEGY";
                    ok = false;
                }
            }
            log << line.str() << "\n";
        } catch (const Error& e) {
            log << "  " << row.name << " on " << row.label << ": ERROR " << e.what() << "\n";
            ok = false;
        }
    }
    if (!current.empty() && captures < 3) {
        log << "  " << current << ": only " << captures << " capture verdicts\n";
        ok = false;
    }
    return ok;
}

bool criterion_density(std::ostream& log) {
    bool ok = true;
    for (auto [r, s] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4},
                        {4, 2}, {4, 3}, {4, 4}, {5, 2}}) {
        int formula = clique_join_cop_number(r, s);
        int solved = hyperopic_number(clique_join_coclique(r, s));
        if (formula != solved) {
            log << "  join K_" << r << " + " << s << " isolated: formula " << formula
                << " vs solver " << solved << "\n";
            ok = false;
        }
    }
    log << "  join-element formula matches the solver on all 10 instances\n";

    std::vector<std::pair<std::string, Rational>> targets = {
        {"0", Rational(0)},
        {"1/4", Rational(1, 4)},
        {"1/3", Rational(1, 3)},
        {"1/2", Rational(1, 2)},
        {"1/pi", *named_target("1/pi")},
    };
    for (const auto& [label, target] : targets) {
        Chain chain = build_chain(target, 20);
        bool good = chain.rows.size() == 21 && chain.rows[0].i == 2 && chain.rows[0].j == 2 &&
                    chain.rows[0].density == Rational(1, 2);
        for (std::size_t idx = 0; idx < chain.rows.size(); ++idx) {
            const ChainRow& row = chain.rows[idx];
            if (row.density != row.p || row.density != element_density(row.i, row.j)) good = false;
            if (row.x_added % 2 != 0 || row.x_added < 0 || row.y_added < 0) good = false;
            if (row.cop_number != clique_join_cop_number(row.i, row.j)) good = false;
            if (idx > 0 &&
                (row.i < chain.rows[idx - 1].i || row.j < chain.rows[idx - 1].j)) good = false;
        }
        log << "  chain to " << label << ": 20 elements, exact densities "
            << (good ? "ok" : "BROKEN") << ", final order "
            << chain.rows.back().order << "\n";
        if (!good) ok = false;
    }

    std::mt19937_64 rng(29);
    int done = 0, mismatches = 0;
    while (done < 100) {
        int b = int(rng() % 28) + 3;
        int a = int(rng() % (b / 2)) + 1;
        if (2 * a >= b) continue;
        Rational target(a, b);
        int i = 2 * (int(rng() % 6) + 1);
        int j = int(rng() % 24) + 2;
        if (density_margin(i, j, target) <= 0) continue;
        DiophantineSolution got = solve_diophantine(target, i, j);
        auto want = oracle::brute_balance(target, i, j, 2000);
        if (!want || got.x != want->first || got.y != want->second) {
            ++mismatches;
            log << "  balance mismatch at target " << target.to_string() << " from (" << i
                << "," << j << ")\n";
        }
        ++done;
    }
    log << "  balance equation vs brute scan: " << done << " instances, " << mismatches
        << " mismatches\n";
    return ok && mismatches == 0;
}

} // namespace

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "random trees need one cop, non-trees need two", &criterion_trees},
        {2, "clique numbers are ceil(n/2) for n=2..7", &criterion_cliques},
        {3, "cliques minus one or two edges", &criterion_clique_minus},
        {4, "petersen graph needs three cops in both modes", &criterion_petersen},
        {5, "order-2 incidence plane resolves to three cops", &criterion_incidence},
        {6, "outerplanar and grid upper bounds", &criterion_planar},
        {7, "structural bound suite has zero violations", &criterion_bounds},
        {8, "solver agrees with the naive sweep oracle", &criterion_oracle},
        {9, "every catalog strategy earns capture certificates", &criterion_strategies},
        {10, "density chains realize their targets exactly", &criterion_density},
    };
    return list;
}

} // namespace hyperopic::acceptance
