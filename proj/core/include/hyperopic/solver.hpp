#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hyperopic/game.hpp"
#include "hyperopic/graph.hpp"

namespace hyperopic {

struct SolveLimits {
    std::size_t max_positions = 2'000'000;
    double max_seconds = 60.0;
};

enum class SolveStatus { solved, position_limit, time_limit };

struct SolveOptions {
    GameMode mode = GameMode::hyperopic;
    // Restrict placements and moves to configs on pairwise distinct vertices.
    bool distinct_only = false;
    // Belief-dominance shortcuts prune the search but turn the reported
    // rounds into a certified upper bound instead of the exact optimum.
    bool use_dominance = false;
    // Evaluate every placement instead of stopping at the first winner, so
    // the minimum-round placement is identified (extraction needs this).
    bool all_placements = false;
    SolveLimits limits;
};

struct SolveResult {
    SolveStatus status = SolveStatus::solved;
    bool cop_win = false;
    // Worst-case rounds to capture from the best placement found; one round
    // is one cop move. 0 means the placement occupies every vertex.
    int rounds = -1;
    CopConfig placement;
    std::size_t positions = 0;
};

// Decides whether k cops win on g under the given rules.
SolveResult solve_fixed_cops(const Graph& g, int k, const SolveOptions& opts = {});

struct CopNumberResult {
    SolveStatus status = SolveStatus::solved;
    // Cops lose with fewer than `lower`; cops win with `upper` (-1 when no
    // sufficient count was established before a limit hit). Equal on solve.
    int lower = 1;
    int upper = -1;
    std::size_t positions = 0;

    bool exact() const { return status == SolveStatus::solved; }
    int value() const { return upper; }
};

CopNumberResult cop_number(const Graph& g, GameMode mode, const SolveLimits& limits = {});

// A full winning prescription: for every reachable position (cop config,
// belief) with the cops to move, the move to make. `rank` strictly decreases
// along every play, bounding the rounds left.
struct StrategyTable {
    struct Entry {
        CopConfig move;
        int rank = 0;
    };

    GameMode mode = GameMode::hyperopic;
    int k = 0;
    CopConfig initial;
    int rounds_bound = 0;
    std::map<std::pair<CopConfig, VertexSet>, Entry> entries;

    const Entry* find(const CopConfig& cops, const VertexSet& belief) const;
};

// Solves with exact rounds and replays the value function into a closed
// winning table. Empty when k cops lose. Throws on limit exhaustion.
std::optional<StrategyTable> extract_strategy(const Graph& g, int k,
                                              const SolveOptions& opts = {});

// True iff the table never stacks two cops on one vertex, in its initial
// placement or any prescribed move.
bool lonely_check(const StrategyTable& table);

} // namespace hyperopic
