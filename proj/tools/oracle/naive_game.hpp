#pragma once

#include "hyperopic/game.hpp"
#include "hyperopic/graph.hpp"

namespace hyperopic::oracle {

struct NaiveSolve {
    bool cop_win = false;
    // Min over placements of the worst-case number of cop moves; -1 on loss.
    int rounds = -1;
};

// Independent evaluation of the belief-state game: plain value-iteration
// sweeps over the complete explicitly-enumerated state space, with its own
// inline transition rules. Shares nothing with the production solver except
// the Graph. Classical mode iterates singleton beliefs only (nothing else is
// reachable when the robber is always visible).
NaiveSolve naive_solve(const Graph& g, int k, GameMode mode);

// Least k winning per naive_solve, scanning k = 1 upward.
int naive_cop_number(const Graph& g, GameMode mode);

} // namespace hyperopic::oracle
