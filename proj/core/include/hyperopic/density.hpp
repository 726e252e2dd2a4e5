#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperopic/errors.hpp"
#include "hyperopic/rational.hpp"

namespace hyperopic {

// The join element is at or above the target density; co-clique vertices
// must be added before the balance equation has a nonnegative solution.
struct NeedPaddingError : Error {
    explicit NeedPaddingError(const std::string& what) : Error(what) {}
};

// Cop number (hidden-robber rules) of the join of a clique on r vertices
// with an independent set on s vertices: floor(r/2) + 1. Both parts >= 2.
int clique_join_cop_number(int r, int s);

// Reduced (floor(i/2) + 1) / (i + j): cops per vertex of that join.
Rational element_density(int i, int j);

// a*(i + j) - b*(floor(i/2) + 1) for target a/b; positive exactly when
// element_density(i, j) < a/b. Target must satisfy 0 < 2a < b.
long long density_margin(int i, int j, const Rational& target);

struct DiophantineSolution {
    long long x = 0; // clique vertices to add, always even
    long long y = 0; // co-clique vertices to add
};

// Componentwise-minimal nonnegative solution with x even of the balance
// equation making element_density(i + x, j + y) equal the target exactly.
// Throws NeedPaddingError when the margin is not yet positive.
DiophantineSolution solve_diophantine(const Rational& target, int i, int j);

// Minimal j' >= j whose margin against the target is positive.
int pad_for_positive_beta(const Rational& target, int i, int j);

// p_0 = 1/2 followed by `count` terms strictly inside (0, 1/2) converging
// to the target: its continued-fraction convergents clamped to the open
// interval, padded with the target itself; fixed fallback families serve
// the endpoints 0 and 1/2.
std::vector<Rational> approximant_sequence(const Rational& target, int count);

// Pinned rational stand-ins for named irrational targets
// ("1/pi", "1/e", "sqrt2/4").
std::optional<Rational> named_target(const std::string& name);

struct ChainRow {
    int n = 0;
    Rational p;             // requested approximant
    int i = 0;              // clique vertices
    int j = 0;              // co-clique vertices
    long long x_added = 0;  // clique vertices from the balance equation
    long long y_added = 0;  // co-clique vertices from the balance equation
    int cop_number = 0;
    int order = 0;
    Rational density;       // realized; equals p exactly
};

struct Chain {
    Rational target;
    std::vector<ChainRow> rows;
};

// Seed element (2,2) at density 1/2, then per approximant: adjoin the next
// vertex of the alternating clique/co-clique enumeration, pad the co-clique
// side until the margin turns positive, and solve the balance equation.
// Every element lands exactly on its approximant; i and j never decrease.
Chain build_chain_from(const std::vector<Rational>& approximants, const Rational& target);

// build_chain_from over approximant_sequence(target, count).
Chain build_chain(const Rational& target, int count);

} // namespace hyperopic
