#pragma once

#include <optional>
#include <utility>

#include "hyperopic/rational.hpp"

namespace hyperopic::oracle {

// Smallest (x, y), x even, x,y >= 0, with
//   (floor((i+x)/2) + 1) / (i + j + x + y) == target,
// found by exhaustive scan up to cap. Minimal x first, then minimal y;
// at most one y fits a given x, so this is componentwise minimal.
std::optional<std::pair<long long, long long>> brute_balance(const Rational& target, int i, int j,
                                                             long long cap = 500);

} // namespace hyperopic::oracle
