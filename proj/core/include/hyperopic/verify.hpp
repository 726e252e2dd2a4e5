#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperopic/graph.hpp"
#include "hyperopic/strategy.hpp"

namespace hyperopic {

struct VerifyOptions {
    std::size_t max_states = 1'000'000;
    // Also reconstruct a worst-case play line as printable text.
    bool transcript = false;
};

struct VerifyResult {
    enum class Kind { capture, escape, limit };

    Kind kind = Kind::capture;
    // Worst-case rounds over every adversarial robber line (capture only).
    int worst_rounds = 0;
    // Robber placement followed by moves reaching a repeated state (escape).
    std::vector<Vertex> escape_trail;
    std::vector<std::string> transcript;
    std::size_t states = 0;
};

// Plays the strategy against an exhaustive adversarial robber. Every robber
// placement and reply is branched on; a repeated decision state counts as an
// escape. The strategy prototype itself is never mutated.
VerifyResult verify_strategy(const Graph& g, const Strategy& prototype,
                             const VerifyOptions& opts = {});

} // namespace hyperopic
