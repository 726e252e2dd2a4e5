#pragma once

#include <cstdint>
#include <string>

#include "hyperopic/graph.hpp"

namespace hyperopic::cli {

// Graph selection shared by every subcommand: either a generated family
// (--family plus its parameters) or external input (--input path, "-" for
// standard input).
struct FamilySpec {
    std::string family;
    std::string input;
    int n = 6;
    int rows = 3;
    int cols = 3;
    int q = 2;
    int a = 2;
    int b = 3;
    int r = 3;
    int s = 2;
    double p = 0.4;
    std::uint64_t seed = 1;
    std::string remove; // clique removals, "0-1,2-3"
};

// Builds the requested graph; throws InputError on contradictory or missing
// selection, unknown families, or unreadable input.
Graph build_graph(const FamilySpec& spec);

// One-line provenance string for records ("family=cycle n=5", "input=g.g6").
std::string describe(const FamilySpec& spec);

} // namespace hyperopic::cli
