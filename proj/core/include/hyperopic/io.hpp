#pragma once

#include <string>

#include "hyperopic/graph.hpp"

namespace hyperopic {

// Plain edge-list format: header line "n m", then m lines "u v" with
// 0 <= u < v < n. Rejects malformed headers, out-of-range endpoints,
// loops and duplicates.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// Standard printable-ASCII graph6 encoding. Accepts an optional
// ">>graph6<<" prefix and surrounding whitespace on decode.
Graph graph6_decode(const std::string& text);
std::string graph6_encode(const Graph& g);

// Dispatch on content: a leading digit means edge list, otherwise graph6.
enum class GraphFormat { edge_list, graph6, automatic };
Graph parse_graph(const std::string& text, GraphFormat format = GraphFormat::automatic);

} // namespace hyperopic
