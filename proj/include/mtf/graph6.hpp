#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mtf/graph.hpp"

namespace mtf {

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed big-endian
// into 6-bit groups, each offset by 63.

std::string graph6_encode(const Graph& g);

/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
/// Throws InputError on malformed text, RangeError on n outside [1, 64].
Graph graph6_decode(std::string_view text);

/// Reads a newline-separated graph6 stream; blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace mtf
