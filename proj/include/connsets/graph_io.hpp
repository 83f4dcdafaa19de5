#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "connsets/graph.hpp"

namespace connsets {

// graph6: N(n) header (one byte 63+n for n <= 62, else 126 + three 6-bit
// groups), then the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ... packed six
// bits per byte, most significant first, each byte offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Plain text edge list: "n m" header then m lines "u v". Whitespace-separated;
// lines starting with '#' are ignored.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

// Reads one graph6 string per line, skipping blank lines, lines starting with
// '#', and an optional ">>graph6<<" prefix.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace connsets
