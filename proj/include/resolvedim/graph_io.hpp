#pragma once

#include <string>
#include <string_view>

#include "resolvedim/graph.hpp"

namespace resolvedim {

/// graph6 interchange format, single-byte size header (n <= 62 only).
/// Adjacency bits are the upper triangle in column-major order, packed
/// into 6-bit chunks offset by 63, zero-padded.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Edge-list text format: first line is n, each following non-empty line
/// is "u v" with 0-indexed endpoints; lines starting with '#' are ignored.
Graph parse_edge_list_text(std::string_view text);
std::string to_edge_list_text(const Graph& g);

} // namespace resolvedim
