#pragma once

#include <filesystem>
#include <iosfwd>

#include "nedindex/graph.hpp"

namespace nedindex {

/// Reads a whitespace-separated edge list. Lines starting with '#' or '%'
/// are comments, blank lines are skipped, every other line must hold exactly
/// two vertex tokens. Tokens are densified in first-appearance order.
///
/// A leading "# vertices N edges M" comment (as written by write_edge_list)
/// declares vertices "0".."N-1" up front, which keeps dense ids and isolated
/// vertices intact across a save/load round trip.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::filesystem::path& path);

/// Canonical form: the header comment, then one "u v" line per edge with
/// u < v, sorted, using dense ids.
void write_edge_list(std::ostream& out, const Graph& g);
void save_edge_list_file(const std::filesystem::path& path, const Graph& g);

}  // namespace nedindex
