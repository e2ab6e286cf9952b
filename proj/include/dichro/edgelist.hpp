#pragma once

#include <iosfwd>
#include <string>

#include "dichro/digraph.hpp"

namespace dichro {

// Edge-list text format: first line "n m", then m lines "u v" (0-indexed,
// whitespace-separated, LF line endings). Lines starting with '#' are
// comments and are ignored.

/// Throws Error(parse_error) on malformed input; construction errors
/// (loops, duplicates, out-of-range vertices) propagate from Digraph.
Digraph read_edge_list(std::istream& is);
Digraph read_edge_list_file(const std::string& path);

void write_edge_list(const Digraph& d, std::ostream& os);
void write_edge_list_file(const Digraph& d, const std::string& path);

}  // namespace dichro
