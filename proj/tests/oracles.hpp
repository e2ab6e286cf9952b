#pragma once

#include <optional>
#include <vector>

#include "dichro/digraph.hpp"

// Test-only reference implementations, kept independent of the library's
// search code so they can serve as oracles for it.

namespace dichro::testing {

/// Digirth by exhaustive enumeration of all simple directed cycles (rooted
/// DFS, each cycle visited from its smallest vertex). Exponential; for
/// small n only. nullopt = acyclic.
std::optional<int> digirth_by_enumeration(const Digraph& d);

/// Exact dichromatic number by enumerating every set partition of the
/// vertices (restricted growth strings) and keeping the smallest one whose
/// blocks are all acyclic.
int chi_by_partition_enumeration(const Digraph& d);

/// Recursive three-color DFS acyclicity over an induced subset.
bool subset_acyclic_oracle(const Digraph& d, const std::vector<int>& subset);

}  // namespace dichro::testing
