#pragma once

#include <optional>
#include <vector>

#include "dichro/degree_split.hpp"
#include "dichro/digraph.hpp"

namespace dichro {

/// One representative per input block; blocks are disjoint, so the chosen
/// vertices are pairwise distinct.
struct RepresentativeSystem {
  std::vector<int> chosen;  // chosen[i] represents block i

  std::vector<int> as_sorted_set() const;
};

struct SdrOptions {
  // With best_effort the search runs even when the digirth or block-size
  // preconditions fail; existence is then no longer guaranteed and the
  // exhaustive fallback may throw Error(not_found).
  bool best_effort = false;
};

/// Finds a system of representatives X of the blocks of `parts` such that
/// D[X] is acyclic. Preconditions (checked): digirth(D) >= gamma and every
/// block has at least ceil(gamma/(gamma-1) * max out-degree) vertices; under
/// them a valid system always exists and the search is guaranteed to return
/// one. Phase 1 repairs the lowest-index selection locally; phase 2 falls
/// back to exhaustive backtracking over block choices with acyclicity
/// pruning. The result is re-verified before returning.
RepresentativeSystem acyclic_sdr(const Digraph& d, const Partition& parts,
                                 int gamma, const SdrOptions& options = {});

namespace detail {

/// Phase-2 search on its own: backtracking over block choices in index
/// order, pruning as soon as the chosen set closes a directed cycle.
/// nullopt when no acyclic system exists.
std::optional<std::vector<int>> exhaustive_sdr(
    const Digraph& d, const std::vector<std::vector<int>>& blocks);

}  // namespace detail

}  // namespace dichro
