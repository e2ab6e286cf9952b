#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dichro/coloring.hpp"
#include "dichro/digraph.hpp"

namespace dichro {

struct VerificationReport {
  bool valid = true;
  // One entry per cyclic color class: (color, witness directed cycle).
  std::vector<std::pair<int, std::vector<int>>> violations;
};

/// Checks that every color class induces an acyclic subdigraph. Throws
/// Error(incomplete_coloring) if the assignment does not cover 0..n-1.
VerificationReport verify_coloring(const Digraph& d, const Coloring& coloring);

/// Exhaustive search for an acyclic coloring with at most c classes.
/// Branches on vertices in descending degree order and prunes the moment a
/// class would close a directed cycle; class j may only be opened once
/// classes 0..j-1 are nonempty.
std::optional<Coloring> exists_acyclic_partition(const Digraph& d, int c);

inline constexpr int kDefaultExactCap = 14;

/// Exact dichromatic number: the smallest c for which
/// exists_acyclic_partition succeeds. Throws Error(too_large) when
/// n exceeds n_cap.
int dichromatic_number(const Digraph& d, int n_cap = kDefaultExactCap);

}  // namespace dichro
