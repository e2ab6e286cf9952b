#pragma once

#include <optional>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

/// Exact partition of 0..n-1 into k labeled blocks; blocks may be empty.
struct Partition {
  int k = 1;
  std::vector<int> assignment;  // vertex -> block index in [0, k)

  std::vector<std::vector<int>> blocks() const;
};

struct DegreeSplitOptions {
  // Default initialization is round-robin (v mod k); a seed switches to a
  // seeded random initial assignment for benchmarks.
  std::optional<unsigned> random_init_seed;
  int* moves_out = nullptr;  // when set, receives the local-search move count
};

/// Splits the vertex set into k blocks so that every vertex keeps at most
/// floor(deg(v)/k) of its underlying degree inside its own block. Degrees
/// follow the digraph convention: a digon counts two incidences, and both
/// of its arcs count toward the intra-block degree when the endpoints share
/// a block. The local search strictly decreases the number of intra-block
/// arcs with every move, so it performs at most m moves. Deterministic for
/// a fixed input and seed. Throws Error(invalid_k) when k < 1.
Partition degree_split(const Digraph& d, int k,
                       const DegreeSplitOptions& options = {});

}  // namespace dichro
