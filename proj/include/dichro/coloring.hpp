#pragma once

#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

/// Vertex coloring in which every color class induces an acyclic
/// subdigraph. Classes are numbered consecutively from 0.
struct Coloring {
  std::vector<int> assignment;  // vertex -> color in [0, colors_used)
  int colors_used = 0;
};

/// Arithmetic of the color bound (1/3 + 1/(3g)) * delta + (g + 1) and its
/// integer form (g+1) * (floor(delta/(3g)) + 1).
struct BoundReport {
  int g = 2;
  int delta = 0;
  int ell = 1;               // floor(delta / (3g)) + 1
  long long integer_bound = 0;  // (g+1) * ell
  double real_bound = 0.0;      // (1/3 + 1/(3g)) * delta + (g+1)
  double coefficient = 0.0;     // 1/3 + 1/(3g)
  // The coefficient as an exact reduced fraction (g+1)/(3g).
  long long coefficient_num = 0;
  long long coefficient_den = 1;
};

BoundReport bound_report(int g, int delta);

/// Acyclic coloring with at most floor(delta/3) + 2 colors for digraphs
/// whose digirth exceeds the maximum out-degree. Splits into blocks of
/// underlying degree at most 2, then breaks every directed cycle of the
/// blocks with one shared acyclic system of representatives.
/// Throws Error(precondition_violated) when digirth <= max out-degree.
Coloring color_highgirth(const Digraph& d);

/// In-degree peeling: remove vertices of current in-degree <= g onto a
/// stack until the remaining core has min in-degree >= g + 1.
struct PeelResult {
  std::vector<int> removal_order;  // in removal order
  std::vector<int> core;           // sorted ascending
};

PeelResult peel(const Digraph& d, int g);

/// Acyclic coloring with at most g + 1 colors for digraphs with maximum
/// degree <= 3g - 1 and digirth >= 2g - 1. Peels low in-degree vertices,
/// colors the core with color_highgirth, then reinserts each peeled vertex
/// into a class free of its already-placed in-neighbors.
Coloring peel_color(const Digraph& d, int g);

struct SplitColorResult {
  Coloring coloring;
  BoundReport bound;
};

/// The full pipeline: degree-split into ell = floor(delta/(3g)) + 1 blocks,
/// peel-color each block with g + 1 colors, concatenate palettes. Yields at
/// most (g+1) * ell <= (1/3 + 1/(3g)) * delta + (g+1) colors for digraphs of
/// digirth >= 2g - 1. Throws Error(digirth_too_small) otherwise.
SplitColorResult split_color(const Digraph& d, int g);

/// The g in [2, floor((digirth+1)/2)] minimizing the integer bound for this
/// digraph's maximum degree, ties to the larger g. For acyclic digraphs the
/// range is capped at max(2, ceil(delta/3) + 1), past which the bound only
/// grows. Throws Error(digirth_too_small) when digirth < 3.
int auto_g(const Digraph& d);

/// Baseline comparator: scan vertices in index order and give each the
/// smallest color whose class stays acyclic.
Coloring greedy_baseline(const Digraph& d);

}  // namespace dichro
