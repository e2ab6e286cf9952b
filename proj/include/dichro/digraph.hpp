#pragma once

#include <utility>
#include <vector>

#include "dichro/errors.hpp"

namespace dichro {

using Arc = std::pair<int, int>;

/// Loop-free digraph on vertices 0..n-1 without parallel arcs. Opposite
/// arcs (digons) are allowed. Instances are immutable after construction
/// and safe to share across threads. Adjacency lists are sorted by vertex
/// index, so every traversal order is deterministic.
class Digraph {
 public:
  Digraph() = default;

  /// Validates and builds. Throws Error with code loop_arc, duplicate_arc
  /// or vertex_out_of_range.
  Digraph(int n, std::vector<Arc> arcs);

  int n() const { return n_; }
  int m() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }

  bool has_arc(int u, int v) const;

  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

  // Underlying degree; a digon contributes one in- and one out-incidence.
  int degree(int v) const { return out_degree(v) + in_degree(v); }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;  // sorted lexicographically
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

struct DegreeStats {
  int delta = 0;      // max underlying degree
  int delta_out = 0;  // max out-degree
  int delta_in = 0;   // max in-degree
  int min_out = 0;
  int min_in = 0;
  double delta_tilde = 0.0;  // max_v sqrt(d+(v) * d-(v)), reporting only
};

/// Exact degree statistics. Throws Error(empty_digraph) when n = 0.
DegreeStats degree_stats(const Digraph& d);

/// Induced subdigraph with its dense relabeling: vertex i of `graph` is
/// vertex `original[i]` of the parent. `original` is sorted ascending.
struct InducedSubdigraph {
  Digraph graph;
  std::vector<int> original;

  int to_parent(int local) const { return original[local]; }
};

/// Subdigraph induced by `vertices` (duplicates ignored). Throws
/// Error(vertex_out_of_range) for labels outside [0, n).
InducedSubdigraph induced(const Digraph& d, const std::vector<int>& vertices);

}  // namespace dichro
