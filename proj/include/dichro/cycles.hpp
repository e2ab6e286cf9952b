#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "dichro/digraph.hpp"

namespace dichro {

/// Shortest directed-cycle length; infinite() when the digraph is acyclic.
class DigirthValue {
 public:
  static DigirthValue finite(int length) { return DigirthValue(length); }
  static DigirthValue infinite() { return DigirthValue(0); }

  bool is_infinite() const { return length_ == 0; }
  int length() const { return length_; }  // only meaningful when finite

  // Infinite compares above every integer.
  bool at_least(int g) const { return is_infinite() || length_ >= g; }
  bool greater_than(int g) const { return is_infinite() || length_ > g; }

  friend bool operator==(DigirthValue a, DigirthValue b) {
    return a.length_ == b.length_;
  }

 private:
  explicit DigirthValue(int length) : length_(length) {}
  int length_;  // 0 encodes infinity
};

/// One directed cycle as a vertex sequence (minimum vertex first), or
/// nullopt when the digraph is acyclic.
std::optional<std::vector<int>> find_directed_cycle(const Digraph& d);

bool is_acyclic(const Digraph& d);

/// A shortest directed cycle of length <= length_cap, minimum vertex first;
/// nullopt when no such cycle exists.
std::optional<std::vector<int>> shortest_directed_cycle(
    const Digraph& d, int length_cap = std::numeric_limits<int>::max());

DigirthValue digirth(const Digraph& d);

/// Connected components of a digraph whose underlying max degree is at
/// most 2: oriented paths, directed cycles (arcs consistently head-to-tail
/// along the reported sequence) and the remaining, inconsistently oriented
/// cycles. Every vertex appears in exactly one component.
struct LinearForestDecomposition {
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<int>> directed_cycles;
  std::vector<std::vector<int>> non_directed_cycles;
};

/// Throws Error(degree_too_high) if some vertex has underlying degree >= 3.
LinearForestDecomposition linear_forest_decompose(const Digraph& d);

/// Acyclicity of the subdigraph induced by `subset` (original labels).
bool is_acyclic_subset(const Digraph& d, const std::vector<int>& subset);

/// Witness directed cycle inside the subdigraph induced by `subset`,
/// reported in original labels; nullopt if that subdigraph is acyclic.
std::optional<std::vector<int>> find_directed_cycle_in_subset(
    const Digraph& d, const std::vector<int>& subset);

}  // namespace dichro
