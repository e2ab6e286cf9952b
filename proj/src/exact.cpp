#include "dichro/exact.hpp"

#include <algorithm>
#include <string>

#include "dichro/cycles.hpp"

namespace dichro {

VerificationReport verify_coloring(const Digraph& d, const Coloring& coloring) {
  if (static_cast<int>(coloring.assignment.size()) != d.n())
    throw Error(errc::incomplete_coloring,
                "assignment covers " + std::to_string(coloring.assignment.size()) +
                    " of " + std::to_string(d.n()) + " vertices");
  int max_color = -1;
  for (int v = 0; v < d.n(); ++v) {
    if (coloring.assignment[v] < 0)
      throw Error(errc::incomplete_coloring,
                  "vertex " + std::to_string(v) + " unassigned");
    max_color = std::max(max_color, coloring.assignment[v]);
  }
  std::vector<std::vector<int>> classes(max_color + 1);
  for (int v = 0; v < d.n(); ++v) classes[coloring.assignment[v]].push_back(v);

  VerificationReport report;
  for (int color = 0; color <= max_color; ++color) {
    if (auto cycle = find_directed_cycle_in_subset(d, classes[color])) {
      report.valid = false;
      report.violations.emplace_back(color, std::move(*cycle));
    }
  }
  return report;
}

namespace {

// Search state for the exhaustive c-coloring search. The incremental
// acyclicity test exploits that any new directed cycle inside a class must
// pass through the vertex just inserted.
struct ExactSearch {
  const Digraph& d;
  int c;
  std::vector<int> order;       // vertices, descending degree
  std::vector<int> color;      // -1 = unassigned
  std::vector<int> mark;       // DFS scratch, epoch-stamped
  std::vector<int> dfs_stack;
  int epoch = 0;

  explicit ExactSearch(const Digraph& graph, int classes)
      : d(graph), c(classes), color(graph.n(), -1), mark(graph.n(), 0) {
    order.resize(d.n());
    for (int v = 0; v < d.n(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return d.degree(a) > d.degree(b);
    });
  }

  // Would assigning `v` color `j` close a directed cycle within class j?
  bool closes_cycle(int v, int j) {
    ++epoch;
    dfs_stack.clear();
    for (int w : d.out(v))
      if (color[w] == j && mark[w] != epoch) {
        mark[w] = epoch;
        dfs_stack.push_back(w);
      }
    while (!dfs_stack.empty()) {
      const int x = dfs_stack.back();
      dfs_stack.pop_back();
      for (int w : d.out(x)) {
        if (w == v) return true;
        if (color[w] == j && mark[w] != epoch) {
          mark[w] = epoch;
          dfs_stack.push_back(w);
        }
      }
    }
    return false;
  }

  bool solve(int pos, int opened) {
    if (pos == d.n()) return true;
    const int v = order[pos];
    const int limit = std::min(opened, c - 1);  // may open at most one new class
    for (int j = 0; j <= limit; ++j) {
      if (closes_cycle(v, j)) continue;
      color[v] = j;
      if (solve(pos + 1, std::max(opened, j + 1))) return true;
      color[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Coloring> exists_acyclic_partition(const Digraph& d, int c) {
  if (d.n() == 0) return Coloring{{}, 0};
  if (c < 1) return std::nullopt;
  ExactSearch search(d, c);
  if (!search.solve(0, 0)) return std::nullopt;
  Coloring result;
  result.assignment = std::move(search.color);
  result.colors_used = 0;
  for (int col : result.assignment)
    result.colors_used = std::max(result.colors_used, col + 1);
  return result;
}

int dichromatic_number(const Digraph& d, int n_cap) {
  if (d.n() > n_cap)
    throw Error(errc::too_large, "n = " + std::to_string(d.n()) +
                                     " exceeds cap " + std::to_string(n_cap));
  if (d.n() == 0) return 0;
  for (int c = 1; c <= d.n(); ++c)
    if (exists_acyclic_partition(d, c)) return c;
  return d.n();  // unreachable: n singleton classes are always acyclic
}

}  // namespace dichro
