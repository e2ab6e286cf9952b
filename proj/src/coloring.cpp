#include "dichro/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <string>

#include "dichro/acyclic_sdr.hpp"
#include "dichro/cycles.hpp"
#include "dichro/degree_split.hpp"
#include "dichro/exact.hpp"

namespace dichro {

namespace {

// Renumber nonempty classes consecutively from 0, preserving class order.
Coloring compact_classes(Coloring coloring) {
  int max_color = -1;
  for (int c : coloring.assignment) max_color = std::max(max_color, c);
  std::vector<char> used(max_color + 1, 0);
  for (int c : coloring.assignment) used[c] = 1;
  std::vector<int> remap(max_color + 1, -1);
  int next = 0;
  for (int c = 0; c <= max_color; ++c)
    if (used[c]) remap[c] = next++;
  for (int& c : coloring.assignment) c = remap[c];
  coloring.colors_used = next;
  return coloring;
}

void debug_verify(const Digraph& d, const Coloring& coloring) {
#ifndef NDEBUG
  assert(verify_coloring(d, coloring).valid);
#else
  (void)d;
  (void)coloring;
#endif
}

Coloring single_class(int n) {
  return Coloring{std::vector<int>(n, 0), n > 0 ? 1 : 0};
}

}  // namespace

BoundReport bound_report(int g, int delta) {
  if (g < 2) throw Error(errc::precondition_violated, "g must be at least 2");
  if (delta < 0) throw Error(errc::precondition_violated, "delta must be non-negative");
  BoundReport r;
  r.g = g;
  r.delta = delta;
  r.ell = delta / (3 * g) + 1;
  r.integer_bound = static_cast<long long>(g + 1) * r.ell;
  r.coefficient_num = g + 1;
  r.coefficient_den = 3LL * g;
  const long long common = std::gcd(r.coefficient_num, r.coefficient_den);
  r.coefficient_num /= common;
  r.coefficient_den /= common;
  r.coefficient = static_cast<double>(g + 1) / static_cast<double>(3 * g);
  r.real_bound = r.coefficient * delta + (g + 1);
  return r;
}

Coloring color_highgirth(const Digraph& d) {
  if (d.n() == 0) return {};
  if (is_acyclic(d)) return single_class(d.n());

  const DegreeStats stats = degree_stats(d);
  const DigirthValue girth = digirth(d);  // finite from here on
  if (!girth.greater_than(stats.delta_out))
    throw Error(errc::precondition_violated,
                "digirth " + std::to_string(girth.length()) +
                    " does not exceed max out-degree " +
                    std::to_string(stats.delta_out));

  // Split into blocks of underlying degree at most 2; each block then
  // decomposes into oriented paths and cycles.
  const int k = stats.delta / 3 + 1;
  const Partition part = degree_split(d, k);
  std::vector<std::vector<int>> cycle_blocks;  // directed cycles, parent labels
  for (const auto& block : part.blocks()) {
    if (block.empty()) continue;
    auto sub = induced(d, block);
    auto forest = linear_forest_decompose(sub.graph);
    for (auto& cycle : forest.directed_cycles) {
      for (int& v : cycle) v = sub.to_parent(v);
      cycle_blocks.push_back(std::move(cycle));
    }
  }

  // One shared acyclic system of representatives hits every directed cycle.
  std::vector<char> in_x(d.n(), 0);
  if (!cycle_blocks.empty()) {
    std::vector<int> vprime;
    for (const auto& cycle : cycle_blocks)
      vprime.insert(vprime.end(), cycle.begin(), cycle.end());
    auto sub = induced(d, vprime);
    std::vector<int> local(d.n(), -1);
    for (std::size_t i = 0; i < sub.original.size(); ++i)
      local[sub.original[i]] = static_cast<int>(i);
    Partition cycles_part;
    cycles_part.k = static_cast<int>(cycle_blocks.size());
    cycles_part.assignment.assign(sub.graph.n(), -1);
    for (std::size_t i = 0; i < cycle_blocks.size(); ++i)
      for (int v : cycle_blocks[i])
        cycles_part.assignment[local[v]] = static_cast<int>(i);
    auto sdr = acyclic_sdr(sub.graph, cycles_part, girth.length());
    for (int rep : sdr.chosen) in_x[sub.to_parent(rep)] = 1;
  }

  Coloring result;
  result.assignment.resize(d.n());
  for (int v = 0; v < d.n(); ++v)
    result.assignment[v] = in_x[v] ? k : part.assignment[v];
  result.colors_used = k + 1;
  result = compact_classes(std::move(result));
  debug_verify(d, result);
  return result;
}

PeelResult peel(const Digraph& d, int g) {
  std::vector<int> indeg(d.n());
  for (int v = 0; v < d.n(); ++v) indeg[v] = d.in_degree(v);
  std::vector<char> removed(d.n(), 0);
  std::deque<int> queue;
  for (int v = 0; v < d.n(); ++v)
    if (indeg[v] <= g) queue.push_back(v);

  PeelResult result;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (removed[v]) continue;
    removed[v] = 1;
    result.removal_order.push_back(v);
    for (int w : d.out(v)) {
      if (!removed[w] && --indeg[w] == g) queue.push_back(w);
    }
  }
  for (int v = 0; v < d.n(); ++v)
    if (!removed[v]) result.core.push_back(v);
  return result;
}

Coloring peel_color(const Digraph& d, int g) {
  if (g < 2) throw Error(errc::precondition_violated, "g must be at least 2");
  if (d.n() == 0) return {};
  const DegreeStats stats = degree_stats(d);
  if (stats.delta > 3 * g - 1)
    throw Error(errc::precondition_violated,
                "max degree " + std::to_string(stats.delta) + " exceeds 3g-1 = " +
                    std::to_string(3 * g - 1));
  if (!digirth(d).at_least(2 * g - 1))
    throw Error(errc::precondition_violated,
                "digirth below 2g-1 = " + std::to_string(2 * g - 1));

  const auto peeled = peel(d, g);
  const int palette = g + 1;
  std::vector<int> color(d.n(), -1);

  if (!peeled.core.empty()) {
    // Core: min in-degree >= g+1 forces max out-degree <= 2g-2 < digirth,
    // so the high-girth procedure colors it with at most g+1 classes.
    auto sub = induced(d, peeled.core);
    const Coloring core_coloring = color_highgirth(sub.graph);
    assert(core_coloring.colors_used <= palette);
    for (int i = 0; i < sub.graph.n(); ++i)
      color[sub.to_parent(i)] = core_coloring.assignment[i];
  }

  // Reinsert in reverse removal order. Each vertex had at most g
  // in-neighbors among the vertices placed before it, so one of the g+1
  // classes is free of them; any directed cycle inside a class would need
  // an in-arc to its last-placed vertex from within the class.
  std::vector<char> forbidden(palette);
  for (auto it = peeled.removal_order.rbegin(); it != peeled.removal_order.rend();
       ++it) {
    const int v = *it;
    std::fill(forbidden.begin(), forbidden.end(), 0);
    for (int u : d.in(v))
      if (color[u] >= 0) forbidden[color[u]] = 1;
    int c = 0;
    while (forbidden[c]) ++c;
    color[v] = c;
  }

  Coloring result{std::move(color), palette};
  result = compact_classes(std::move(result));
  debug_verify(d, result);
  return result;
}

SplitColorResult split_color(const Digraph& d, int g) {
  if (g < 2) throw Error(errc::precondition_violated, "g must be at least 2");
  const DigirthValue girth = digirth(d);
  if (!girth.at_least(2 * g - 1))
    throw Error(errc::digirth_too_small,
                "digirth " + std::to_string(girth.length()) + " below required " +
                    std::to_string(2 * g - 1));
  if (d.n() == 0) return {Coloring{}, bound_report(g, 0)};

  const DegreeStats stats = degree_stats(d);
  const BoundReport bound = bound_report(g, stats.delta);
  if (is_acyclic(d)) return {single_class(d.n()), bound};

  // Blocks have max degree <= floor(delta/ell) <= 3g-1, so each one
  // peel-colors with its own g+1 classes.
  const Partition part = degree_split(d, bound.ell);
  std::vector<int> color(d.n(), -1);
  int offset = 0;
  for (const auto& block : part.blocks()) {
    if (block.empty()) continue;
    auto sub = induced(d, block);
    const Coloring block_coloring = peel_color(sub.graph, g);
    for (int i = 0; i < sub.graph.n(); ++i)
      color[sub.to_parent(i)] = offset + block_coloring.assignment[i];
    offset += block_coloring.colors_used;
  }

  Coloring result{std::move(color), offset};
  result = compact_classes(std::move(result));
  debug_verify(d, result);
  assert(result.colors_used <= bound.integer_bound);
  return {std::move(result), bound};
}

int auto_g(const Digraph& d) {
  const DigirthValue girth = digirth(d);
  const int delta = d.n() == 0 ? 0 : degree_stats(d).delta;
  int g_max;
  if (girth.is_infinite()) {
    // Past ceil(delta/3)+1 the integer bound is g+1 and only grows.
    g_max = std::max(2, (delta + 2) / 3 + 1);
  } else {
    if (girth.length() < 3)
      throw Error(errc::digirth_too_small,
                  "digirth " + std::to_string(girth.length()) + " below 3");
    g_max = (girth.length() + 1) / 2;
  }
  int best_g = 2;
  long long best_bound = bound_report(2, delta).integer_bound;
  for (int g = 3; g <= g_max; ++g) {
    const long long b = bound_report(g, delta).integer_bound;
    if (b <= best_bound) {  // ties to the larger g
      best_bound = b;
      best_g = g;
    }
  }
  return best_g;
}

Coloring greedy_baseline(const Digraph& d) {
  std::vector<int> color(d.n(), -1);
  std::vector<int> mark(d.n(), 0);
  std::vector<int> stack;
  int epoch = 0;
  auto closes_cycle = [&](int v, int j) {
    ++epoch;
    stack.clear();
    for (int w : d.out(v))
      if (color[w] == j && mark[w] != epoch) {
        mark[w] = epoch;
        stack.push_back(w);
      }
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int w : d.out(x)) {
        if (w == v) return true;
        if (color[w] == j && mark[w] != epoch) {
          mark[w] = epoch;
          stack.push_back(w);
        }
      }
    }
    return false;
  };

  int used = 0;
  for (int v = 0; v < d.n(); ++v) {
    for (int j = 0; j <= used; ++j) {
      if (!closes_cycle(v, j)) {
        color[v] = j;
        if (j == used) ++used;
        break;
      }
    }
  }
  Coloring result{std::move(color), used};
  debug_verify(d, result);
  return result;
}

}  // namespace dichro
