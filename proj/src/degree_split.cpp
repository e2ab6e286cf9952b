#include "dichro/degree_split.hpp"

#include <deque>

#include "dichro/prng.hpp"

namespace dichro {

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> result(k);
  for (std::size_t v = 0; v < assignment.size(); ++v)
    result[assignment[v]].push_back(static_cast<int>(v));
  return result;
}

Partition degree_split(const Digraph& d, int k, const DegreeSplitOptions& options) {
  if (k < 1) throw Error(errc::invalid_k, "block count must be positive");
  const int n = d.n();

  Partition part;
  part.k = k;
  part.assignment.resize(n);
  if (options.random_init_seed) {
    std::mt19937 rng(*options.random_init_seed);
    for (int v = 0; v < n; ++v)
      part.assignment[v] = static_cast<int>(bounded_uniform(rng, static_cast<std::uint32_t>(k)));
  } else {
    for (int v = 0; v < n; ++v) part.assignment[v] = v % k;
  }
  if (options.moves_out) *options.moves_out = 0;
  if (k == 1) return part;

  // Neighbor multiset of v: one entry per incident arc, so a digon endpoint
  // appears twice.
  std::vector<std::vector<int>> nbr(n);
  for (const auto& [u, v] : d.arcs()) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }

  // cnt[v][b] = number of arcs between v and block b.
  std::vector<std::vector<int>> cnt(n, std::vector<int>(k, 0));
  for (int v = 0; v < n; ++v)
    for (int u : nbr[v]) ++cnt[v][part.assignment[u]];

  auto quota = [&](int v) { return static_cast<int>(nbr[v].size()) / k; };
  auto violating = [&](int v) { return cnt[v][part.assignment[v]] > quota(v); };

  std::deque<int> queue;
  std::vector<char> queued(n, 0);
  for (int v = 0; v < n; ++v) {
    if (violating(v)) {
      queue.push_back(v);
      queued[v] = 1;
    }
  }

  int moves = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    queued[v] = 0;
    if (!violating(v)) continue;

    int target = 0;
    for (int b = 1; b < k; ++b)
      if (cnt[v][b] < cnt[v][target]) target = b;
    const int from = part.assignment[v];
    // Pigeonhole: the violating block holds more than deg(v)/k incidences,
    // so the minimum block holds strictly fewer.
    part.assignment[v] = target;
    ++moves;
    for (int u : nbr[v]) {
      --cnt[u][from];
      ++cnt[u][target];
    }
    for (int u : nbr[v]) {
      const int b = part.assignment[u];
      if ((b == from || b == target) && !queued[u] && violating(u)) {
        queue.push_back(u);
        queued[u] = 1;
      }
    }
  }

  if (options.moves_out) *options.moves_out = moves;
  return part;
}

}  // namespace dichro
