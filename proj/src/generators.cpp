#include "dichro/generators.hpp"

#include <set>
#include <string>

#include "dichro/cycles.hpp"
#include "dichro/prng.hpp"

namespace dichro {

Digraph gen_directed_cycle(int n) {
  if (n < 2) throw Error(errc::bad_n, "directed cycle needs n >= 2");
  std::vector<Arc> arcs;
  arcs.reserve(n);
  for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return Digraph(n, std::move(arcs));
}

Digraph gen_circulant(int n, const std::vector<int>& steps) {
  if (n < 1) throw Error(errc::bad_n, "circulant needs n >= 1");
  if (steps.empty()) throw Error(errc::bad_step, "step set is empty");
  std::set<int> unique_steps;
  for (int s : steps) {
    if (s < 1 || s > n - 1)
      throw Error(errc::bad_step,
                  "step " + std::to_string(s) + " outside [1, " +
                      std::to_string(n - 1) + "]");
    unique_steps.insert(s);
  }
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * unique_steps.size());
  for (int i = 0; i < n; ++i)
    for (int s : unique_steps) arcs.emplace_back(i, (i + s) % n);
  return Digraph(n, std::move(arcs));
}

Digraph gen_random_digirth(int n, double p, int gamma, unsigned seed) {
  if (n < 0) throw Error(errc::bad_n, "n must be non-negative");
  if (p < 0.0 || p > 1.0)
    throw Error(errc::precondition_violated, "p must lie in [0, 1]");
  if (gamma < 2)
    throw Error(errc::precondition_violated, "gamma must be at least 2");

  std::mt19937 rng(seed);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (unit_real(rng) < p) arcs.emplace_back(u, v);
    }
  }
  Digraph d(n, std::move(arcs));

  // Repair pass: break shortest short cycles one random arc at a time.
  // Each deletion removes one arc, so at most m passes run.
  while (auto cycle = shortest_directed_cycle(d, gamma - 1)) {
    const int len = static_cast<int>(cycle->size());
    const int j = static_cast<int>(bounded_uniform(rng, static_cast<std::uint32_t>(len)));
    const Arc doomed{(*cycle)[j], (*cycle)[(j + 1) % len]};
    std::vector<Arc> remaining;
    remaining.reserve(d.arcs().size() - 1);
    for (const Arc& a : d.arcs())
      if (a != doomed) remaining.push_back(a);
    d = Digraph(n, std::move(remaining));
  }
  return d;
}

}  // namespace dichro
