#include "dichro/acyclic_sdr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "dichro/cycles.hpp"

namespace dichro {

std::vector<int> RepresentativeSystem::as_sorted_set() const {
  std::vector<int> set = chosen;
  std::sort(set.begin(), set.end());
  return set;
}

namespace {

// Number of arcs between v and the vertices flagged in `in_x` (both
// directions; v itself must not be flagged).
int arcs_to_set(const Digraph& d, int v, const std::vector<char>& in_x) {
  int count = 0;
  for (int u : d.out(v)) count += in_x[u];
  for (int u : d.in(v)) count += in_x[u];
  return count;
}

}  // namespace

namespace detail {

std::optional<std::vector<int>> exhaustive_sdr(
    const Digraph& d, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> chosen;
  std::function<bool(std::size_t)> solve = [&](std::size_t i) {
    if (i == blocks.size()) return true;
    for (int candidate : blocks[i]) {
      chosen.push_back(candidate);
      if (is_acyclic_subset(d, chosen)) {
        if (solve(i + 1)) return true;
      }
      chosen.pop_back();
    }
    return false;
  };
  if (!solve(0)) return std::nullopt;
  return chosen;
}

}  // namespace detail

RepresentativeSystem acyclic_sdr(const Digraph& d, const Partition& parts,
                                 int gamma, const SdrOptions& options) {
  if (gamma < 2)
    throw Error(errc::precondition_violated, "gamma must be at least 2");
  if (static_cast<int>(parts.assignment.size()) != d.n())
    throw Error(errc::precondition_violated,
                "partition does not cover the vertex set");
  for (int b : parts.assignment)
    if (b < 0 || b >= parts.k)
      throw Error(errc::precondition_violated, "partition block out of range");

  const auto blocks = parts.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) {
      if (options.best_effort)
        throw Error(errc::not_found,
                    "block " + std::to_string(i) + " is empty, no system exists");
      throw Error(errc::precondition_violated,
                  "block " + std::to_string(i) + " is empty");
    }
  }

  const DigirthValue girth = digirth(d);
  if (!girth.at_least(gamma) && !options.best_effort)
    throw Error(errc::precondition_violated,
                "digirth " + std::to_string(girth.length()) + " below gamma " +
                    std::to_string(gamma));
  const int delta_out = d.n() == 0 ? 0 : degree_stats(d).delta_out;
  // ceil(gamma/(gamma-1) * delta_out) in exact integer arithmetic.
  const int min_block = (gamma * delta_out + gamma - 2) / (gamma - 1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (static_cast<int>(blocks[i].size()) < min_block && !options.best_effort)
      throw Error(errc::precondition_violated,
                  "block " + std::to_string(i) + " has " +
                      std::to_string(blocks[i].size()) + " vertices, needs " +
                      std::to_string(min_block));
  }

  RepresentativeSystem result;
  result.chosen.reserve(blocks.size());
  for (const auto& block : blocks) result.chosen.push_back(block[0]);

  std::vector<char> in_x(d.n(), 0);
  std::vector<int> block_of(d.n(), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (int v : blocks[i]) block_of[v] = static_cast<int>(i);
  for (int v : result.chosen) in_x[v] = 1;

  // Phase 1: local repair of the lowest-index selection. Pick the first
  // replaceable vertex on a witness cycle and move its block's
  // representative to the member that leaves the fewest arcs inside X.
  const long long cap = 50LL * static_cast<long long>(blocks.size());
  bool solved = false;
  for (long long iter = 0; iter < cap; ++iter) {
    auto cycle = find_directed_cycle_in_subset(d, result.chosen);
    if (!cycle) {
      solved = true;
      break;
    }
    int victim = -1;
    for (int v : *cycle) {
      if (blocks[block_of[v]].size() >= 2) {
        victim = v;
        break;
      }
    }
    if (victim < 0) break;  // every cycle block is a singleton
    const int b = block_of[victim];
    in_x[victim] = 0;
    int best_u = -1;
    int best_arcs = -1;
    for (int u : blocks[b]) {
      if (u == victim) continue;
      const int arcs = arcs_to_set(d, u, in_x);
      if (best_u < 0 || arcs < best_arcs) {
        best_u = u;
        best_arcs = arcs;
      }
    }
    in_x[best_u] = 1;
    result.chosen[b] = best_u;
  }

  if (!solved && !find_directed_cycle_in_subset(d, result.chosen)) solved = true;

  if (!solved) {
    // Phase 2: exhaustive backtracking converts the existence guarantee
    // into a termination guarantee.
    auto chosen = detail::exhaustive_sdr(d, blocks);
    if (!chosen)
      throw Error(errc::not_found, "no acyclic system of representatives exists");
    result.chosen = std::move(*chosen);
  }

  // Soundness check on every exit path.
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (block_of[result.chosen[i]] != static_cast<int>(i))
      throw std::logic_error("representative escaped its block");
  }
  if (!is_acyclic_subset(d, result.chosen))
    throw std::logic_error("representative system is not acyclic");
  return result;
}

}  // namespace dichro
