#include "dichro/cycles.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace dichro {

namespace {

// Rotates a cyclic vertex sequence so its minimum vertex comes first.
std::vector<int> rotate_min_first(std::vector<int> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

}  // namespace

std::optional<std::vector<int>> find_directed_cycle(const Digraph& d) {
  enum : unsigned char { kWhite, kGray, kBlack };
  std::vector<unsigned char> color(d.n(), kWhite);
  std::vector<int> stack_v;
  std::vector<int> stack_i;
  for (int s = 0; s < d.n(); ++s) {
    if (color[s] != kWhite) continue;
    stack_v.assign(1, s);
    stack_i.assign(1, 0);
    color[s] = kGray;
    while (!stack_v.empty()) {
      const int v = stack_v.back();
      int& i = stack_i.back();
      if (i < d.out_degree(v)) {
        const int w = d.out(v)[i++];
        if (color[w] == kGray) {
          auto it = std::find(stack_v.begin(), stack_v.end(), w);
          return rotate_min_first(std::vector<int>(it, stack_v.end()));
        }
        if (color[w] == kWhite) {
          color[w] = kGray;
          stack_v.push_back(w);
          stack_i.push_back(0);
        }
      } else {
        color[v] = kBlack;
        stack_v.pop_back();
        stack_i.pop_back();
      }
    }
  }
  return std::nullopt;
}

bool is_acyclic(const Digraph& d) { return !find_directed_cycle(d).has_value(); }

std::optional<std::vector<int>> shortest_directed_cycle(const Digraph& d,
                                                        int length_cap) {
  // For each start v, a BFS over out-arcs gives dist(v, .); the shortest
  // cycle through v closes over an in-neighbor u as dist(v, u) + 1.
  std::optional<std::vector<int>> best;
  int best_len = -1;
  std::vector<int> dist(d.n());
  std::vector<int> parent(d.n());
  std::deque<int> queue;
  for (int v = 0; v < d.n(); ++v) {
    const int limit = best_len < 0 ? length_cap : best_len - 1;
    if (limit < 2) break;  // directed cycles have length >= 2
    std::fill(dist.begin(), dist.end(), -1);
    dist[v] = 0;
    queue.assign(1, v);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (dist[x] >= limit - 1) continue;  // deeper vertices cannot close in time
      for (int w : d.out(x)) {
        if (dist[w] < 0) {
          dist[w] = dist[x] + 1;
          parent[w] = x;
          queue.push_back(w);
        }
      }
    }
    int cand_u = -1;
    int cand_len = -1;
    for (int u : d.in(v)) {
      if (dist[u] < 0) continue;
      const int len = dist[u] + 1;
      if (cand_len < 0 || len < cand_len) {
        cand_len = len;
        cand_u = u;
      }
    }
    if (cand_len > 0 && cand_len <= limit) {
      std::vector<int> path;
      for (int x = cand_u; x != v; x = parent[x]) path.push_back(x);
      path.push_back(v);
      std::reverse(path.begin(), path.end());
      best = rotate_min_first(std::move(path));
      best_len = cand_len;
      if (best_len == 2) break;
    }
  }
  return best;
}

DigirthValue digirth(const Digraph& d) {
  auto cycle = shortest_directed_cycle(d);
  if (!cycle) return DigirthValue::infinite();
  return DigirthValue::finite(static_cast<int>(cycle->size()));
}

LinearForestDecomposition linear_forest_decompose(const Digraph& d) {
  struct Incidence {
    int other;
    int arc_id;
  };
  std::vector<std::vector<Incidence>> inc(d.n());
  for (int id = 0; id < d.m(); ++id) {
    const auto& [u, v] = d.arcs()[id];
    inc[u].push_back({v, id});
    inc[v].push_back({u, id});
  }
  for (int v = 0; v < d.n(); ++v) {
    if (inc[v].size() >= 3)
      throw Error(errc::degree_too_high,
                  "vertex " + std::to_string(v) + " has underlying degree " +
                      std::to_string(inc[v].size()));
    std::sort(inc[v].begin(), inc[v].end(), [](const Incidence& a, const Incidence& b) {
      return a.other != b.other ? a.other < b.other : a.arc_id < b.arc_id;
    });
  }

  LinearForestDecomposition res;
  std::vector<char> visited(d.n(), 0);

  // Oriented paths first: walk from each unvisited endpoint (degree <= 1).
  for (int v = 0; v < d.n(); ++v) {
    if (visited[v] || inc[v].size() > 1) continue;
    visited[v] = 1;
    std::vector<int> seq{v};
    int cur = v;
    int in_arc = -1;
    for (;;) {
      int nxt = -1;
      int via = -1;
      for (const auto& e : inc[cur]) {
        if (e.arc_id != in_arc) {
          nxt = e.other;
          via = e.arc_id;
          break;
        }
      }
      if (nxt < 0) break;
      visited[nxt] = 1;
      seq.push_back(nxt);
      cur = nxt;
      in_arc = via;
    }
    res.paths.push_back(std::move(seq));
  }

  // Remaining vertices all have degree 2 and lie on cycles.
  for (int v = 0; v < d.n(); ++v) {
    if (visited[v]) continue;
    std::vector<int> seq{v};
    visited[v] = 1;
    int cur = v;
    int in_arc = -1;
    for (;;) {
      int nxt = -1;
      int via = -1;
      for (const auto& e : inc[cur]) {
        if (e.arc_id != in_arc) {
          nxt = e.other;
          via = e.arc_id;
          break;
        }
      }
      if (nxt == v) break;
      visited[nxt] = 1;
      seq.push_back(nxt);
      cur = nxt;
      in_arc = via;
    }
    const int len = static_cast<int>(seq.size());
    bool forward = true;
    bool backward = true;
    for (int i = 0; i < len; ++i) {
      const int a = seq[i];
      const int b = seq[(i + 1) % len];
      forward = forward && d.has_arc(a, b);
      backward = backward && d.has_arc(b, a);
    }
    if (forward) {
      res.directed_cycles.push_back(std::move(seq));
    } else if (backward) {
      std::reverse(seq.begin() + 1, seq.end());  // keep the minimum first
      res.directed_cycles.push_back(std::move(seq));
    } else {
      res.non_directed_cycles.push_back(std::move(seq));
    }
  }
  return res;
}

bool is_acyclic_subset(const Digraph& d, const std::vector<int>& subset) {
  std::vector<char> member(d.n(), 0);
  for (int v : subset) member[v] = 1;
  std::vector<int> indeg(d.n(), 0);
  int size = 0;
  // Collect members and in-degrees restricted to the subset.
  std::vector<int> verts;
  verts.reserve(subset.size());
  for (int v = 0; v < d.n(); ++v) {
    if (!member[v]) continue;
    ++size;
    verts.push_back(v);
    for (int u : d.in(v))
      if (member[u]) ++indeg[v];
  }
  std::deque<int> queue;
  for (int v : verts)
    if (indeg[v] == 0) queue.push_back(v);
  int removed = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    ++removed;
    for (int w : d.out(v)) {
      if (member[w] && --indeg[w] == 0) queue.push_back(w);
    }
  }
  return removed == size;
}

std::optional<std::vector<int>> find_directed_cycle_in_subset(
    const Digraph& d, const std::vector<int>& subset) {
  auto sub = induced(d, subset);
  auto cycle = find_directed_cycle(sub.graph);
  if (!cycle) return std::nullopt;
  for (int& v : *cycle) v = sub.to_parent(v);
  return cycle;  // relabeling is monotone, so the minimum stays first
}

}  // namespace dichro
