#include "dichro/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dichro {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n) {
  if (n < 0) throw Error(errc::bad_n, "vertex count must be non-negative");
  for (const auto& [u, v] : arcs) {
    if (u < 0 || u >= n)
      throw Error(errc::vertex_out_of_range,
                  "vertex " + std::to_string(u) + " outside [0, " +
                      std::to_string(n) + ")");
    if (v < 0 || v >= n)
      throw Error(errc::vertex_out_of_range,
                  "vertex " + std::to_string(v) + " outside [0, " +
                      std::to_string(n) + ")");
    if (u == v)
      throw Error(errc::loop_arc, "loop arc at vertex " + std::to_string(u));
  }
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 1; i < arcs.size(); ++i) {
    if (arcs[i] == arcs[i - 1])
      throw Error(errc::duplicate_arc,
                  "duplicate arc (" + std::to_string(arcs[i].first) + ", " +
                      std::to_string(arcs[i].second) + ")");
  }
  arcs_ = std::move(arcs);
  out_.assign(n_, {});
  in_.assign(n_, {});
  for (const auto& [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  // arcs_ is sorted, so out-lists come out sorted already; in-lists need it.
  for (auto& lst : in_) std::sort(lst.begin(), lst.end());
}

bool Digraph::has_arc(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

DegreeStats degree_stats(const Digraph& d) {
  if (d.n() == 0) throw Error(errc::empty_digraph, "degree stats of empty digraph");
  DegreeStats s;
  s.min_out = d.out_degree(0);
  s.min_in = d.in_degree(0);
  for (int v = 0; v < d.n(); ++v) {
    const int dout = d.out_degree(v);
    const int din = d.in_degree(v);
    s.delta = std::max(s.delta, dout + din);
    s.delta_out = std::max(s.delta_out, dout);
    s.delta_in = std::max(s.delta_in, din);
    s.min_out = std::min(s.min_out, dout);
    s.min_in = std::min(s.min_in, din);
    s.delta_tilde = std::max(
        s.delta_tilde, std::sqrt(static_cast<double>(dout) * static_cast<double>(din)));
  }
  return s;
}

InducedSubdigraph induced(const Digraph& d, const std::vector<int>& vertices) {
  std::vector<int> verts = vertices;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts) {
    if (v < 0 || v >= d.n())
      throw Error(errc::vertex_out_of_range,
                  "vertex " + std::to_string(v) + " outside [0, " +
                      std::to_string(d.n()) + ")");
  }
  std::vector<int> local(d.n(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);

  std::vector<Arc> sub_arcs;
  for (const auto& [u, v] : d.arcs()) {
    if (local[u] >= 0 && local[v] >= 0) sub_arcs.emplace_back(local[u], local[v]);
  }
  InducedSubdigraph res;
  res.graph = Digraph(static_cast<int>(verts.size()), std::move(sub_arcs));
  res.original = std::move(verts);
  return res;
}

}  // namespace dichro
