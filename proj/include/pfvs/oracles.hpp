#pragma once

#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pfvs/cycles.hpp"
#include "pfvs/graph_algos.hpp"

namespace pfvs {

// Minimum feedback vertex set size by trying every vertex subset.
inline int brute_force_tau(const PlanarDigraph& g) {
  if (g.n() > 14)
    throw GuardExceeded("subset enumeration is capped at n = 14");
  std::vector<char> arcs(g.m(), 1);
  int best = g.n();
  for (unsigned long mask = 0; mask < (1UL << g.n()); ++mask) {
    int size = __builtin_popcountl(mask);
    if (size >= best) continue;
    std::vector<char> alive(g.n());
    for (Vertex v = 0; v < g.n(); ++v) alive[v] = !(mask >> v & 1);
    if (is_acyclic(g, alive, arcs)) best = size;
  }
  return best;
}

// Maximum arc-disjoint subfamily over all enumerated dicycles, by
// exhaustive include/skip recursion.  Only graphs with at most 20 simple
// dicycles are accepted.
inline int brute_force_packing(const PlanarDigraph& g) {
  std::vector<DiCycle> all = enumerate_dicycles(g, 20);
  using ArcMask = boost::dynamic_bitset<>;
  std::vector<ArcMask> mask(all.size(), ArcMask(g.m()));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (ArcId a : all[i].arcs) mask[i].set(a);
  int best = 0;
  ArcMask used(g.m());
  auto dfs = [&](auto&& self, std::size_t i, int count) -> void {
    if (count > best) best = count;
    if (i == all.size()) return;
    if (count + static_cast<int>(all.size() - i) <= best) return;
    if ((mask[i] & used).none()) {
      used |= mask[i];
      self(self, i + 1, count + 1);
      used &= ~mask[i];
    }
    self(self, i + 1, count);
  };
  dfs(dfs, 0, 0);
  return best;
}

}  // namespace pfvs
