#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pfvs/collection.hpp"
#include "pfvs/cycles.hpp"
#include "pfvs/feedback.hpp"

namespace pfvs {

// Exact maximum arc-disjoint dicycle packing: enumerate the simple
// dicycles, then branch and bound over the set-packing, shortest cycles
// first with include-before-skip.  The bound adds the count of cycles
// still compatible, capped by how many times the shortest length fits in
// the free arcs.
inline CycleCollection max_dicycle_packing(const PlanarDigraph& g,
                                           const SolveGuards& guards = {}) {
  if (g.n() > guards.max_n)
    throw GuardExceeded("instance larger than the solver guard");
  std::vector<DiCycle> all = enumerate_dicycles(g, guards.max_cycles);
  CycleCollection out;
  out.arc_disjoint = true;
  out.non_crossing = true;
  if (all.empty()) return out;

  std::vector<int> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (all[a].length() != all[b].length())
      return all[a].length() < all[b].length();
    return all[a].arcs < all[b].arcs;
  });

  using ArcMask = boost::dynamic_bitset<>;
  std::vector<ArcMask> mask(all.size(), ArcMask(g.m()));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (ArcId a : all[i].arcs) mask[i].set(a);

  // Greedy incumbent in branch order.
  std::vector<int> best;
  {
    ArcMask used(g.m());
    for (int i : order)
      if ((mask[i] & used).none()) {
        best.push_back(i);
        used |= mask[i];
      }
  }

  int shortest = static_cast<int>(all[order.front()].length());
  std::vector<int> chosen;
  ArcMask used(g.m());
  long nodes = 0;
  auto dfs = [&](auto&& self, std::size_t pos) -> void {
    if (++nodes > guards.max_nodes)
      throw GuardExceeded("packing search exceeded its node limit");
    std::size_t compatible = 0;
    std::size_t next = order.size();
    for (std::size_t j = pos; j < order.size(); ++j)
      if ((mask[order[j]] & used).none()) {
        if (next == order.size()) next = j;
        ++compatible;
      }
    std::size_t free_arcs = g.m() - used.count();
    std::size_t cap = std::min(compatible, free_arcs / shortest);
    if (chosen.size() + cap <= best.size()) return;
    if (next == order.size()) return;  // nothing compatible left
    int c = order[next];
    chosen.push_back(c);
    used |= mask[c];
    if (chosen.size() > best.size()) best = chosen;
    self(self, next + 1);
    used &= ~mask[c];
    chosen.pop_back();
    self(self, next + 1);
  };
  dfs(dfs, 0);

  for (int i : best) out.cycles.push_back(all[i]);
  std::sort(out.cycles.begin(), out.cycles.end());
  out.arc_disjoint = collection_arc_disjoint(out);
  internal_check(out.arc_disjoint, "packing produced overlapping cycles");
  out.non_crossing = collection_non_crossing(g, out);
  return out;
}

}  // namespace pfvs
