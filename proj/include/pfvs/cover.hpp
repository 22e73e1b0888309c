#pragma once

#include <algorithm>
#include <vector>

#include "pfvs/feedback.hpp"
#include "pfvs/planar_digraph.hpp"

namespace pfvs {

namespace detail_cover {
// Undirected endpoint pairs of the chosen arcs, smaller vertex first.
inline std::vector<std::pair<Vertex, Vertex>> arc_edges(
    const PlanarDigraph& g, const std::vector<ArcId>& arcs) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (ArcId a : arcs) {
    if (a < 0 || a >= g.m())
      throw PreconditionViolated("arc id out of range");
    Vertex u = g.arc(a).tail, v = g.arc(a).head;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return edges;
}
}  // namespace detail_cover

// Covers the arc set A by at most (n+|A|)/3 vertices: on the undirected
// graph (V, A), repeatedly delete the smallest vertex of degree >= 2; what
// survives is a matching plus isolated vertices, which yields an
// independent set (all isolated, plus the smaller endpoint of each
// matching edge); the cover is every arc endpoint outside it.
inline std::vector<Vertex> cover_arcs_greedy(const PlanarDigraph& g,
                                             const std::vector<ArcId>& arcs) {
  auto edges = detail_cover::arc_edges(g, arcs);
  std::vector<char> deleted(g.n(), 0);
  for (;;) {
    std::vector<int> degree(g.n(), 0);
    for (auto& [u, v] : edges)
      if (!deleted[u] && !deleted[v]) {
        ++degree[u];
        ++degree[v];
      }
    Vertex pick = -1;
    for (Vertex v = 0; v < g.n(); ++v)
      if (!deleted[v] && degree[v] >= 2) {
        pick = v;
        break;
      }
    if (pick == -1) break;
    deleted[pick] = 1;
  }

  std::vector<char> independent(g.n(), 0);
  std::vector<char> matched(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    if (!deleted[v]) independent[v] = 1;
  for (auto& [u, v] : edges)
    if (!deleted[u] && !deleted[v]) {
      // Matching edge: keep only the smaller endpoint independent.
      internal_check(!matched[u] && !matched[v],
                     "survivor graph is not a matching");
      matched[u] = matched[v] = 1;
      independent[v] = 0;
    }

  std::vector<char> chosen(g.n(), 0);
  for (auto& [u, v] : edges) {
    if (!independent[u]) chosen[u] = 1;
    if (!independent[v]) chosen[v] = 1;
  }
  std::vector<Vertex> cover;
  for (Vertex v = 0; v < g.n(); ++v)
    if (chosen[v]) cover.push_back(v);

  for (auto& [u, v] : edges)
    internal_check(chosen[u] || chosen[v], "greedy cover missed an arc");
  internal_check(3 * static_cast<long>(cover.size()) <=
                     g.n() + static_cast<long>(edges.size()),
                 "greedy cover exceeded (n+|A|)/3");
  return cover;
}

// Exact minimum vertex cover of the arc set A, lexicographically smallest.
// Branches on the lowest-id uncovered arc: either its smaller endpoint is
// in the cover, or it is excluded and every arc at it must be covered from
// the other side.
inline std::vector<Vertex> min_vertex_cover_of_arcs(
    const PlanarDigraph& g, const std::vector<ArcId>& arcs,
    const SolveGuards& guards = {}) {
  auto edges = detail_cover::arc_edges(g, arcs);
  if (g.n() > guards.max_n)
    throw GuardExceeded("instance larger than the solver guard");
  long nodes = 0;

  std::vector<char> in_cover(g.n(), 0);

  // Disjoint-edge matching among uncovered arcs, as a lower bound.
  auto matching_lb = [&]() {
    std::vector<char> used(g.n(), 0);
    int count = 0;
    for (auto& [u, v] : edges) {
      if (in_cover[u] || in_cover[v] || used[u] || used[v]) continue;
      used[u] = used[v] = 1;
      ++count;
    }
    return count;
  };

  auto search = [&](auto&& self, int budget) -> bool {
    if (++nodes > guards.max_nodes)
      throw GuardExceeded("cover search exceeded its node limit");
    std::pair<Vertex, Vertex> pick{-1, -1};
    for (auto& [u, v] : edges)
      if (!in_cover[u] && !in_cover[v]) {
        pick = {u, v};
        break;
      }
    if (pick.first == -1) return true;
    if (budget <= 0) return false;
    if (matching_lb() > budget) return false;
    for (Vertex w : {pick.first, pick.second}) {
      in_cover[w] = 1;
      bool ok = self(self, budget - 1);
      in_cover[w] = 0;
      if (ok) return true;
    }
    return false;
  };

  int size = matching_lb();
  while (!search(search, size)) ++size;

  std::vector<Vertex> cover;
  for (Vertex x = 0; x < g.n() && static_cast<int>(cover.size()) < size;
       ++x) {
    in_cover[x] = 1;
    if (!search(search, size - static_cast<int>(cover.size()) - 1)) {
      in_cover[x] = 0;
    } else {
      cover.push_back(x);
    }
  }
  internal_check(static_cast<int>(cover.size()) == size,
                 "lexicographic forcing missed the optimum cover");
  return cover;
}

}  // namespace pfvs
