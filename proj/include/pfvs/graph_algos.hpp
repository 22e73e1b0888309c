#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "pfvs/cycles.hpp"
#include "pfvs/planar_digraph.hpp"

namespace pfvs {

namespace detail_algos {
inline bool arc_live(const PlanarDigraph& g, ArcId a,
                     const std::vector<char>& vertex_alive,
                     const std::vector<char>& arc_alive) {
  return arc_alive[a] && vertex_alive[g.arc(a).tail] &&
         vertex_alive[g.arc(a).head];
}
}  // namespace detail_algos

// Kahn's algorithm on the subgraph of live vertices and arcs, always
// releasing the smallest ready vertex; nullopt when a dicycle survives.
inline std::optional<std::vector<Vertex>> topological_order(
    const PlanarDigraph& g, const std::vector<char>& vertex_alive,
    const std::vector<char>& arc_alive) {
  std::vector<int> indeg(g.n(), 0);
  for (ArcId a = 0; a < g.m(); ++a)
    if (detail_algos::arc_live(g, a, vertex_alive, arc_alive))
      ++indeg[g.arc(a).head];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  int live_vertices = 0;
  for (Vertex v = 0; v < g.n(); ++v)
    if (vertex_alive[v]) {
      ++live_vertices;
      if (indeg[v] == 0) ready.push(v);
    }
  std::vector<Vertex> order;
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (ArcId a : g.out_arcs(v))
      if (detail_algos::arc_live(g, a, vertex_alive, arc_alive))
        if (--indeg[g.arc(a).head] == 0) ready.push(g.arc(a).head);
  }
  if (static_cast<int>(order.size()) != live_vertices) return std::nullopt;
  return order;
}

inline bool is_acyclic(const PlanarDigraph& g,
                       const std::vector<char>& vertex_alive,
                       const std::vector<char>& arc_alive) {
  return topological_order(g, vertex_alive, arc_alive).has_value();
}

// Shortest dicycle in the live subgraph: per-arc breadth-first search from
// head back to tail, capped at the best length found so far.  Ties go to
// the smallest closing arc id, which makes branching deterministic.
inline std::optional<DiCycle> shortest_live_dicycle(
    const PlanarDigraph& g, const std::vector<char>& vertex_alive,
    const std::vector<char>& arc_alive) {
  int best_len = -1;
  std::vector<ArcId> best_arcs;
  std::vector<int> dist(g.n());
  std::vector<ArcId> via(g.n());
  for (ArcId a0 = 0; a0 < g.m(); ++a0) {
    if (!detail_algos::arc_live(g, a0, vertex_alive, arc_alive)) continue;
    Vertex s = g.arc(a0).head, t = g.arc(a0).tail;
    int cap = best_len == -1 ? g.n() : best_len - 2;  // path arcs allowed
    if (cap < 0) break;
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty() && dist[t] == -1) {
      Vertex u = queue.front();
      queue.pop();
      if (dist[u] >= cap) break;
      for (ArcId a : g.out_arcs(u)) {
        if (!detail_algos::arc_live(g, a, vertex_alive, arc_alive)) continue;
        Vertex w = g.arc(a).head;
        if (dist[w] != -1) continue;
        dist[w] = dist[u] + 1;
        via[w] = a;
        queue.push(w);
      }
    }
    if (dist[t] == -1) continue;
    int len = dist[t] + 1;
    if (best_len != -1 && len >= best_len) continue;
    best_len = len;
    best_arcs.clear();
    Vertex u = t;
    while (u != s) {
      best_arcs.push_back(via[u]);
      u = g.arc(via[u]).tail;
    }
    std::reverse(best_arcs.begin(), best_arcs.end());
    best_arcs.push_back(a0);
  }
  if (best_len == -1) return std::nullopt;
  return cycle_from_arcs(g, best_arcs);
}

}  // namespace pfvs
