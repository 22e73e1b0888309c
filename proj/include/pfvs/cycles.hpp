#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "pfvs/errors.hpp"
#include "pfvs/planar_digraph.hpp"

namespace pfvs {

// Simple directed cycle.  vertices[i] is the tail of arcs[i], and arcs[i]
// runs into vertices[(i+1) % len].  Canonical form starts at the smallest
// arc id, which makes equality and sorting plain vector comparisons.
struct DiCycle {
  std::vector<Vertex> vertices;
  std::vector<ArcId> arcs;

  int length() const { return static_cast<int>(arcs.size()); }

  void canonicalize() {
    if (arcs.empty()) return;
    std::size_t piv =
        std::min_element(arcs.begin(), arcs.end()) - arcs.begin();
    std::rotate(arcs.begin(), arcs.begin() + piv, arcs.end());
    std::rotate(vertices.begin(), vertices.begin() + piv, vertices.end());
  }

  bool operator==(const DiCycle& other) const { return arcs == other.arcs; }
  bool operator<(const DiCycle& other) const { return arcs < other.arcs; }
};

// Builds a DiCycle out of an arc sequence, checking that consecutive arcs
// chain head to tail, the walk closes, and no vertex repeats.
inline DiCycle cycle_from_arcs(const PlanarDigraph& g,
                               const std::vector<ArcId>& arcs) {
  if (arcs.empty()) throw PreconditionViolated("empty arc list is no cycle");
  DiCycle c;
  c.arcs = arcs;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    ArcId a = arcs[i];
    if (a < 0 || a >= g.m())
      throw PreconditionViolated("arc id out of range in cycle");
    ArcId b = arcs[(i + 1) % arcs.size()];
    if (g.arc(a).head != g.arc(b).tail)
      throw PreconditionViolated("cycle arcs do not chain head to tail");
    c.vertices.push_back(g.arc(a).tail);
  }
  std::vector<Vertex> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionViolated("cycle revisits a vertex");
  c.canonicalize();
  return c;
}

// Length of a shortest directed cycle; empty when the graph is acyclic.
// One BFS per arc: a shortest cycle through arc u->v is 1 + dist(v, u).
inline std::optional<int> digirth(const PlanarDigraph& g) {
  std::optional<int> best;
  std::vector<int> dist(g.n());
  for (ArcId a = 0; a < g.m(); ++a) {
    Vertex from = g.arc(a).head;
    Vertex to = g.arc(a).tail;
    if (from == to) return 1;
    std::fill(dist.begin(), dist.end(), -1);
    dist[from] = 0;
    std::queue<Vertex> queue;
    queue.push(from);
    int cap = best ? *best - 1 : g.n();  // deeper paths cannot improve
    while (!queue.empty() && dist[to] == -1) {
      Vertex v = queue.front();
      queue.pop();
      if (dist[v] >= cap) break;
      for (ArcId out : g.out_arcs(v)) {
        Vertex w = g.arc(out).head;
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
      }
    }
    if (dist[to] != -1 && (!best || dist[to] + 1 < *best))
      best = dist[to] + 1;
  }
  return best;
}

// All simple directed cycles, canonical and sorted.  Each cycle is found
// exactly once: the search roots at the cycle's smallest vertex and only
// walks through larger ones.  Throws GuardExceeded past max_cycles.
inline std::vector<DiCycle> enumerate_dicycles(const PlanarDigraph& g,
                                               std::size_t max_cycles =
                                                   1000000) {
  std::vector<DiCycle> found;
  std::vector<char> on_path(g.n(), 0);
  std::vector<ArcId> path;

  // Iterative DFS over out-arc indices, so deep cycles cannot overflow the
  // call stack.  frame[i] = next out-arc index to try at path depth i.
  for (Vertex s = 0; s < g.n(); ++s) {
    std::vector<std::size_t> frame{0};
    std::vector<Vertex> at{s};
    on_path[s] = 1;
    path.clear();
    while (!frame.empty()) {
      Vertex v = at.back();
      const auto& outs = g.out_arcs(v);
      if (frame.back() == outs.size()) {
        frame.pop_back();
        at.pop_back();
        on_path[v] = 0;
        if (!path.empty()) path.pop_back();
        continue;
      }
      ArcId a = outs[frame.back()++];
      Vertex w = g.arc(a).head;
      if (w == s) {
        path.push_back(a);
        DiCycle c;
        c.arcs = path;
        for (ArcId e : path) c.vertices.push_back(g.arc(e).tail);
        c.canonicalize();
        found.push_back(std::move(c));
        if (found.size() > max_cycles)
          throw GuardExceeded("more than " + std::to_string(max_cycles) +
                              " directed cycles");
        path.pop_back();
      } else if (w > s && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(a);
        at.push_back(w);
        frame.push_back(0);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace pfvs
