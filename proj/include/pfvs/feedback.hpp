#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "pfvs/graph_algos.hpp"

namespace pfvs {

// Search limits for the exact solvers; all configurable from the CLI.
struct SolveGuards {
  int max_n = 30;
  long max_nodes = 200000;
  long max_cycles = 1000000;
};

struct FvsResult {
  std::vector<Vertex> X;
  int size = 0;
  bool optimal = false;
  std::vector<Vertex> certificate;  // topological order of G - X
};

struct FasResult {
  std::vector<ArcId> A;
  int size = 0;
  bool optimal = false;
};

namespace detail_feedback {

// Budgeted search for a feedback set of the live subgraph.  Branches on a
// shortest surviving dicycle: each of its selectable elements is deleted in
// turn, with the previously tried ones pinned as unavailable.  The lower
// bound greedily collects element-disjoint dicycles.
struct FeedbackSearch {
  const PlanarDigraph& g;
  const SolveGuards& guards;
  bool vertex_mode;
  std::vector<char> vertex_alive;
  std::vector<char> arc_alive;
  std::vector<char> forbidden;  // vertex- or arc-indexed, per mode
  long nodes = 0;

  FeedbackSearch(const PlanarDigraph& graph, const SolveGuards& gd,
                 bool vertices)
      : g(graph),
        guards(gd),
        vertex_mode(vertices),
        vertex_alive(graph.n(), 1),
        arc_alive(graph.m(), 1),
        forbidden(vertices ? graph.n() : graph.m(), 0) {}

  void remove(int x) {
    (vertex_mode ? vertex_alive : arc_alive)[x] = 0;
  }
  void restore(int x) {
    (vertex_mode ? vertex_alive : arc_alive)[x] = 1;
  }

  std::vector<int> selectable(const DiCycle& c) const {
    std::vector<int> out;
    if (vertex_mode) {
      for (Vertex v : c.vertices)
        if (!forbidden[v]) out.push_back(v);
    } else {
      for (ArcId a : c.arcs)
        if (!forbidden[a]) out.push_back(a);
    }
    return out;
  }

  // Count of disjoint dicycles still alive; budget+1 once a dicycle has no
  // selectable element left, since no deletion can ever break it.
  int lower_bound(int budget) {
    std::vector<char> va = vertex_alive, aa = arc_alive;
    int count = 0;
    while (count <= budget) {
      auto c = shortest_live_dicycle(g, va, aa);
      if (!c) break;
      bool hittable = false;
      if (vertex_mode) {
        for (Vertex v : c->vertices) {
          va[v] = 0;
          if (!forbidden[v]) hittable = true;
        }
      } else {
        for (ArcId a : c->arcs) {
          aa[a] = 0;
          if (!forbidden[a]) hittable = true;
        }
      }
      if (!hittable) return budget + 1;
      ++count;
    }
    return count;
  }

  bool exists_within(int budget) {
    if (++nodes > guards.max_nodes)
      throw GuardExceeded("feedback search exceeded its node limit");
    auto c = shortest_live_dicycle(g, vertex_alive, arc_alive);
    if (!c) return true;
    if (budget <= 0) return false;
    if (lower_bound(budget) > budget) return false;
    std::vector<int> pinned;
    bool found = false;
    for (int x : selectable(*c)) {
      remove(x);
      if (exists_within(budget - 1)) {
        restore(x);
        found = true;
        break;
      }
      restore(x);
      forbidden[x] = 1;
      pinned.push_back(x);
    }
    for (int x : pinned) forbidden[x] = 0;
    return found;
  }
};

// Minimum feedback set size plus its lexicographically smallest witness.
inline std::vector<int> solve_feedback(const PlanarDigraph& g,
                                       const SolveGuards& guards,
                                       bool vertex_mode) {
  FeedbackSearch search(g, guards, vertex_mode);
  int size = search.lower_bound(g.n() + static_cast<int>(g.m()));
  while (!search.exists_within(size)) ++size;

  std::vector<int> chosen;
  int universe = vertex_mode ? g.n() : static_cast<int>(g.m());
  for (int x = 0; x < universe && static_cast<int>(chosen.size()) < size;
       ++x) {
    search.remove(x);
    if (search.exists_within(size - static_cast<int>(chosen.size()) - 1)) {
      chosen.push_back(x);
    } else {
      search.restore(x);
    }
  }
  internal_check(static_cast<int>(chosen.size()) == size,
                 "lexicographic forcing missed the optimum");
  internal_check(is_acyclic(g, search.vertex_alive, search.arc_alive),
                 "feedback witness leaves a dicycle");
  return chosen;
}

}  // namespace detail_feedback

inline FvsResult min_feedback_vertex_set(const PlanarDigraph& g,
                                         const SolveGuards& guards = {}) {
  if (g.n() > guards.max_n)
    throw GuardExceeded("instance larger than the solver guard");
  FvsResult res;
  std::vector<int> x = detail_feedback::solve_feedback(g, guards, true);
  res.X.assign(x.begin(), x.end());
  res.size = static_cast<int>(res.X.size());
  res.optimal = true;
  std::vector<char> alive(g.n(), 1), arcs(g.m(), 1);
  for (Vertex v : res.X) alive[v] = 0;
  auto order = topological_order(g, alive, arcs);
  internal_check(order.has_value(), "feedback vertex set fails to certify");
  res.certificate = *order;
  return res;
}

// known_nu lets callers reuse an already computed packing number for the
// planar min-max identity check; without it the check is skipped here and
// belongs to the caller.
inline FasResult min_feedback_arc_set(
    const PlanarDigraph& g, const SolveGuards& guards = {},
    std::optional<int> known_nu = std::nullopt) {
  if (g.n() > guards.max_n)
    throw GuardExceeded("instance larger than the solver guard");
  FasResult res;
  std::vector<int> a = detail_feedback::solve_feedback(g, guards, false);
  res.A.assign(a.begin(), a.end());
  res.size = static_cast<int>(res.A.size());
  res.optimal = true;
  if (known_nu && *known_nu != res.size)
    throw LyViolation("minimum feedback arc set differs from the maximum "
                      "dicycle packing on a planar instance");
  return res;
}

}  // namespace pfvs
