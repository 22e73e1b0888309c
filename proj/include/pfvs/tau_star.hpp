#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "pfvs/cycles.hpp"
#include "pfvs/feedback.hpp"
#include "pfvs/simplex.hpp"

namespace pfvs {

struct FractionalFvs {
  std::vector<Rat> weights;           // one per vertex, in [0,1]
  Rat objective = 0;                  // sum of weights
  std::vector<DiCycle> active_cycles; // generated constraints
};

// Minimum-weight dicycle under vertex weights, with ties broken by fewest
// arcs and then by the smallest arc-id sequence.  For each start vertex a
// label-setting search grows lexicographically smallest path labels
// (weight, hops, arc sequence); entry to a vertex pays its weight, the
// start pays once when the search opens.  Nullopt on acyclic graphs.
inline std::optional<std::pair<Rat, DiCycle>> min_weight_dicycle(
    const PlanarDigraph& g, const std::vector<Rat>& w) {
  internal_check(static_cast<int>(w.size()) == g.n(),
                 "one weight per vertex expected");
  struct Label {
    Rat dist;
    int hops;
    std::vector<ArcId> seq;
    Vertex at;
    bool operator>(const Label& o) const {
      if (dist != o.dist) return dist > o.dist;
      if (hops != o.hops) return hops > o.hops;
      if (seq != o.seq) return seq > o.seq;
      return at > o.at;
    }
  };

  bool have = false;
  Rat best_w = 0;
  int best_hops = 0;
  std::vector<ArcId> best_seq;
  auto offer = [&](const Rat& cw, int hops, const std::vector<ArcId>& seq) {
    if (!have || cw < best_w || (cw == best_w && hops < best_hops) ||
        (cw == best_w && hops == best_hops && seq < best_seq)) {
      have = true;
      best_w = cw;
      best_hops = hops;
      best_seq = seq;
    }
  };

  for (Vertex s = 0; s < g.n(); ++s) {
    std::priority_queue<Label, std::vector<Label>, std::greater<>> open;
    std::vector<char> closed(g.n(), 0);
    open.push({w[s], 0, {}, s});
    while (!open.empty()) {
      Label cur = open.top();
      open.pop();
      if (closed[cur.at]) continue;
      closed[cur.at] = 1;
      for (ArcId a : g.out_arcs(cur.at)) {
        Vertex to = g.arc(a).head;
        if (to == s) {
          // Closing the walk adds no weight: s is already paid for.
          auto seq = cur.seq;
          seq.push_back(a);
          offer(cur.dist, cur.hops + 1, seq);
          continue;
        }
        if (closed[to]) continue;
        Label next{cur.dist + w[to], cur.hops + 1, cur.seq, to};
        next.seq.push_back(a);
        open.push(std::move(next));
      }
    }
  }
  if (!have) return std::nullopt;
  return std::make_pair(best_w, cycle_from_arcs(g, best_seq));
}

// Exact optimum of the fractional feedback LP: minimize the weight sum so
// that every dicycle carries weight at least 1, weights in [0,1].  Solved
// as a restricted master over generated cycle constraints; the minimum
// weight dicycle is the separation oracle, and the run ends on a
// separation pass that certifies the constraint system at >= 1 exactly.
inline FractionalFvs fractional_tau_star(const PlanarDigraph& g,
                                         const SolveGuards& guards = {}) {
  FractionalFvs res;
  res.weights.assign(g.n(), Rat(0));
  long rounds = 0;
  for (;;) {
    internal_check(++rounds <= guards.max_cycles,
                   "constraint generation failed to converge");
    auto cut = min_weight_dicycle(g, res.weights);
    if (!cut || cut->first >= 1) {
      for (const Rat& wv : res.weights)
        internal_check(wv >= 0 && wv <= 1, "weight escaped [0,1]");
      return res;
    }
    for (const DiCycle& c : res.active_cycles)
      internal_check(!(c == cut->second),
                     "separation returned an already active cycle");
    res.active_cycles.push_back(cut->second);

    // Master problem: maximize -sum w, each active cycle's weight >= 1
    // written as -sum_{v in C} w_v <= -1, plus w_v <= 1.
    int n = g.n();
    int rows = static_cast<int>(res.active_cycles.size()) + n;
    std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> b(rows, Rat(0)), c(n, Rat(-1));
    for (std::size_t i = 0; i < res.active_cycles.size(); ++i) {
      for (Vertex v : res.active_cycles[i].vertices) A[i][v] = -1;
      b[i] = -1;
    }
    for (int v = 0; v < n; ++v) {
      A[res.active_cycles.size() + v][v] = 1;
      b[res.active_cycles.size() + v] = 1;
    }
    LpSolver lp(A, b, c);
    std::vector<Rat> x;
    auto opt = lp.solve(x);
    internal_check(opt.has_value(), "master problem must be feasible");
    res.weights = x;
    res.objective = -*opt;
  }
}

// tau over tau-star; undefined on acyclic inputs where tau-star is zero.
inline Rat gw_ratio(const PlanarDigraph& g, const SolveGuards& guards = {}) {
  FractionalFvs frac = fractional_tau_star(g, guards);
  if (frac.objective == 0)
    throw UndefinedRatio("ratio undefined when the fractional optimum is 0");
  FvsResult fvs = min_feedback_vertex_set(g, guards);
  return Rat(fvs.size) / frac.objective;
}

}  // namespace pfvs
