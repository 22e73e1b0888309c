#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "pfvs/regions.hpp"

namespace pfvs {

// Cycle-vertex incidence graph of one region's boundary: one side has the
// boundary cycles, the other the graph vertices lying on at least two of
// them, with an edge for each incidence.  Arcs run cycle -> vertex; the
// rotation system is induced by the host embedding.
struct IncidenceBipartite {
  PlanarDigraph graph;
  int num_u = 0;
  std::vector<int> u_cycles;        // H-vertex in [0,num_u) -> cycle id
  std::vector<Vertex> v_vertices;   // H-vertex num_u+j -> host vertex
};

// Builds H for a forest node (-1 for the outer region).  At a shared vertex,
// the cycles are ordered by where each one passes through it in the host
// rotation.  At a cycle, the incidence order is what contracting the cycle
// in the host embedding yields: each passage through a shared vertex keeps
// its two boundary darts plus a stub toward the vertex, consecutive passages
// are spliced together along the cycle, and the closing pair is dropped; the
// stubs then stand in their plane order.  Traversal order alone is not
// enough: with three or more incidences on one cycle the result depends on
// which side of each passage the neighboring cycles sit.  The face count of
// H must equal the piece count of the region.
inline IncidenceBipartite build_incidence_bipartite(const PlanarDigraph& g,
                                                    const CycleForest& forest,
                                                    int node) {
  detail_regions::RegionStructure rs =
      detail_regions::analyze_region(g, forest, node);

  IncidenceBipartite h;
  h.u_cycles = rs.boundary_cycles;
  h.num_u = static_cast<int>(h.u_cycles.size());

  std::vector<int> cycle_count(g.n(), 0);
  std::vector<int> stamp(g.n(), -1);
  for (int c : h.u_cycles)
    for (Vertex v : forest.cycles.cycles[c].vertices) {
      if (stamp[v] != c) ++cycle_count[v];
      stamp[v] = c;
    }
  std::vector<int> v_index(g.n(), -1);
  for (Vertex v = 0; v < g.n(); ++v)
    if (cycle_count[v] >= 2) {
      v_index[v] = h.num_u + static_cast<int>(h.v_vertices.size());
      h.v_vertices.push_back(v);
    }

  // One H-arc per (cycle, shared vertex) incidence, laid out cycle by
  // cycle in traversal order, with the host darts of each passage.
  struct Passage {
    ArcId h_arc;
    Dart host_in;           // dart of the cycle arc entering the vertex
    Dart host_out;          // dart of the cycle arc leaving it
    bool in_first = false;  // host_out follows host_in among boundary darts
  };
  std::vector<Arc> h_arcs;
  std::vector<Passage> passages;
  std::vector<std::vector<int>> u_passages(h.num_u);
  std::vector<std::vector<int>> v_passages(h.v_vertices.size());
  for (int u = 0; u < h.num_u; ++u) {
    const DiCycle& cyc = forest.cycles.cycles[h.u_cycles[u]];
    for (std::size_t i = 0; i < cyc.vertices.size(); ++i) {
      Vertex v = cyc.vertices[i];
      if (v_index[v] == -1) continue;
      ArcId id = static_cast<ArcId>(h_arcs.size());
      h_arcs.push_back({u, v_index[v]});
      ArcId in_arc = cyc.arcs[(i + cyc.arcs.size() - 1) % cyc.arcs.size()];
      passages.push_back({id, bwd_dart(in_arc), fwd_dart(cyc.arcs[i])});
      u_passages[u].push_back(static_cast<int>(passages.size()) - 1);
      v_passages[v_index[v] - h.num_u].push_back(
          static_cast<int>(passages.size()) - 1);
    }
  }

  std::vector<std::vector<Dart>> h_rot(h.num_u + h.v_vertices.size());

  // Around a shared vertex the boundary cycles may not interleave, so each
  // passage's two darts sit next to each other once every other dart is
  // dropped.  Record which of the two comes first and emit the cycles in
  // host rotation order.
  for (std::size_t j = 0; j < h.v_vertices.size(); ++j) {
    std::vector<std::tuple<std::size_t, int, bool>> slots;
    for (int p : v_passages[j]) {
      slots.emplace_back(g.rotation_pos(passages[p].host_in), p, true);
      slots.emplace_back(g.rotation_pos(passages[p].host_out), p, false);
    }
    std::sort(slots.begin(), slots.end());
    std::size_t L = slots.size();
    for (std::size_t i = 0; i < L; ++i) {
      int p = std::get<1>(slots[i]);
      if (!std::get<2>(slots[i])) continue;
      if (std::get<1>(slots[(i + 1) % L]) == p)
        passages[p].in_first = true;
      else if (std::get<1>(slots[(i + L - 1) % L]) == p)
        passages[p].in_first = false;
      else
        internal_check(false, "boundary cycles interleave at a shared vertex");
      h_rot[h.num_u + j].push_back(bwd_dart(passages[p].h_arc));
    }
  }

  // Contract each cycle.  Tokens 3j, 3j+1, 3j+2 stand for the entering
  // dart, leaving dart, and stub of its j-th passage; a passage reads
  // (in, out, stub) or (out, in, stub) around its vertex depending on which
  // dart comes first.  Splicing replaces the leaving dart of one passage by
  // the next passage's list cut after its entering dart; dropping the pair
  // that closes the loop leaves only the stubs.
  for (int u = 0; u < h.num_u; ++u) {
    const std::vector<int>& ps = u_passages[u];
    int t = static_cast<int>(ps.size());
    if (t == 0) continue;
    std::vector<int> merged;
    if (passages[ps[0]].in_first)
      merged = {0, 1, 2};
    else
      merged = {1, 0, 2};
    for (int j = 1; j < t; ++j) {
      auto it = merged.erase(
          std::find(merged.begin(), merged.end(), 3 * (j - 1) + 1));
      if (passages[ps[j]].in_first)
        merged.insert(it, {3 * j + 1, 3 * j + 2});
      else
        merged.insert(it, {3 * j + 2, 3 * j + 1});
    }
    merged.erase(std::find(merged.begin(), merged.end(), 3 * (t - 1) + 1));
    merged.erase(std::find(merged.begin(), merged.end(), 0));
    for (int tok : merged)
      h_rot[u].push_back(fwd_dart(passages[ps[tok / 3]].h_arc));
  }

  h.graph = PlanarDigraph::build(h.num_u + static_cast<int>(h.v_vertices.size()),
                                 h_arcs, h_rot, 2);
  internal_check(static_cast<int>(h.graph.faces().size()) == rs.num_pieces,
                 "incidence graph face count differs from the piece count");
  return h;
}

// True iff H has at most 2|U|-4 faces of degree >= 6.  The hypotheses (arcs
// all cycle->vertex, vertex side degrees >= 2, all faces degree >= 4) are
// rechecked and a violation names the failing one.
inline bool check_lemma1(const IncidenceBipartite& h) {
  const PlanarDigraph& hg = h.graph;
  for (ArcId a = 0; a < hg.m(); ++a)
    if (hg.arc(a).tail >= h.num_u || hg.arc(a).head < h.num_u)
      throw PreconditionViolated(
          "incidence arcs must run from the cycle side to the vertex side");
  for (Vertex v = h.num_u; v < hg.n(); ++v)
    if (static_cast<int>(hg.in_arcs(v).size()) < 2)
      throw PreconditionViolated(
          "a vertex-side node has degree below two");
  for (const Face& f : hg.faces())
    if (f.degree < 4)
      throw PreconditionViolated("a face has degree below four");
  int heavy = 0;
  for (const Face& f : hg.faces())
    if (f.degree >= 6) ++heavy;
  return heavy <= 2 * h.num_u - 4;
}

}  // namespace pfvs
