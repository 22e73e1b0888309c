#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "pfvs/bounds.hpp"
#include "pfvs/cover.hpp"
#include "pfvs/cycles.hpp"
#include "pfvs/feedback.hpp"
#include "pfvs/graph_algos.hpp"
#include "pfvs/incidence.hpp"
#include "pfvs/lemmas.hpp"
#include "pfvs/nesting.hpp"
#include "pfvs/packing.hpp"
#include "pfvs/regions.hpp"
#include "pfvs/tau_star.hpp"
#include "pfvs/uncross.hpp"

namespace pfvs {

// Everything the solve command reports for one instance: exact invariants,
// both cover variants, and one verdict per inequality in the bound chain.
struct InstanceAnalysis {
  int n = 0, m = 0;
  int declared_g = 1;
  std::optional<int> girth;  // absent on acyclic instances

  int nu = 0;        // maximum arc-disjoint dicycle packing
  int fas_size = 0;  // minimum feedback arc set
  int tau = 0;       // minimum feedback vertex set
  Rat tau_star = 0;
  std::vector<Vertex> fvs;
  std::vector<ArcId> fas;
  std::vector<Vertex> cover_greedy;  // cover of the feedback arc set
  std::vector<Vertex> cover_min;

  std::optional<Rat> theorem_bnd;  // set when girth >= 4 and n >= 3
  std::optional<Rat> packing_bnd;
  std::optional<Rat> ratio;  // tau / tau*, absent when tau* = 0

  bool ly_ok = true;            // |A| == nu
  bool theorem_ok = true;       // tau <= theorem bound
  bool packing_ok = true;       // nu <= packing bound
  bool tau_star_le_tau = true;  // tau* <= tau
  bool tau_star_le_ng = true;   // tau* <= n/g
  bool ratio_ok = true;         // ratio <= 3/2 when defined
  bool cover_covers_ok = true;  // both covers hit every feedback arc
  bool cover_third_ok = true;   // 3 |greedy| <= n + |A|
  bool cover_chain_ok = true;   // tau <= |min cover| <= |greedy cover|
  bool certificate_ok = true;   // G - X acyclic, re-checked independently

  bool all_ok() const {
    return ly_ok && theorem_ok && packing_ok && tau_star_le_tau &&
           tau_star_le_ng && ratio_ok && cover_covers_ok && cover_third_ok &&
           cover_chain_ok && certificate_ok;
  }
};

namespace detail_analysis {

inline bool acyclic_without(const PlanarDigraph& g,
                            const std::vector<Vertex>& removed) {
  std::vector<char> va(g.n(), 1), aa(g.m(), 1);
  for (Vertex v : removed) va[v] = 0;
  return is_acyclic(g, va, aa);
}

inline bool covers(const PlanarDigraph& g, const std::vector<ArcId>& arcs,
                   const std::vector<Vertex>& x) {
  std::vector<char> in_x(g.n(), 0);
  for (Vertex v : x) in_x[v] = 1;
  for (ArcId a : arcs)
    if (!in_x[g.arc(a).tail] && !in_x[g.arc(a).head]) return false;
  return true;
}

}  // namespace detail_analysis

inline InstanceAnalysis analyze_instance(const PlanarDigraph& g,
                                         const SolveGuards& guards = {}) {
  InstanceAnalysis r;
  r.n = g.n();
  r.m = g.m();
  r.declared_g = g.declared_digirth();
  r.girth = digirth(g);

  CycleCollection packing = max_dicycle_packing(g, guards);
  r.nu = packing.size();
  FasResult fas = min_feedback_arc_set(g, guards);
  r.fas = fas.A;
  r.fas_size = fas.size;
  r.ly_ok = fas.size == r.nu;
  FvsResult fvs = min_feedback_vertex_set(g, guards);
  r.fvs = fvs.X;
  r.tau = fvs.size;
  r.certificate_ok = detail_analysis::acyclic_without(g, fvs.X);
  FractionalFvs frac = fractional_tau_star(g, guards);
  r.tau_star = frac.objective;

  r.cover_greedy = cover_arcs_greedy(g, fas.A);
  r.cover_min = min_vertex_cover_of_arcs(g, fas.A, guards);
  r.cover_covers_ok = detail_analysis::covers(g, fas.A, r.cover_greedy) &&
                      detail_analysis::covers(g, fas.A, r.cover_min) &&
                      detail_analysis::acyclic_without(g, r.cover_greedy) &&
                      detail_analysis::acyclic_without(g, r.cover_min);
  r.cover_third_ok =
      3 * static_cast<long>(r.cover_greedy.size()) <= r.n + r.fas_size;
  r.cover_chain_ok = r.tau <= static_cast<int>(r.cover_min.size()) &&
                     r.cover_min.size() <= r.cover_greedy.size();

  if (r.girth && *r.girth >= 4 && r.n >= 3) {
    r.theorem_bnd = theorem_bound(r.n, *r.girth);
    r.packing_bnd = packing_bound(r.n, *r.girth);
    r.theorem_ok = Rat(r.tau) <= *r.theorem_bnd;
    r.packing_ok = Rat(r.nu) <= *r.packing_bnd;
  }
  r.tau_star_le_tau = r.tau_star <= Rat(r.tau);
  if (r.girth) r.tau_star_le_ng = r.tau_star <= Rat(r.n, *r.girth);
  if (r.tau_star != 0) {
    r.ratio = Rat(r.tau) / r.tau_star;
    r.ratio_ok = *r.ratio <= Rat(3, 2);
  }
  return r;
}

// Proof-trace verdicts for one forest node (node == -1 is the outer
// region).  A check that does not apply to the node, because its
// hypotheses are not met there, is reported non-applicable rather than
// passed.
struct NodeCheck {
  RegionReport report;
  bool intersecting = false;  // two boundary cycles share a vertex
  int t2 = 0, t3 = 0;
  bool claim_applicable = false;
  bool claim_ok = true;
  bool t3_ok = true;  // t3 <= 2k-2 (inner) resp. 2k-4 (outer); zero when
                      // the boundary cycles are pairwise disjoint
  bool lemma1_applicable = false;
  bool lemma1_ok = true;
  bool t3_matches_h = true;  // every type-3 piece is a degree >= 6 face of H
  bool lemma2_applicable = false;
  bool lemma2_ok = true;

  bool ok() const {
    return (!claim_applicable || claim_ok) && t3_ok &&
           (!lemma1_applicable || lemma1_ok) && t3_matches_h &&
           (!lemma2_applicable || lemma2_ok);
  }
};

struct ProofTrace {
  int n = 0, m = 0;
  std::optional<int> girth;
  int packing_size = 0;
  std::vector<NodeCheck> nodes;  // forest nodes in id order, outer last
  long phi_total = 0;            // sum of region phi values
  long phi_expected = 0;         // 6n - 12
  bool phi_ok = false;

  bool all_ok() const {
    if (!phi_ok) return false;
    for (const NodeCheck& nc : nodes)
      if (!nc.ok()) return false;
    return true;
  }
};

namespace detail_analysis {

// The region of a node, cut out as a standalone embedded graph: arcs with
// a side in the region (this includes every boundary arc), the vertices
// they touch, rotations restricted in place.  The erased child interiors
// and the erased outside become the special faces that the disjoint-cycle
// branch of the region bound feeds to the face-sum inequality.
struct RegionSubgraph {
  PlanarDigraph graph;
  std::vector<int> special_faces;
};

inline RegionSubgraph extract_region(const PlanarDigraph& g,
                                     const CycleForest& forest, int node) {
  int num_faces = static_cast<int>(g.faces().size());
  std::vector<char> in_region(num_faces, 0);
  for (int f = 0; f < num_faces; ++f)
    if (detail_regions::innermost_cycle(forest.labeling, f) == node)
      in_region[f] = 1;

  std::vector<int> arc_map(g.m(), -1);
  std::vector<int> vertex_map(g.n(), -1);
  std::vector<ArcId> kept;
  for (ArcId a = 0; a < g.m(); ++a)
    if (in_region[g.left_face(a)] || in_region[g.right_face(a)]) {
      arc_map[a] = static_cast<int>(kept.size());
      kept.push_back(a);
    }
  int next_v = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    bool used = false;
    for (Dart d : g.rotation()[v])
      if (arc_map[arc_of(d)] != -1) used = true;
    if (used) vertex_map[v] = next_v++;
  }
  internal_check(next_v > 0, "region subgraph has no vertices");

  std::vector<Arc> arcs(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    arcs[i] = {vertex_map[g.arc(kept[i]).tail], vertex_map[g.arc(kept[i]).head]};
  std::vector<std::vector<Dart>> rot(next_v);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (vertex_map[v] == -1) continue;
    for (Dart d : g.rotation()[v]) {
      int na = arc_map[arc_of(d)];
      if (na == -1) continue;
      rot[vertex_map[v]].push_back(dart_forward(d) ? fwd_dart(na)
                                                   : bwd_dart(na));
    }
  }

  RegionSubgraph out{PlanarDigraph::build(next_v, std::move(arcs),
                                          std::move(rot),
                                          g.declared_digirth()),
                     {}};
  std::vector<int> boundary;
  if (node == -1)
    boundary = forest.roots;
  else {
    boundary.push_back(node);
    boundary.insert(boundary.end(), forest.children[node].begin(),
                    forest.children[node].end());
  }
  for (int c : boundary) {
    ArcId a = forest.cycles.cycles[c].arcs[0];
    // The special face sits on the side of the boundary arc that is not a
    // region face.
    Dart d = in_region[g.left_face(a)] ? bwd_dart(arc_map[a])
                                       : fwd_dart(arc_map[a]);
    out.special_faces.push_back(out.graph.face_of(d));
  }
  return out;
}

}  // namespace detail_analysis

// Runs the full bound pipeline on one connected instance: maximum packing,
// uncrossing, nesting forest, then every region-level check.  Throws
// DigirthViolation when the actual digirth is below 4.
inline ProofTrace verify_proof_instance(const PlanarDigraph& g,
                                        const SolveGuards& guards = {}) {
  if (g.num_components() != 1)
    throw PreconditionViolated(
        "proof verification runs on one connected component");
  ProofTrace tr;
  tr.n = g.n();
  tr.m = g.m();
  tr.girth = digirth(g);
  if (tr.girth && *tr.girth < 4)
    throw DigirthViolation("instance has digirth " +
                           std::to_string(*tr.girth) +
                           ", proof checks need at least 4");

  // Work at the true digirth when the declaration undersells it; the
  // region bounds sharpen with g.
  const PlanarDigraph* work = &g;
  std::optional<PlanarDigraph> rebuilt;
  if (tr.girth && *tr.girth > g.declared_digirth()) {
    rebuilt = PlanarDigraph::build(g.n(), g.arcs(), g.rotation(), *tr.girth);
    work = &*rebuilt;
  }

  CycleCollection packing = max_dicycle_packing(*work, guards);
  CycleCollection family = uncross(*work, packing);
  internal_check(family.size() == packing.size(),
                 "uncrossing changed the packing size");
  tr.packing_size = family.size();
  CycleForest forest = nesting_forest(*work, family);

  std::vector<int> node_ids;
  for (int c = 0; c < forest.size(); ++c) node_ids.push_back(c);
  node_ids.push_back(-1);

  std::vector<char> stamp(work->n(), 0);
  for (int node : node_ids) {
    NodeCheck nc;
    nc.report = classify_pieces(*work, forest, node);
    for (const PieceInfo& p : nc.report.pieces) {
      if (p.type == 2) ++nc.t2;
      if (p.type == 3) ++nc.t3;
    }

    std::vector<int> boundary;
    if (node == -1)
      boundary = forest.roots;
    else {
      boundary.push_back(node);
      boundary.insert(boundary.end(), forest.children[node].begin(),
                      forest.children[node].end());
    }
    std::fill(stamp.begin(), stamp.end(), 0);
    for (int c : boundary)
      for (Vertex v : forest.cycles.cycles[c].vertices) {
        if (stamp[v]) nc.intersecting = true;
        stamp[v] = 1;
      }

    nc.claim_applicable = work->n() >= 3;
    nc.claim_ok = nc.report.claim_holds;

    long t3_cap = node == -1 ? 2L * nc.report.k - 4 : 2L * nc.report.k - 2;
    nc.t3_ok = nc.intersecting ? nc.t3 <= t3_cap : nc.t2 == 0 && nc.t3 == 0;

    try {
      IncidenceBipartite h = build_incidence_bipartite(*work, forest, node);
      nc.lemma1_ok = check_lemma1(h);
      nc.lemma1_applicable = true;
      int heavy = 0;
      for (const Face& f : h.graph.faces())
        if (f.degree >= 6) ++heavy;
      nc.t3_matches_h = nc.t3 <= heavy;
    } catch (const PreconditionViolated&) {
      nc.lemma1_applicable = false;
    }

    if (!nc.intersecting && !boundary.empty()) {
      try {
        auto sub = detail_analysis::extract_region(*work, forest, node);
        nc.lemma2_ok = check_lemma2(sub.graph, sub.special_faces);
        nc.lemma2_applicable = true;
      } catch (const PreconditionViolated&) {
        nc.lemma2_applicable = false;
      }
    }

    tr.phi_total += nc.report.phi;
    tr.nodes.push_back(std::move(nc));
  }

  tr.phi_expected = 6L * tr.n - 12;
  tr.phi_ok = tr.phi_total == tr.phi_expected &&
              tr.phi_total == euler_phi_total(*work);
  return tr;
}

// Splits a possibly disconnected instance into its components, each with
// the induced rotation data, renumbered but otherwise untouched.
inline std::vector<PlanarDigraph> split_components(const PlanarDigraph& g) {
  int nc = g.num_components();
  std::vector<PlanarDigraph> out;
  if (nc == 1) {
    out.push_back(g);
    return out;
  }
  for (int c = 0; c < nc; ++c) {
    std::vector<int> vertex_map(g.n(), -1);
    int next_v = 0;
    for (Vertex v = 0; v < g.n(); ++v)
      if (g.component_of(v) == c) vertex_map[v] = next_v++;
    std::vector<int> arc_map(g.m(), -1);
    std::vector<Arc> arcs;
    for (ArcId a = 0; a < g.m(); ++a)
      if (g.component_of(g.arc(a).tail) == c) {
        arc_map[a] = static_cast<int>(arcs.size());
        arcs.push_back({vertex_map[g.arc(a).tail], vertex_map[g.arc(a).head]});
      }
    std::vector<std::vector<Dart>> rot(next_v);
    for (Vertex v = 0; v < g.n(); ++v) {
      if (vertex_map[v] == -1) continue;
      for (Dart d : g.rotation()[v])
        rot[vertex_map[v]].push_back(dart_forward(d)
                                         ? fwd_dart(arc_map[arc_of(d)])
                                         : bwd_dart(arc_map[arc_of(d)]));
    }
    out.push_back(PlanarDigraph::build(next_v, std::move(arcs), std::move(rot),
                                       g.declared_digirth()));
  }
  return out;
}

}  // namespace pfvs
