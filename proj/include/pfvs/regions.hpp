#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "pfvs/nesting.hpp"
#include "pfvs/rational.hpp"

namespace pfvs {

// One connected-interior piece of a region: ell boundary arcs, a type in
// {1,2,3}, and the sum of 3d(F)-6 over its faces.
struct PieceInfo {
  int ell = 0;
  int type = 0;
  long phi = 0;
};

// Per-node region summary: node is a cycle id, or -1 for the outer region.
// k counts the children (roots, for the outer region); phi sums 3d(F)-6
// over the region's faces.
struct RegionReport {
  int node = -1;
  int k = 0;
  long phi = 0;
  std::vector<PieceInfo> pieces;
  Rat claim_bound = 0;
  bool claim_holds = false;
};

namespace detail_regions {

// The innermost cycle whose interior contains face f, or -1.  Enclosing
// cycles of one face always form a nesting chain, so the one with the
// fewest interior faces is the innermost.
inline int innermost_cycle(const InteriorLabeling& lab, int f) {
  int best = -1;
  std::size_t best_size = 0;
  for (std::size_t c = lab.face_encl[f].find_first();
       c != FaceSet::npos; c = lab.face_encl[f].find_next(c)) {
    std::size_t size = lab.cycle_interior[c].count();
    if (best == -1 || size < best_size) {
      internal_check(best == -1 || size != best_size,
                     "two enclosing cycles with equal interiors");
      best = static_cast<int>(c);
      best_size = size;
    }
  }
  return best;
}

struct BoundaryWalk {
  std::vector<Dart> darts;  // region-side darts in contour order
  int piece = -1;
};

struct RegionStructure {
  int node = -1;
  std::vector<int> boundary_cycles;  // the node (unless outer) then children
  std::vector<int> arc_owner;        // arc -> boundary cycle id, or -1
  std::vector<char> in_region;       // per face
  std::vector<int> region_faces;
  std::vector<int> piece_of_face;    // face -> piece index, or -1
  int num_pieces = 0;
  std::vector<BoundaryWalk> walks;
};

inline RegionStructure analyze_region(const PlanarDigraph& g,
                                      const CycleForest& forest, int node) {
  RegionStructure rs;
  rs.node = node;
  if (node == -1) {
    rs.boundary_cycles = forest.roots;
  } else {
    internal_check(node >= 0 && node < forest.size(), "node out of range");
    rs.boundary_cycles.push_back(node);
    for (int c : forest.children[node]) rs.boundary_cycles.push_back(c);
  }

  rs.arc_owner.assign(g.m(), -1);
  for (int c : rs.boundary_cycles)
    for (ArcId a : forest.cycles.cycles[c].arcs) rs.arc_owner[a] = c;

  int num_faces = static_cast<int>(g.faces().size());
  rs.in_region.assign(num_faces, 0);
  for (int f = 0; f < num_faces; ++f)
    if (innermost_cycle(forest.labeling, f) == node) {
      rs.in_region[f] = 1;
      rs.region_faces.push_back(f);
    }
  internal_check(!rs.region_faces.empty(), "region without faces");

  // Pieces: flood across arcs that are not on the boundary cycles.
  rs.piece_of_face.assign(num_faces, -1);
  for (int f0 : rs.region_faces) {
    if (rs.piece_of_face[f0] != -1) continue;
    int piece = rs.num_pieces++;
    std::queue<int> queue;
    rs.piece_of_face[f0] = piece;
    queue.push(f0);
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop();
      for (const auto& walk : g.faces()[f].walks)
        for (Dart d : walk) {
          int f2 = g.face_of(rev_dart(d));
          if (rs.arc_owner[arc_of(d)] != -1) {
            internal_check(rs.in_region[f2] == 0,
                           "boundary arc with both sides in the region");
            continue;
          }
          internal_check(rs.in_region[f2] == 1,
                         "interior arc leads out of the region");
          if (rs.piece_of_face[f2] == -1) {
            rs.piece_of_face[f2] = piece;
            queue.push(f2);
          }
        }
    }
  }

  // Contour walks: from a region-side boundary dart, the next one is found
  // by walking the face orbit and hopping across interior arcs.
  std::vector<char> seen(2 * g.m(), 0);
  for (ArcId a = 0; a < g.m(); ++a) {
    if (rs.arc_owner[a] == -1) continue;
    bool left_in = rs.in_region[g.face_of(fwd_dart(a))] == 1;
    bool right_in = rs.in_region[g.face_of(bwd_dart(a))] == 1;
    internal_check(left_in != right_in,
                   "boundary arc must have exactly one side in the region");
    Dart d0 = left_in ? fwd_dart(a) : bwd_dart(a);
    if (seen[d0]) continue;
    BoundaryWalk walk;
    walk.piece = rs.piece_of_face[g.face_of(d0)];
    Dart d = d0;
    do {
      internal_check(!seen[d], "contour revisited a boundary dart");
      seen[d] = 1;
      walk.darts.push_back(d);
      internal_check(rs.piece_of_face[g.face_of(d)] == walk.piece,
                     "contour left its piece");
      Dart e = g.next_in_face(d);
      int hops = 0;
      while (rs.arc_owner[arc_of(e)] == -1) {
        internal_check(++hops <= 2 * g.m(), "contour hop loop");
        e = g.next_in_face(rev_dart(e));
      }
      d = e;
    } while (d != d0);
    rs.walks.push_back(std::move(walk));
  }
  return rs;
}

}  // namespace detail_regions

// Sum of 3d(F)-6 over the faces of the region of the given node (-1 for
// the outer region).  The regions partition the face set.
inline long region_phi(const PlanarDigraph& g, const CycleForest& forest,
                       int node) {
  long phi = 0;
  int num_faces = static_cast<int>(g.faces().size());
  for (int f = 0; f < num_faces; ++f)
    if (detail_regions::innermost_cycle(forest.labeling, f) == node)
      phi += 3L * g.faces()[f].degree - 6;
  return phi;
}

// Region-level lower bound on phi in terms of the child count.
inline Rat claim_phi_bound(bool outer, int k, int g) {
  if (outer) return Rat(3, 2) * k * (g - 2) + (g >= 6 ? 6 : 3);
  return Rat(3, 2) * (g - 2) * k + Rat(3, 2) * g + (g >= 6 ? 3 : 0);
}

inline bool check_claim1(const RegionReport& rep, int g) {
  return Rat(rep.phi) >= claim_phi_bound(rep.node == -1, rep.k, g);
}

// Decomposes the region of a forest node into its connected-interior
// pieces, types each piece, and evaluates the region phi bound.  Typing:
// ell >= 4 is type 1; a 3-arc piece bounded by two cycles is type 2 (its
// chord must be transitive and the long cycle must beat the girth by one,
// otherwise the declared digirth is contradicted); a 3-arc piece bounded
// by three cycles is type 3.
inline RegionReport classify_pieces(const PlanarDigraph& g,
                                    const CycleForest& forest, int node) {
  using namespace detail_regions;
  RegionStructure rs = analyze_region(g, forest, node);
  RegionReport rep;
  rep.node = node;
  rep.k = node == -1 ? static_cast<int>(forest.roots.size())
                     : static_cast<int>(forest.children[node].size());

  std::vector<PieceInfo> pieces(rs.num_pieces);
  std::vector<int> piece_runs(rs.num_pieces, 0);
  std::vector<int> piece_walks(rs.num_pieces, 0);
  for (int f : rs.region_faces) {
    pieces[rs.piece_of_face[f]].phi += 3L * g.faces()[f].degree - 6;
  }
  for (const BoundaryWalk& walk : rs.walks) {
    pieces[walk.piece].ell += static_cast<int>(walk.darts.size());
    piece_walks[walk.piece] += 1;
    int runs = 0;
    std::size_t len = walk.darts.size();
    for (std::size_t i = 0; i < len; ++i) {
      int owner = rs.arc_owner[arc_of(walk.darts[i])];
      int prev = rs.arc_owner[arc_of(walk.darts[(i + len - 1) % len])];
      if (owner != prev) ++runs;
    }
    if (runs == 0) runs = 1;  // the walk stays on one cycle
    piece_runs[walk.piece] += runs;
  }

  int t3 = 0, t2 = 0;
  for (int p = 0; p < rs.num_pieces; ++p) {
    PieceInfo& info = pieces[p];
    if (info.ell == 0) {
      // Only the outer region of an empty forest has an unbounded piece.
      internal_check(rs.boundary_cycles.empty(),
                     "piece without boundary arcs next to boundary cycles");
      info.type = 1;
      continue;
    }
    internal_check(info.ell >= 3, "piece with fewer than three boundary arcs");
    if (info.ell >= 4) {
      info.type = 1;
      continue;
    }
    internal_check(piece_walks[p] == 1, "three-arc piece with several walks");
    const BoundaryWalk* walk = nullptr;
    for (const BoundaryWalk& w : rs.walks)
      if (w.piece == p) walk = &w;
    internal_check(walk != nullptr, "piece without a walk");
    if (piece_runs[p] == 3) {
      info.type = 3;
      ++t3;
      continue;
    }
    internal_check(piece_runs[p] == 2,
                   "three-arc piece with a single boundary cycle");
    info.type = 2;
    ++t2;
    // Two arcs from one cycle meeting at a corner, one chord from another.
    ArcId pair[2], chord = -1;
    int pair_n = 0;
    int dominant = -1;
    for (int i = 0; i < 3; ++i) {
      int owner = rs.arc_owner[arc_of(walk->darts[i])];
      int owner2 = rs.arc_owner[arc_of(walk->darts[(i + 1) % 3])];
      if (owner == owner2) dominant = owner;
    }
    internal_check(dominant != -1, "two-run triangle without a repeated cycle");
    for (Dart d : walk->darts) {
      ArcId a = arc_of(d);
      if (rs.arc_owner[a] == dominant)
        pair[pair_n++] = a;
      else
        chord = a;
    }
    internal_check(pair_n == 2 && chord != -1, "two-run triangle malformed");
    ArcId e1 = pair[0], e2 = pair[1];
    if (g.arc(e1).head != g.arc(e2).tail) std::swap(e1, e2);
    internal_check(g.arc(e1).head == g.arc(e2).tail,
                   "paired arcs are not consecutive on their cycle");
    Vertex x = g.arc(e1).tail, z = g.arc(e2).head;
    internal_check((g.arc(chord).tail == x && g.arc(chord).head == z) ||
                       (g.arc(chord).tail == z && g.arc(chord).head == x),
                   "chord does not join the run endpoints");
    if (g.arc(chord).tail == z)
      throw DigirthViolation("a two-run triangle closes a 3-dicycle, "
                             "contradicting the declared digirth");
    // Transitive chord: shortcutting the long cycle past the corner yields
    // a dicycle one arc shorter, which must still meet the digirth.
    long shortcut = static_cast<long>(
                        forest.cycles.cycles[dominant].length()) - 1;
    if (shortcut < g.declared_digirth())
      throw DigirthViolation("a transitive two-run triangle shortcuts its "
                             "cycle below the declared digirth");
  }

  long ell_total = 0, boundary_total = 0;
  for (const PieceInfo& info : pieces) {
    rep.phi += info.phi;
    ell_total += info.ell;
  }
  for (int c : rs.boundary_cycles)
    boundary_total += forest.cycles.cycles[c].length();
  internal_check(ell_total == boundary_total,
                 "piece boundary arcs do not add up to the cycle lengths");

  // Any vertex on two boundary cycles certifies an intersecting pair.
  bool intersecting = false;
  {
    std::vector<int> stamp(g.n(), -1);
    for (int c : rs.boundary_cycles)
      for (Vertex v : forest.cycles.cycles[c].vertices) {
        if (stamp[v] >= 0 && stamp[v] != c) intersecting = true;
        stamp[v] = c;
      }
  }
  if (intersecting) {
    internal_check(t3 <= 2 * static_cast<int>(rs.boundary_cycles.size()) - 4,
                   "too many three-cycle triangles for the boundary size");
  } else {
    internal_check(t2 == 0 && t3 == 0,
                   "typed triangle without intersecting boundary cycles");
  }

  rep.pieces = std::move(pieces);
  rep.claim_bound = claim_phi_bound(node == -1, rep.k, g.declared_digirth());
  rep.claim_holds = check_claim1(rep, g.declared_digirth());
  return rep;
}

}  // namespace pfvs
