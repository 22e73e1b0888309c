#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <queue>
#include <vector>

#include "pfvs/cycles.hpp"
#include "pfvs/errors.hpp"
#include "pfvs/planar_digraph.hpp"

namespace pfvs {

using FaceSet = boost::dynamic_bitset<>;

// Family of simple directed cycles.  The flags are computed by the
// validators below, never assumed.
struct CycleCollection {
  std::vector<DiCycle> cycles;
  bool arc_disjoint = false;
  bool non_crossing = false;

  int size() const { return static_cast<int>(cycles.size()); }
};

inline bool collection_arc_disjoint(const CycleCollection& coll) {
  std::vector<ArcId> all;
  for (const DiCycle& c : coll.cycles)
    all.insert(all.end(), c.arcs.begin(), c.arcs.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

// For each cycle, which faces lie strictly inside it, and for each face,
// which cycles enclose it.  Computed by flooding outward from the outer
// face: stepping across an arc of cycle c toggles membership in c, stepping
// across any other arc changes nothing.  No coordinates involved.
struct InteriorLabeling {
  // face_encl[f] has bit c set iff face f lies inside cycle c.
  std::vector<FaceSet> face_encl;
  // cycle_interior[c] has bit f set iff face f lies inside cycle c.
  std::vector<FaceSet> cycle_interior;
};

inline InteriorLabeling label_interiors(const PlanarDigraph& g,
                                        const CycleCollection& coll) {
  if (!collection_arc_disjoint(coll))
    throw PreconditionViolated(
        "interior labeling needs an arc-disjoint cycle family");
  int num_faces = static_cast<int>(g.faces().size());
  int num_cycles = coll.size();
  std::vector<int> cycle_of_arc(g.m(), -1);
  for (int c = 0; c < num_cycles; ++c)
    for (ArcId a : coll.cycles[c].arcs) cycle_of_arc[a] = c;

  InteriorLabeling lab;
  lab.face_encl.assign(num_faces, FaceSet(num_cycles));
  std::vector<char> seen(num_faces, 0);
  seen[g.outer_face()] = 1;
  std::queue<int> queue;
  queue.push(g.outer_face());
  int reached = 1;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop();
    for (const auto& walk : g.faces()[f].walks) {
      for (Dart d : walk) {
        int f2 = g.face_of(rev_dart(d));
        FaceSet next = lab.face_encl[f];
        if (int c = cycle_of_arc[arc_of(d)]; c != -1) next.flip(c);
        if (!seen[f2]) {
          seen[f2] = 1;
          lab.face_encl[f2] = std::move(next);
          queue.push(f2);
          ++reached;
        } else {
          internal_check(lab.face_encl[f2] == next,
                         "interior labels disagree along two routes; "
                         "cycle family is not made of closed curves");
        }
      }
    }
  }
  internal_check(reached == num_faces, "face adjacency did not reach "
                                       "every face from the outer face");
  internal_check(lab.face_encl[g.outer_face()].none(),
                 "outer face ended up inside a cycle");

  lab.cycle_interior.assign(num_cycles, FaceSet(num_faces));
  for (int f = 0; f < num_faces; ++f)
    for (std::size_t c = lab.face_encl[f].find_first(); c != FaceSet::npos;
         c = lab.face_encl[f].find_next(c))
      lab.cycle_interior[c].set(f);
  for (int c = 0; c < num_cycles; ++c)
    internal_check(lab.cycle_interior[c].any(),
                   "a cycle encloses no face at all");
  return lab;
}

// Two non-crossing cycles have interiors that are nested or disjoint; a
// crossing pair has overlapping interiors with neither containing the
// other.  This test is independent of however the family was produced.
inline bool collection_non_crossing(const PlanarDigraph& g,
                                    const CycleCollection& coll) {
  InteriorLabeling lab = label_interiors(g, coll);
  int num_cycles = coll.size();
  for (int i = 0; i < num_cycles; ++i) {
    for (int j = i + 1; j < num_cycles; ++j) {
      const FaceSet& a = lab.cycle_interior[i];
      const FaceSet& b = lab.cycle_interior[j];
      internal_check(a != b,
                     "two distinct arc-disjoint cycles bound the same "
                     "interior face set");
      if (!(a & b).any()) continue;           // disjoint interiors
      if (a.is_subset_of(b) || b.is_subset_of(a)) continue;  // nested
      return false;
    }
  }
  return true;
}

}  // namespace pfvs
