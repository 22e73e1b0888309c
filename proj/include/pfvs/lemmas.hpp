#pragma once

#include <algorithm>
#include <vector>

#include "pfvs/planar_digraph.hpp"

namespace pfvs {

// True iff the faces outside S carry at least as much 3d(F)-6 weight as
// Sigma_{F in S} (3d(F)+6) - 12.  S must consist of faces each bounded by
// one simple closed walk, with those walks pairwise vertex-disjoint, in a
// connected graph.
inline bool check_lemma2(const PlanarDigraph& g, const std::vector<int>& s) {
  if (g.num_components() != 1)
    throw PreconditionViolated("lemma 2 needs a connected graph");
  int num_faces = static_cast<int>(g.faces().size());
  std::vector<char> in_s(num_faces, 0);
  std::vector<char> used_vertex(g.n(), 0);
  for (int f : s) {
    if (f < 0 || f >= num_faces)
      throw PreconditionViolated("face id out of range");
    if (in_s[f]) throw PreconditionViolated("face listed twice");
    in_s[f] = 1;
    const Face& face = g.faces()[f];
    if (face.walks.size() != 1)
      throw PreconditionViolated("a chosen face has several boundary walks");
    std::vector<Vertex> on_walk;
    for (Dart d : face.walks[0]) on_walk.push_back(g.origin(d));
    std::sort(on_walk.begin(), on_walk.end());
    if (std::adjacent_find(on_walk.begin(), on_walk.end()) != on_walk.end())
      throw PreconditionViolated(
          "a chosen face is not bounded by a simple cycle");
    for (Vertex v : on_walk) {
      if (used_vertex[v])
        throw PreconditionViolated(
            "two chosen faces share a boundary vertex");
      used_vertex[v] = 1;
    }
  }
  long outside = 0, inside = 0;
  for (int f = 0; f < num_faces; ++f) {
    long d = g.faces()[f].degree;
    if (in_s[f])
      inside += 3 * d + 6;
    else
      outside += 3 * d - 6;
  }
  return outside >= inside - 12;
}

}  // namespace pfvs
