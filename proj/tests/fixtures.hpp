#pragma once

#include <vector>

#include "pfvs/pfvs.hpp"

// Hand-embedded instances with independently worked-out invariants; tests
// freeze those numbers.  Vertex and arc ids are stable, so expectations can
// name them directly.
namespace fixtures {

using namespace pfvs;

// Directed cycle 0 -> 1 -> ... -> len-1 -> 0, declared at its true digirth.
inline PlanarDigraph dicycle(int len) {
  std::vector<Arc> arcs;
  std::vector<std::vector<Dart>> rot(len);
  for (int i = 0; i < len; ++i) arcs.push_back({i, (i + 1) % len});
  for (int i = 0; i < len; ++i)
    rot[i] = {fwd_dart(i), bwd_dart((i + len - 1) % len)};
  return PlanarDigraph::build(len, std::move(arcs), std::move(rot), len);
}

inline PlanarDigraph triangle() { return dicycle(3); }

// Directed path 0 -> 1 -> 2; acyclic, one face of degree 4.
inline PlanarDigraph path3() {
  std::vector<Arc> arcs = {{0, 1}, {1, 2}};
  std::vector<std::vector<Dart>> rot = {
      {fwd_dart(0)}, {bwd_dart(0), fwd_dart(1)}, {bwd_dart(1)}};
  return PlanarDigraph::build(3, std::move(arcs), std::move(rot), 1);
}

inline PlanarDigraph single_arc() {
  std::vector<Arc> arcs = {{0, 1}};
  std::vector<std::vector<Dart>> rot = {{fwd_dart(0)}, {bwd_dart(0)}};
  return PlanarDigraph::build(2, std::move(arcs), std::move(rot), 1);
}

inline PlanarDigraph isolated_vertex() {
  return PlanarDigraph::build(1, {}, {{}}, 1);
}

// A 5-cycle 0..4 with a chordal shortcut 0 -> 2 inside; digirth 4.
// Dicycles: the 5-cycle and 0 -> 2 -> 3 -> 4 -> 0.
inline PlanarDigraph c5_chord(int declared = 4) {
  std::vector<Arc> arcs = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}};
  std::vector<std::vector<Dart>> rot = {
      {bwd_dart(4), fwd_dart(0), fwd_dart(5)},
      {bwd_dart(0), fwd_dart(1)},
      {bwd_dart(1), fwd_dart(2), bwd_dart(5)},
      {bwd_dart(2), fwd_dart(3)},
      {bwd_dart(3), fwd_dart(4)}};
  return PlanarDigraph::build(5, std::move(arcs), std::move(rot), declared);
}

// Pentagon 0 -> 1 -> 2 -> 3 -> 4 -> 0 with a chord 0 -> 2 and a re-entrant
// path 2 -> 5 -> 6 -> 0 drawn inside the pentagon, below the chord.  Faces:
// lens (arcs 0,1,5: triangle 0-1-2 cut off by the chord), the disk of the
// 4-cycle 0 -> 2 -> 5 -> 6 (arcs 5..8), a hexagonal face and the outside
// of the pentagon.  Dicycles: the pentagon, the inner 4-cycle, the chord
// shortcut 0 -> 2 -> 3 -> 4 -> 0 and the mix 0 -> 1 -> 2 -> 5 -> 6 -> 0;
// every one passes vertex 0.  Two maximum packings exist (pentagon+inner
// and shortcut+mix); only the first is non-crossing.
inline PlanarDigraph lens7(int declared = 4) {
  std::vector<Arc> arcs = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                           {0, 2}, {2, 5}, {5, 6}, {6, 0}};
  std::vector<std::vector<Dart>> rot = {
      {bwd_dart(4), bwd_dart(8), fwd_dart(5), fwd_dart(0)},
      {bwd_dart(0), fwd_dart(1)},
      {bwd_dart(1), bwd_dart(5), fwd_dart(6), fwd_dart(2)},
      {bwd_dart(2), fwd_dart(3)},
      {bwd_dart(3), fwd_dart(4)},
      {bwd_dart(6), fwd_dart(7)},
      {bwd_dart(7), fwd_dart(8)}};
  return PlanarDigraph::build(7, std::move(arcs), std::move(rot), declared);
}

// Three 4-rings pairwise sharing one corner of a central triangle: vertices
// 0,1,2 are the corners (named p,q,r in the derivations), each ring runs
// one triangle arc plus a three-arc return path through two private
// vertices.  The central triangle arcs 1->0, 1->2, 0->2 are transitive, so
// the rings are arc-disjoint dicycles; two longer dicycles mix ring halves.
inline PlanarDigraph triforce9() {
  std::vector<Arc> arcs = {{1, 0}, {0, 3}, {3, 4}, {4, 1},
                           {1, 2}, {2, 5}, {5, 6}, {6, 1},
                           {0, 2}, {2, 7}, {7, 8}, {8, 0}};
  std::vector<std::vector<Dart>> rot = {
      {bwd_dart(11), fwd_dart(8), bwd_dart(0), fwd_dart(1)},
      {bwd_dart(7), bwd_dart(3), fwd_dart(0), fwd_dart(4)},
      {fwd_dart(5), bwd_dart(4), bwd_dart(8), fwd_dart(9)},
      {bwd_dart(1), fwd_dart(2)},
      {bwd_dart(2), fwd_dart(3)},
      {bwd_dart(5), fwd_dart(6)},
      {bwd_dart(6), fwd_dart(7)},
      {bwd_dart(9), fwd_dart(10)},
      {bwd_dart(10), fwd_dart(11)}};
  return PlanarDigraph::build(9, std::move(arcs), std::move(rot), 4);
}

// Two triangles 0 -> 1 -> 2 -> 0 and 0 -> 3 -> 4 -> 0 glued at vertex 0,
// with an antiparallel pair 0 <-> 2 closing a figure eight: the triangles
// cross at 0 and 2.  Used as the crossing-input fixture.
inline PlanarDigraph figure_eight() {
  std::vector<Arc> arcs = {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 0}, {0, 2}};
  std::vector<std::vector<Dart>> rot = {
      {fwd_dart(5), fwd_dart(0), bwd_dart(4), bwd_dart(2)},
      {bwd_dart(0), fwd_dart(1)},
      {bwd_dart(1), bwd_dart(5), fwd_dart(2), fwd_dart(3)},
      {bwd_dart(3), fwd_dart(4)}};
  return PlanarDigraph::build(4, std::move(arcs), std::move(rot), 2);
}

// Triangle on 0,1,2 with both directions of every edge; five dicycles
// (three digons, two triangles), digirth 2.
inline PlanarDigraph bidi_triangle() {
  std::vector<Arc> arcs = {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}};
  std::vector<std::vector<Dart>> rot = {
      {fwd_dart(0), bwd_dart(1), fwd_dart(5), bwd_dart(4)},
      {fwd_dart(2), bwd_dart(3), fwd_dart(1), bwd_dart(0)},
      {fwd_dart(4), bwd_dart(5), fwd_dart(3), bwd_dart(2)}};
  return PlanarDigraph::build(3, std::move(arcs), std::move(rot), 2);
}

// Two directed triangles sharing only vertex 0.
inline PlanarDigraph bowtie() {
  std::vector<Arc> arcs = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}};
  std::vector<std::vector<Dart>> rot = {
      {fwd_dart(0), bwd_dart(2), fwd_dart(3), bwd_dart(5)},
      {bwd_dart(0), fwd_dart(1)},
      {bwd_dart(1), fwd_dart(2)},
      {bwd_dart(3), fwd_dart(4)},
      {bwd_dart(4), fwd_dart(5)}};
  return PlanarDigraph::build(5, std::move(arcs), std::move(rot), 3);
}

// Two vertex-disjoint directed triangles in one graph.
inline PlanarDigraph two_triangles() {
  std::vector<Arc> arcs = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  std::vector<std::vector<Dart>> rot = {
      {fwd_dart(0), bwd_dart(2)}, {fwd_dart(1), bwd_dart(0)},
      {fwd_dart(2), bwd_dart(1)}, {fwd_dart(3), bwd_dart(5)},
      {fwd_dart(4), bwd_dart(3)}, {fwd_dart(5), bwd_dart(4)}};
  return PlanarDigraph::build(6, std::move(arcs), std::move(rot), 3);
}

// K4 with a directed outer triangle 0 -> 1 -> 2 -> 0 and all remaining
// arcs into the center 3.  With good=false two entries of the center
// rotation are swapped and the data stops being a plane embedding.
inline PlanarDigraph make_k4(bool good) {
  std::vector<Arc> arcs = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
  std::vector<std::vector<Dart>> rot = {
      {fwd_dart(0), fwd_dart(3), bwd_dart(2)},
      {fwd_dart(1), fwd_dart(4), bwd_dart(0)},
      {fwd_dart(2), fwd_dart(5), bwd_dart(1)},
      good ? std::vector<Dart>{bwd_dart(3), bwd_dart(4), bwd_dart(5)}
           : std::vector<Dart>{bwd_dart(3), bwd_dart(5), bwd_dart(4)}};
  return PlanarDigraph::build(4, std::move(arcs), std::move(rot), 3);
}

}  // namespace fixtures
