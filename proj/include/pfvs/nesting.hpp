#pragma once

#include <vector>

#include "pfvs/collection.hpp"
#include "pfvs/errors.hpp"
#include "pfvs/planar_digraph.hpp"

namespace pfvs {

// Containment forest of a non-crossing cycle family.  parent[c] is the
// smallest cycle whose interior strictly contains the interior of c, or -1
// when no cycle does; roots are the -1 nodes.
struct CycleForest {
  CycleCollection cycles;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<int> roots;
  // Cached interior face sets; every region computation reuses them.
  InteriorLabeling labeling;

  int size() const { return static_cast<int>(parent.size()); }
  int k_infinity() const { return static_cast<int>(roots.size()); }
};

inline CycleForest nesting_forest(const PlanarDigraph& g,
                                  const CycleCollection& coll) {
  if (!collection_non_crossing(g, coll))
    throw CrossingInput("cycle family crosses; nesting order undefined");
  CycleForest forest;
  forest.cycles = coll;
  forest.labeling = label_interiors(g, coll);
  int num_cycles = coll.size();
  forest.parent.assign(num_cycles, -1);
  forest.children.assign(num_cycles, {});
  const auto& interior = forest.labeling.cycle_interior;
  for (int c = 0; c < num_cycles; ++c) {
    // Containers of c are totally ordered by inclusion, so the one with the
    // fewest interior faces is the parent.
    int best = -1;
    for (int d = 0; d < num_cycles; ++d) {
      if (d == c || !interior[c].is_subset_of(interior[d])) continue;
      internal_check(interior[c] != interior[d],
                     "distinct cycles share an interior");
      if (best == -1 || interior[d].count() < interior[best].count())
        best = d;
    }
    forest.parent[c] = best;
  }
  for (int c = 0; c < num_cycles; ++c) {
    if (forest.parent[c] == -1)
      forest.roots.push_back(c);
    else
      forest.children[forest.parent[c]].push_back(c);
  }
  return forest;
}

}  // namespace pfvs
