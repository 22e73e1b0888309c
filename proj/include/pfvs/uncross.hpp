#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "pfvs/collection.hpp"
#include "pfvs/cycles.hpp"
#include "pfvs/errors.hpp"
#include "pfvs/planar_digraph.hpp"

namespace pfvs {

namespace detail_uncross {

// Depth of each face: 0 on the outer face, and stepping from the right side
// of a union arc to its left side adds 1.  Well-defined because the union of
// arc-disjoint cycles is a sum of closed curves.
inline std::vector<long> face_depths(const PlanarDigraph& g,
                                     const std::vector<char>& in_union) {
  int num_faces = static_cast<int>(g.faces().size());
  std::vector<long> depth(num_faces, 0);
  std::vector<char> seen(num_faces, 0);
  seen[g.outer_face()] = 1;
  std::queue<int> queue;
  queue.push(g.outer_face());
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop();
    for (const auto& walk : g.faces()[f].walks) {
      for (Dart d : walk) {
        int f2 = g.face_of(rev_dart(d));
        long next = depth[f];
        if (in_union[arc_of(d)]) next += dart_forward(d) ? -1 : +1;
        if (!seen[f2]) {
          seen[f2] = 1;
          depth[f2] = next;
          queue.push(f2);
        } else {
          internal_check(depth[f2] == next,
                         "face depth disagrees along two routes");
        }
      }
    }
  }
  return depth;
}

// All in/out pairings of the ends around one vertex whose chords do not
// interleave in the rotation order.  ends is the rotation-ordered list of
// (arc, is_out); the recursion pairs the first end with every opposite end
// that splits the rest into two balanced halves.
inline void noncrossing_matchings(
    const std::vector<std::pair<ArcId, bool>>& ends, std::size_t lo,
    std::size_t hi, std::vector<std::pair<ArcId, ArcId>>& acc,
    std::vector<std::vector<std::pair<ArcId, ArcId>>>& out) {
  if (lo == hi) {
    out.push_back(acc);
    return;
  }
  int balance = 0;
  for (std::size_t j = lo + 1; j < hi; ++j) {
    if (ends[j].second != ends[lo].second && balance == 0) {
      ArcId in = ends[lo].second ? ends[j].first : ends[lo].first;
      ArcId to = ends[lo].second ? ends[lo].first : ends[j].first;
      acc.emplace_back(in, to);
      // Recurse on the span inside the chord, then on the span after it.
      std::vector<std::vector<std::pair<ArcId, ArcId>>> inner;
      std::vector<std::pair<ArcId, ArcId>> acc2;
      noncrossing_matchings(ends, lo + 1, j, acc2, inner);
      for (auto& half : inner) {
        auto saved = acc;
        acc.insert(acc.end(), half.begin(), half.end());
        noncrossing_matchings(ends, j + 1, hi, acc, out);
        acc = std::move(saved);
      }
      acc.pop_back();
    }
    balance += ends[j].second == ends[lo].second ? 1 : -1;
  }
}

struct RollbackDsu {
  std::vector<int> parent, size;
  std::vector<std::pair<int, int>> log;  // (merged root, old size of winner)

  explicit RollbackDsu(int n) : parent(n), size(n, 1) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] < size[b]) std::swap(a, b);
    log.emplace_back(b, size[a]);
    parent[b] = a;
    size[a] += size[b];
    return true;
  }
  std::size_t mark() const { return log.size(); }
  void rollback(std::size_t to) {
    while (log.size() > to) {
      auto [child, old_size] = log.back();
      log.pop_back();
      size[parent[child]] = old_size;
      parent[child] = child;
    }
  }
};

}  // namespace detail_uncross

// Replaces a (possibly crossing) arc-disjoint cycle family by a non-crossing
// family of the same cardinality on the same arc set.  The fast path matches
// each incoming union arc to an outgoing one through the face-depth
// potential, then splits any walk that revisits a vertex by re-pairing two
// of its passes (the re-pairing nests, so it cannot introduce a crossing).
// If that decomposition does not hit the required cardinality, an exhaustive
// search over all per-vertex non-interleaving pairings takes over.  A final
// interior-based validation is run on whatever comes out.
inline CycleCollection uncross(const PlanarDigraph& g,
                               const CycleCollection& coll) {
  if (!collection_arc_disjoint(coll))
    throw PreconditionViolated("uncross needs an arc-disjoint family");
  if (coll.cycles.empty()) return {{}, true, true};
  if (collection_non_crossing(g, coll)) {
    CycleCollection out = coll;
    out.arc_disjoint = true;
    out.non_crossing = true;
    return out;
  }

  const int target = coll.size();
  std::vector<char> in_union(g.m(), 0);
  std::vector<ArcId> union_arcs;
  for (const DiCycle& c : coll.cycles)
    for (ArcId a : c.arcs) {
      in_union[a] = 1;
      union_arcs.push_back(a);
    }
  std::sort(union_arcs.begin(), union_arcs.end());

  std::vector<long> depth = detail_uncross::face_depths(g, in_union);
  // A union arc separates depths t-1 and t; call t its level.
  std::vector<long> level(g.m(), 0);
  for (ArcId a : union_arcs) level[a] = depth[g.left_face(a)];

  // succ[a] = the union arc that follows a at its head.
  std::vector<ArcId> succ(g.m(), -1);
  std::vector<char> out_used(g.m(), 0);
  for (ArcId a : union_arcs) {
    Vertex v = g.arc(a).head;
    long t = level[a];
    // Walk counterclockwise from the incoming end; the first same-level
    // outgoing end closes the depth >= t wedge run that starts here.
    Dart cur = g.sigma(bwd_dart(a));
    int steps = 0;
    for (;;) {
      internal_check(++steps <= 2 * g.m(), "wedge run scan wrapped around");
      ArcId b = arc_of(cur);
      if (in_union[b] && level[b] == t) {
        internal_check(dart_forward(cur),
                       "two incoming ends flank one wedge run");
        internal_check(!out_used[b], "outgoing end matched twice");
        succ[a] = b;
        out_used[b] = 1;
        break;
      }
      internal_check(depth[g.face_of(rev_dart(cur))] >= t,
                     "wedge run interrupted below its level");
      cur = g.sigma(cur);
    }
  }

  // Orbits of succ are closed walks covering the union.  Any walk that
  // passes a vertex twice is split there: swapping the two passes replaces
  // interleaved pairs by nested ones and cuts the orbit in two.
  auto trace = [&]() {
    std::vector<std::vector<ArcId>> orbits;
    std::vector<char> visited(g.m(), 0);
    for (ArcId a0 : union_arcs) {
      if (visited[a0]) continue;
      std::vector<ArcId> orbit;
      ArcId a = a0;
      do {
        visited[a] = 1;
        orbit.push_back(a);
        a = succ[a];
        internal_check(a != -1, "union arc without a successor");
      } while (a != a0);
      orbits.push_back(std::move(orbit));
    }
    return orbits;
  };

  std::vector<std::vector<ArcId>> orbits = trace();
  for (;;) {
    Vertex split_vertex = -1;
    std::pair<ArcId, ArcId> pass{-1, -1};
    for (const auto& orbit : orbits) {
      std::vector<std::pair<Vertex, ArcId>> heads;
      for (ArcId a : orbit) heads.emplace_back(g.arc(a).head, a);
      std::sort(heads.begin(), heads.end());
      for (std::size_t i = 0; i + 1 < heads.size(); ++i) {
        if (heads[i].first != heads[i + 1].first) continue;
        if (split_vertex == -1 || heads[i].first < split_vertex) {
          split_vertex = heads[i].first;
          pass = {heads[i].second, heads[i + 1].second};
        }
        break;
      }
    }
    if (split_vertex == -1) break;
    std::swap(succ[pass.first], succ[pass.second]);
    orbits = trace();
  }

  // Turn walks into cycles and insist on cardinality, simplicity, and a
  // clean interior structure; anything less sends us to the fallback.
  auto finalize =
      [&](const std::vector<std::vector<ArcId>>& orbs)
      -> std::optional<CycleCollection> {
    if (static_cast<int>(orbs.size()) != target) return std::nullopt;
    CycleCollection res;
    for (const auto& orbit : orbs)
      res.cycles.push_back(cycle_from_arcs(g, orbit));
    std::sort(res.cycles.begin(), res.cycles.end());
    res.arc_disjoint = collection_arc_disjoint(res);
    res.non_crossing = res.arc_disjoint && collection_non_crossing(g, res);
    if (!res.arc_disjoint || !res.non_crossing) return std::nullopt;
    return res;
  };

  if (auto fast = finalize(orbits)) return *fast;
  {
    // The guided decomposition landed on the wrong cardinality.  Fall back
    // to exhaustive search over per-vertex non-interleaving pairings; for a
    // maximum packing an equal-cardinality planar family always exists.
    std::vector<std::vector<std::pair<ArcId, bool>>> vertex_ends(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
      for (Dart d : g.rotation()[v]) {
        if (!in_union[arc_of(d)]) continue;
        vertex_ends[v].emplace_back(arc_of(d), dart_forward(d));
      }
    }
    std::vector<Vertex> order;
    for (Vertex v = 0; v < g.n(); ++v)
      if (!vertex_ends[v].empty()) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return std::make_pair(-(long)vertex_ends[a].size(), a) <
             std::make_pair(-(long)vertex_ends[b].size(), b);
    });
    std::vector<std::vector<std::vector<std::pair<ArcId, ArcId>>>> choices;
    std::vector<long> pairs_after(order.size() + 1, 0);
    for (std::size_t i = order.size(); i-- > 0;) {
      std::vector<std::vector<std::pair<ArcId, ArcId>>> ms;
      std::vector<std::pair<ArcId, ArcId>> acc;
      detail_uncross::noncrossing_matchings(vertex_ends[order[i]], 0,
                                            vertex_ends[order[i]].size(), acc,
                                            ms);
      internal_check(!ms.empty(), "vertex ends admit no pairing");
      choices.insert(choices.begin(), std::move(ms));
      pairs_after[i] = pairs_after[i + 1] +
                       static_cast<long>(vertex_ends[order[i]].size()) / 2;
    }

    std::vector<int> arc_index(g.m(), -1);
    for (std::size_t i = 0; i < union_arcs.size(); ++i)
      arc_index[union_arcs[i]] = static_cast<int>(i);
    detail_uncross::RollbackDsu dsu(static_cast<int>(union_arcs.size()));
    std::fill(succ.begin(), succ.end(), -1);
    long budget = 50'000'000;
    int closed = 0;
    std::vector<std::vector<ArcId>> found;

    auto orbit_simple = [&](ArcId start) {
      std::vector<Vertex> heads;
      ArcId a = start;
      do {
        heads.push_back(g.arc(a).head);
        a = succ[a];
      } while (a != start);
      std::sort(heads.begin(), heads.end());
      return std::adjacent_find(heads.begin(), heads.end()) == heads.end();
    };

    auto dfs = [&](auto&& self, std::size_t i) -> bool {
      if (i == order.size()) {
        if (closed != target) return false;
        found = [&] {
          std::vector<std::vector<ArcId>> orbs;
          std::vector<char> vis(g.m(), 0);
          for (ArcId a0 : union_arcs) {
            if (vis[a0]) continue;
            std::vector<ArcId> orbit;
            ArcId a = a0;
            do {
              vis[a] = 1;
              orbit.push_back(a);
              a = succ[a];
            } while (a != a0);
            orbs.push_back(std::move(orbit));
          }
          return orbs;
        }();
        return true;
      }
      if (closed + pairs_after[i] < target) return false;
      for (const auto& m : choices[i]) {
        if (--budget < 0)
          throw InternalError("planar re-decomposition search exhausted "
                              "its budget");
        std::size_t dsu_mark = dsu.mark();
        int closed_before = closed;
        bool ok = true;
        std::size_t applied = 0;
        for (const auto& [a, b] : m) {
          succ[a] = b;
          ++applied;
          if (!dsu.unite(arc_index[a], arc_index[b])) {
            ++closed;
            if (closed > target || !orbit_simple(a)) {
              ok = false;
              break;
            }
          }
        }
        if (ok && self(self, i + 1)) return true;
        for (std::size_t j = 0; j < applied; ++j) succ[m[j].first] = -1;
        dsu.rollback(dsu_mark);
        closed = closed_before;
      }
      return false;
    };
    if (!dfs(dfs, 0))
      throw InternalError("no equal-cardinality non-crossing decomposition "
                          "found; input family was not a maximum packing");
    orbits = std::move(found);
  }

  auto slow = finalize(orbits);
  internal_check(slow.has_value(),
                 "re-decomposition failed its own validation");
  return *slow;
}

}  // namespace pfvs
