#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pfvs/cycles.hpp"
#include "pfvs/graph_algos.hpp"
#include "pfvs/incidence.hpp"
#include "pfvs/planar_digraph.hpp"

namespace pfvs {

struct GeneratorSpec {
  std::string family;  // grid | cylinder-grid | stacked-cycles |
                       // random-planar-filtered
  int n_target = 0;
  int g_target = 4;
  std::uint64_t seed = 0;
};

// Deterministic source of uniform draws.  below() uses rejection instead of
// a distribution object so that streams are identical across platforms.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t below(std::uint64_t k) {
    internal_check(k > 0, "empty draw range");
    std::uint64_t limit = ~0ULL - ~0ULL % k;
    for (;;) {
      std::uint64_t x = eng();
      if (x < limit) return x % k;
    }
  }
};

namespace detail_gen {

// Mutable embedded digraph under construction.  Rotations hold darts; all
// mutations keep them consistent so that a build() validates at any time.
struct GrowthGraph {
  int n = 0;
  std::vector<Arc> arcs;
  std::vector<std::vector<Dart>> rot;

  Vertex add_vertex() {
    rot.emplace_back();
    return n++;
  }
  ArcId new_arc(Vertex t, Vertex h) {
    arcs.push_back({t, h});
    return static_cast<ArcId>(arcs.size()) - 1;
  }
  // Places dart d directly after the existing dart at its origin's
  // rotation; inserting after rev(e), where e enters a face corner, lands
  // the new dart inside that face.
  void insert_after(Vertex v, Dart existing, Dart d) {
    auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), existing);
    internal_check(it != r.end(), "anchor dart missing from rotation");
    r.insert(it + 1, d);
  }
  void reverse_arc(ArcId a) {
    Arc& arc = arcs[a];
    auto& rt = rot[arc.tail];
    auto& rh = rot[arc.head];
    *std::find(rt.begin(), rt.end(), fwd_dart(a)) = bwd_dart(a);
    *std::find(rh.begin(), rh.end(), bwd_dart(a)) = fwd_dart(a);
    std::swap(arc.tail, arc.head);
  }
  void delete_arc(ArcId a) {
    auto drop = [&](Vertex v, Dart d) {
      auto& r = rot[v];
      r.erase(std::find(r.begin(), r.end(), d));
    };
    drop(arcs[a].tail, fwd_dart(a));
    drop(arcs[a].head, bwd_dart(a));
    ArcId last = static_cast<ArcId>(arcs.size()) - 1;
    if (a != last) {
      // Move the last arc into the freed slot and relabel its darts.
      for (auto& r : rot)
        for (Dart& d : r) {
          if (d == fwd_dart(last)) d = fwd_dart(a);
          else if (d == bwd_dart(last)) d = bwd_dart(a);
        }
      arcs[a] = arcs[last];
    }
    arcs.pop_back();
  }
  bool has_arc_between(Vertex u, Vertex w) const {
    for (const Arc& a : arcs)
      if ((a.tail == u && a.head == w) || (a.tail == w && a.head == u))
        return true;
    return false;
  }
  PlanarDigraph build(int declared) const {
    return PlanarDigraph::build(n, arcs, rot, declared);
  }
};

inline PlanarDigraph make_grid(int n) {
  if (n < 1) throw InfeasibleSpec("grid needs at least one vertex");
  int cols = 1;
  while ((cols + 1) * (cols + 1) <= n) ++cols;
  auto exists = [&](int r, int c) {
    return c >= 0 && c < cols && r >= 0 && r * cols + c < n;
  };
  auto id = [&](int r, int c) { return r * cols + c; };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> right(n, std::vector<int>()), down = right;
  std::vector<int> right_arc(n, -1), down_arc(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = v / cols, c = v % cols;
    if (exists(r, c + 1)) {
      right_arc[v] = static_cast<int>(arcs.size());
      arcs.push_back({v, id(r, c + 1)});
    }
    if (exists(r + 1, c)) {
      down_arc[v] = static_cast<int>(arcs.size());
      arcs.push_back({v, id(r + 1, c)});
    }
  }
  std::vector<std::vector<Dart>> rot(n);
  for (int v = 0; v < n; ++v) {
    int r = v / cols, c = v % cols;
    // Counterclockwise: east, north, west, south.
    if (right_arc[v] != -1) rot[v].push_back(fwd_dart(right_arc[v]));
    if (r > 0 && down_arc[id(r - 1, c)] != -1)
      rot[v].push_back(bwd_dart(down_arc[id(r - 1, c)]));
    if (c > 0 && right_arc[id(r, c - 1)] != -1)
      rot[v].push_back(bwd_dart(right_arc[id(r, c - 1)]));
    if (down_arc[v] != -1) rot[v].push_back(fwd_dart(down_arc[v]));
  }
  return PlanarDigraph::build(n, arcs, rot, 4);
}

inline PlanarDigraph make_cylinder(int n, int g) {
  if (g < 3) throw InfeasibleSpec("rings need girth at least 3");
  if (n < g) throw InfeasibleSpec("cylinder needs at least one full ring");
  int rings = n / g, leftover = n - rings * g;
  auto rv = [&](int i, int j) { return i * g + ((j % g + g) % g); };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> ring_arc(rings, std::vector<int>(g, -1));
  std::vector<std::vector<int>> spoke(rings, std::vector<int>(g, -1));
  for (int i = 0; i < rings; ++i)
    for (int j = 0; j < g; ++j) {
      ring_arc[i][j] = static_cast<int>(arcs.size());
      arcs.push_back({rv(i, j), rv(i, j + 1)});
    }
  for (int i = 0; i + 1 < rings; ++i)
    for (int j = 0; j < g; ++j) {
      spoke[i][j] = static_cast<int>(arcs.size());
      arcs.push_back({rv(i, j), rv(i + 1, j)});
    }
  std::vector<int> chain;
  for (int k = 0; k < leftover; ++k) {
    chain.push_back(static_cast<int>(arcs.size()));
    arcs.push_back({k == 0 ? rv(rings - 1, 0) : rings * g + k - 1,
                    rings * g + k});
  }
  std::vector<std::vector<Dart>> rot(n);
  for (int i = 0; i < rings; ++i)
    for (int j = 0; j < g; ++j) {
      auto& r = rot[rv(i, j)];
      // Counterclockwise: along the ring, inward, backward, outward.
      r.push_back(fwd_dart(ring_arc[i][j]));
      if (i > 0) r.push_back(bwd_dart(spoke[i - 1][j]));
      r.push_back(bwd_dart(ring_arc[i][(j + g - 1) % g]));
      if (i + 1 < rings) r.push_back(fwd_dart(spoke[i][j]));
      if (i == rings - 1 && j == 0 && leftover > 0)
        r.push_back(fwd_dart(chain[0]));
    }
  for (int k = 0; k < leftover; ++k) {
    auto& r = rot[rings * g + k];
    r.push_back(bwd_dart(chain[k]));
    if (k + 1 < leftover) r.push_back(fwd_dart(chain[k + 1]));
  }
  return PlanarDigraph::build(n, arcs, rot, g);
}

inline PlanarDigraph make_stacked(int n, int g) {
  if (g < 3) throw InfeasibleSpec("cycles need girth at least 3");
  if (n < g) throw InfeasibleSpec("stack needs at least one full cycle");
  int layers = n / g, leftover = n - layers * g;
  auto cv = [&](int i, int j) { return i * g + ((j % g + g) % g); };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> cyc(layers, std::vector<int>(g, -1));
  for (int i = 0; i < layers; ++i)
    for (int j = 0; j < g; ++j) {
      cyc[i][j] = static_cast<int>(arcs.size());
      if (i % 2 == 0)
        arcs.push_back({cv(i, j), cv(i, j + 1)});
      else
        arcs.push_back({cv(i, j + 1), cv(i, j)});
    }
  std::vector<int> spoke(layers, -1);
  for (int i = 0; i + 1 < layers; ++i) {
    spoke[i] = static_cast<int>(arcs.size());
    arcs.push_back({cv(i, 0), cv(i + 1, 0)});
  }
  std::vector<int> chain;
  for (int k = 0; k < leftover; ++k) {
    chain.push_back(static_cast<int>(arcs.size()));
    arcs.push_back({k == 0 ? cv(layers - 1, 0) : layers * g + k - 1,
                    layers * g + k});
  }
  auto toward_next = [&](int i, int j) {  // dart from (i,j) toward (i,j+1)
    return i % 2 == 0 ? fwd_dart(cyc[i][j]) : bwd_dart(cyc[i][j]);
  };
  auto toward_prev = [&](int i, int j) {  // dart from (i,j) toward (i,j-1)
    int a = cyc[i][(j + g - 1) % g];
    return i % 2 == 0 ? bwd_dart(a) : fwd_dart(a);
  };
  std::vector<std::vector<Dart>> rot(n);
  for (int i = 0; i < layers; ++i)
    for (int j = 0; j < g; ++j) {
      auto& r = rot[cv(i, j)];
      r.push_back(toward_next(i, j));
      if (j == 0 && i > 0) r.push_back(bwd_dart(spoke[i - 1]));
      r.push_back(toward_prev(i, j));
      if (j == 0 && i + 1 < layers) r.push_back(fwd_dart(spoke[i]));
      if (j == 0 && i == layers - 1 && leftover > 0)
        r.push_back(fwd_dart(chain[0]));
    }
  for (int k = 0; k < leftover; ++k) {
    auto& r = rot[layers * g + k];
    r.push_back(bwd_dart(chain[k]));
    if (k + 1 < leftover) r.push_back(fwd_dart(chain[k + 1]));
  }
  // Lead vertex 0 with its dart on the pure layer-0 face, so that face is
  // designated outer and the layers nest in a chain below layer 0.
  auto& r0 = rot[0];
  std::rotate(r0.begin(), std::find(r0.begin(), r0.end(), toward_prev(0, 0)),
              r0.end());
  return PlanarDigraph::build(n, arcs, rot, g);
}

// Random growth: start from an embedded g-cycle, add vertices inside random
// faces and chords across random faces, then repair the digirth by
// reversing arcs of short dicycles (a pure relabeling of the two darts, so
// the embedding is untouched) and, failing that, deleting them.
inline PlanarDigraph make_random_planar(int n, int g, std::uint64_t seed) {
  if (g < 3) throw InfeasibleSpec("seed cycle needs girth at least 3");
  if (n < g) throw InfeasibleSpec("need room for the seed cycle");
  Rng rng(seed);
  GrowthGraph gg;
  for (int j = 0; j < g; ++j) gg.add_vertex();
  for (int j = 0; j < g; ++j) {
    ArcId a = gg.new_arc(j, (j + 1) % g);
    (void)a;
  }
  for (int j = 0; j < g; ++j) {
    gg.rot[j].push_back(fwd_dart(j));
    gg.rot[j].push_back(bwd_dart((j + g - 1) % g));
  }

  // A face corner is (entering dart e, leaving dart next_in_face(e)); its
  // vertex is the target of e and new darts belong right after rev(e).
  auto pick_corner = [&](const PlanarDigraph& cur, const std::vector<Dart>& walk) {
    std::size_t i = rng.below(walk.size());
    Dart e = walk[(i + walk.size() - 1) % walk.size()];
    return std::make_pair(cur.target(e), rev_dart(e));
  };

  while (gg.n < n) {
    PlanarDigraph cur = gg.build(2);
    const auto& faces = cur.faces();
    const auto& walk = faces[rng.below(faces.size())].walks[0];
    auto [u, anchor_u] = pick_corner(cur, walk);
    auto [w, anchor_w] = pick_corner(cur, walk);
    if (u == w) continue;
    Vertex x = gg.add_vertex();
    bool flip = rng.below(2) == 1;
    ArcId in = gg.new_arc(flip ? w : u, x);
    ArcId out = gg.new_arc(x, flip ? u : w);
    gg.rot[x] = {bwd_dart(in), fwd_dart(out)};
    gg.insert_after(u, anchor_u, flip ? bwd_dart(out) : fwd_dart(in));
    gg.insert_after(w, anchor_w, flip ? fwd_dart(in) : bwd_dart(out));
  }

  long chord_tries = 3L * n;
  for (long t = 0; t < chord_tries; ++t) {
    PlanarDigraph cur = gg.build(2);
    const auto& faces = cur.faces();
    const auto& walk = faces[rng.below(faces.size())].walks[0];
    if (walk.size() < 4) continue;
    auto [u, anchor_u] = pick_corner(cur, walk);
    auto [w, anchor_w] = pick_corner(cur, walk);
    if (u == w || gg.has_arc_between(u, w)) continue;
    bool flip = rng.below(2) == 1;
    ArcId a = gg.new_arc(flip ? w : u, flip ? u : w);
    gg.insert_after(u, anchor_u, flip ? bwd_dart(a) : fwd_dart(a));
    gg.insert_after(w, anchor_w, flip ? fwd_dart(a) : bwd_dart(a));
  }

  long rounds = 0, reversal_budget = 20 + 2L * static_cast<long>(gg.arcs.size());
  for (;;) {
    if (++rounds > reversal_budget + static_cast<long>(gg.arcs.size()) + 8)
      throw RetriesExhausted("digirth repair did not converge");
    PlanarDigraph cur = gg.build(2);
    std::vector<char> va(cur.n(), 1), aa(cur.m(), 1);
    auto cyc = shortest_live_dicycle(cur, va, aa);
    if (!cyc || static_cast<int>(cyc->length()) >= g) break;
    bool done = false;
    if (rounds <= reversal_budget) {
      std::size_t start = rng.below(cyc->arcs.size());
      for (std::size_t k = 0; k < cyc->arcs.size() && !done; ++k) {
        ArcId a = cyc->arcs[(start + k) % cyc->arcs.size()];
        Vertex t = gg.arcs[a].tail, h = gg.arcs[a].head;
        bool dup = false;
        for (ArcId b = 0; b < static_cast<ArcId>(gg.arcs.size()); ++b)
          if (b != a && ((gg.arcs[b].tail == h && gg.arcs[b].head == t) ||
                         (gg.arcs[b].tail == t && gg.arcs[b].head == h)))
            dup = true;
        if (dup) continue;
        gg.reverse_arc(a);
        done = true;
      }
    }
    if (!done) gg.delete_arc(*std::min_element(cyc->arcs.begin(),
                                               cyc->arcs.end()));
  }

  PlanarDigraph out = gg.build(g);
  auto dg = digirth(out);
  internal_check(!dg || *dg >= g, "digirth repair left a short cycle");
  internal_check(out.num_components() == 1, "growth disconnected the graph");
  return out;
}

}  // namespace detail_gen

inline PlanarDigraph generate(const GeneratorSpec& spec) {
  if (spec.family == "grid") return detail_gen::make_grid(spec.n_target);
  if (spec.family == "cylinder-grid")
    return detail_gen::make_cylinder(spec.n_target, spec.g_target);
  if (spec.family == "stacked-cycles")
    return detail_gen::make_stacked(spec.n_target, spec.g_target);
  if (spec.family == "random-planar-filtered")
    return detail_gen::make_random_planar(spec.n_target, spec.g_target,
                                          spec.seed);
  throw InfeasibleSpec("unknown generator family: " + spec.family);
}

// Random valid incidence instance: grown from the 2x2 alternating square by
// face splits (a new degree-2 vertex-side node between two cycle-side
// corners, or the mirror move) and pendant cycle-side nodes.  Every move
// keeps faces at degree >= 4 and vertex-side degrees >= 2.
inline IncidenceBipartite generate_incidence(int moves, std::uint64_t seed) {
  Rng rng(seed);
  detail_gen::GrowthGraph gg;
  std::vector<char> is_u;
  auto add = [&](bool u) {
    gg.add_vertex();
    is_u.push_back(u ? 1 : 0);
    return gg.n - 1;
  };
  Vertex u0 = add(true), v0 = add(false), u1 = add(true), v1 = add(false);
  ArcId a0 = gg.new_arc(u0, v0), a1 = gg.new_arc(u1, v0),
        a2 = gg.new_arc(u1, v1), a3 = gg.new_arc(u0, v1);
  gg.rot[u0] = {fwd_dart(a0), fwd_dart(a3)};
  gg.rot[v0] = {bwd_dart(a1), bwd_dart(a0)};
  gg.rot[u1] = {fwd_dart(a2), fwd_dart(a1)};
  gg.rot[v1] = {bwd_dart(a3), bwd_dart(a2)};

  for (int t = 0; t < moves; ++t) {
    PlanarDigraph cur = gg.build(2);
    const auto& faces = cur.faces();
    const auto& walk = faces[rng.below(faces.size())].walks[0];
    int move = static_cast<int>(rng.below(3));
    // Corners of the chosen side, as (vertex, anchor dart) pairs.
    auto side_corners = [&](bool want_u) {
      std::vector<std::pair<Vertex, Dart>> out;
      for (std::size_t i = 0; i < walk.size(); ++i) {
        Dart e = walk[(i + walk.size() - 1) % walk.size()];
        Vertex v = cur.target(e);
        if (is_u[v] == static_cast<char>(want_u ? 1 : 0))
          out.emplace_back(v, rev_dart(e));
      }
      return out;
    };
    if (move == 2) {
      auto corners = side_corners(false);
      auto [v, anchor] = corners[rng.below(corners.size())];
      Vertex x = add(true);
      ArcId a = gg.new_arc(x, v);
      gg.rot[x] = {fwd_dart(a)};
      gg.insert_after(v, anchor, bwd_dart(a));
      continue;
    }
    bool new_v = move == 0;
    auto corners = side_corners(new_v);  // split between cycle-side corners
    std::size_t i = rng.below(corners.size());
    std::size_t j = rng.below(corners.size());
    if (i == j || corners[i].first == corners[j].first) continue;
    Vertex x = add(!new_v);
    ArcId ai = new_v ? gg.new_arc(corners[i].first, x)
                     : gg.new_arc(x, corners[i].first);
    ArcId aj = new_v ? gg.new_arc(corners[j].first, x)
                     : gg.new_arc(x, corners[j].first);
    Dart di = new_v ? bwd_dart(ai) : fwd_dart(ai);
    Dart dj = new_v ? bwd_dart(aj) : fwd_dart(aj);
    gg.rot[x] = {di, dj};
    gg.insert_after(corners[i].first, corners[i].second,
                    new_v ? fwd_dart(ai) : bwd_dart(ai));
    gg.insert_after(corners[j].first, corners[j].second,
                    new_v ? fwd_dart(aj) : bwd_dart(aj));
  }

  // Renumber cycle side first.
  std::vector<int> perm(gg.n, -1);
  int num_u = 0;
  for (Vertex v = 0; v < gg.n; ++v)
    if (is_u[v]) perm[v] = num_u++;
  int next = num_u;
  for (Vertex v = 0; v < gg.n; ++v)
    if (!is_u[v]) perm[v] = next++;
  std::vector<Arc> arcs(gg.arcs.size());
  for (std::size_t a = 0; a < gg.arcs.size(); ++a)
    arcs[a] = {perm[gg.arcs[a].tail], perm[gg.arcs[a].head]};
  std::vector<std::vector<Dart>> rot(gg.n);
  for (Vertex v = 0; v < gg.n; ++v) rot[perm[v]] = gg.rot[v];

  IncidenceBipartite h;
  h.num_u = num_u;
  h.graph = PlanarDigraph::build(gg.n, arcs, rot, 2);
  for (int u = 0; u < num_u; ++u) h.u_cycles.push_back(u);
  for (Vertex v = num_u; v < gg.n; ++v) h.v_vertices.push_back(v);
  return h;
}

}  // namespace pfvs
