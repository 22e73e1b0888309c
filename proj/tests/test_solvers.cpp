#include <algorithm>
#include <set>

#include "catch2/catch_amalgamated.hpp"
#include "fixtures.hpp"

using namespace pfvs;

namespace {

bool acyclic_after_removing(const PlanarDigraph& g,
                            const std::vector<Vertex>& removed) {
  std::vector<char> va(g.n(), 1), aa(g.m(), 1);
  for (Vertex v : removed) va[v] = 0;
  return is_acyclic(g, va, aa);
}

bool hits_every_cycle(const PlanarDigraph& g, const std::vector<ArcId>& fas) {
  std::vector<char> va(g.n(), 1), aa(g.m(), 1);
  for (ArcId a : fas) aa[a] = 0;
  return is_acyclic(g, va, aa);
}

}  // namespace

TEST_CASE("feedback vertex sets on fixtures") {
  auto lens = fixtures::lens7();
  FvsResult r = min_feedback_vertex_set(lens);
  REQUIRE(r.optimal);
  REQUIRE(r.size == 1);
  REQUIRE(r.X == std::vector<Vertex>{0});
  REQUIRE(acyclic_after_removing(lens, r.X));

  auto tri = fixtures::triforce9();
  FvsResult t = min_feedback_vertex_set(tri);
  REQUIRE(t.size == 2);
  REQUIRE(t.X == std::vector<Vertex>{0, 1});
  REQUIRE(acyclic_after_removing(tri, t.X));

  auto bidi = fixtures::bidi_triangle();
  FvsResult b = min_feedback_vertex_set(bidi);
  REQUIRE(b.size == 2);
  REQUIRE(acyclic_after_removing(bidi, b.X));

  auto bow = fixtures::bowtie();
  FvsResult w = min_feedback_vertex_set(bow);
  REQUIRE(w.size == 1);
  REQUIRE(w.X == std::vector<Vertex>{0});

  REQUIRE(min_feedback_vertex_set(fixtures::path3()).size == 0);
  REQUIRE(min_feedback_vertex_set(fixtures::two_triangles()).size == 2);
}

TEST_CASE("fvs certificates order the remainder") {
  auto g = fixtures::lens7();
  FvsResult r = min_feedback_vertex_set(g);
  REQUIRE(r.certificate.size() == g.n() - r.X.size());
  std::vector<int> position(g.n(), -1);
  for (std::size_t i = 0; i < r.certificate.size(); ++i)
    position[r.certificate[i]] = static_cast<int>(i);
  for (Vertex v : r.X) REQUIRE(position[v] == -1);
  std::set<Vertex> cut(r.X.begin(), r.X.end());
  for (ArcId a = 0; a < g.m(); ++a) {
    const Arc& e = g.arc(a);
    if (cut.count(e.tail) || cut.count(e.head)) continue;
    REQUIRE(position[e.tail] < position[e.head]);
  }
}

TEST_CASE("feedback arc sets on fixtures") {
  auto lens = fixtures::lens7();
  FasResult r = min_feedback_arc_set(lens);
  REQUIRE(r.optimal);
  REQUIRE(r.size == 2);
  REQUIRE(r.A == std::vector<ArcId>{0, 5});
  REQUIRE(hits_every_cycle(lens, r.A));

  auto tri = fixtures::triforce9();
  FasResult t = min_feedback_arc_set(tri);
  REQUIRE(t.size == 3);
  REQUIRE(t.A == std::vector<ArcId>{0, 4, 8});
  REQUIRE(hits_every_cycle(tri, t.A));

  auto bidi = fixtures::bidi_triangle();
  FasResult b = min_feedback_arc_set(bidi);
  REQUIRE(b.size == 3);
  REQUIRE(b.A == std::vector<ArcId>{0, 2, 5});
  REQUIRE(hits_every_cycle(bidi, b.A));

  auto f8 = fixtures::figure_eight();
  FasResult e = min_feedback_arc_set(f8);
  REQUIRE(e.size == 2);
  REQUIRE(e.A == std::vector<ArcId>{0, 5});
  REQUIRE(hits_every_cycle(f8, e.A));
}

TEST_CASE("feedback arc set equals the packing number on fixtures") {
  for (const PlanarDigraph& g :
       {fixtures::lens7(), fixtures::triforce9(), fixtures::bidi_triangle(),
        fixtures::figure_eight(), fixtures::bowtie(), fixtures::c5_chord(),
        fixtures::two_triangles()}) {
    FasResult fas = min_feedback_arc_set(g);
    CycleCollection packing = max_dicycle_packing(g);
    REQUIRE(fas.size == packing.size());
  }
}

TEST_CASE("maximum packings on fixtures") {
  auto lens = fixtures::lens7();
  CycleCollection p = max_dicycle_packing(lens);
  REQUIRE(p.size() == 2);
  REQUIRE(collection_arc_disjoint(p));

  auto tri = fixtures::triforce9();
  CycleCollection q = max_dicycle_packing(tri);
  REQUIRE(q.size() == 3);
  std::set<std::set<ArcId>> sets;
  for (const DiCycle& c : q.cycles)
    sets.insert(std::set<ArcId>(c.arcs.begin(), c.arcs.end()));
  // The three rings are the only three pairwise arc-disjoint dicycles.
  REQUIRE(sets == std::set<std::set<ArcId>>{
                      {0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}});

  REQUIRE(max_dicycle_packing(fixtures::bidi_triangle()).size() == 3);
  REQUIRE(max_dicycle_packing(fixtures::bowtie()).size() == 2);
  REQUIRE(max_dicycle_packing(fixtures::path3()).size() == 0);
}

TEST_CASE("solvers agree with the oracles") {
  for (const PlanarDigraph& g :
       {fixtures::triangle(), fixtures::dicycle(4), fixtures::lens7(),
        fixtures::triforce9(), fixtures::bidi_triangle(),
        fixtures::figure_eight(), fixtures::bowtie(), fixtures::c5_chord(),
        fixtures::two_triangles(), fixtures::make_k4(true)}) {
    REQUIRE(min_feedback_vertex_set(g).size == brute_force_tau(g));
    REQUIRE(max_dicycle_packing(g).size() == brute_force_packing(g));
  }
}

TEST_CASE("solvers agree with the oracles on generated instances") {
  for (std::uint64_t seed = 21; seed <= 32; ++seed) {
    GeneratorSpec spec;
    spec.family = "random-planar-filtered";
    spec.n_target = 8 + static_cast<int>(seed % 5);
    spec.g_target = 4;
    spec.seed = seed;
    PlanarDigraph g = generate(spec);
    REQUIRE(min_feedback_vertex_set(g).size == brute_force_tau(g));
    REQUIRE(max_dicycle_packing(g).size() == brute_force_packing(g));
  }
}

TEST_CASE("solver results are deterministic") {
  auto g = fixtures::triforce9();
  FvsResult a = min_feedback_vertex_set(g);
  FvsResult b = min_feedback_vertex_set(g);
  REQUIRE(a.X == b.X);
  REQUIRE(a.certificate == b.certificate);
  FasResult fa = min_feedback_arc_set(g);
  FasResult fb = min_feedback_arc_set(g);
  REQUIRE(fa.A == fb.A);
  CycleCollection pa = max_dicycle_packing(g);
  CycleCollection pb = max_dicycle_packing(g);
  for (int i = 0; i < pa.size(); ++i)
    REQUIRE(pa.cycles[i].arcs == pb.cycles[i].arcs);
}

TEST_CASE("guards stop oversized searches") {
  SolveGuards tight;
  tight.max_n = 5;
  REQUIRE_THROWS_AS(min_feedback_vertex_set(fixtures::lens7(), tight),
                    GuardExceeded);
  REQUIRE_THROWS_AS(min_feedback_arc_set(fixtures::lens7(), tight),
                    GuardExceeded);
  REQUIRE_THROWS_AS(max_dicycle_packing(fixtures::lens7(), tight),
                    GuardExceeded);

  SolveGuards few_nodes;
  few_nodes.max_nodes = 1;
  REQUIRE_THROWS_AS(min_feedback_vertex_set(fixtures::triforce9(), few_nodes),
                    GuardExceeded);

  SolveGuards few_cycles;
  few_cycles.max_cycles = 2;
  REQUIRE_THROWS_AS(max_dicycle_packing(fixtures::bidi_triangle(), few_cycles),
                    GuardExceeded);
}

TEST_CASE("greedy cover stays within a third of n plus the arcs") {
  auto check = [](const PlanarDigraph& g) {
    FasResult fas = min_feedback_arc_set(g);
    std::vector<Vertex> cover = cover_arcs_greedy(g, fas.A);
    std::set<Vertex> in_cover(cover.begin(), cover.end());
    for (ArcId a : fas.A) {
      bool covered = in_cover.count(g.arc(a).tail) ||
                     in_cover.count(g.arc(a).head);
      REQUIRE(covered);
    }
    REQUIRE(3 * static_cast<int>(cover.size()) <=
            g.n() + static_cast<int>(fas.A.size()));
  };
  check(fixtures::lens7());
  check(fixtures::triforce9());
  check(fixtures::bidi_triangle());
  check(fixtures::figure_eight());
  check(fixtures::c5_chord());
  for (std::uint64_t seed = 41; seed <= 52; ++seed) {
    GeneratorSpec spec;
    spec.family = "random-planar-filtered";
    spec.n_target = 9 + static_cast<int>(seed % 6);
    spec.g_target = 4;
    spec.seed = seed;
    check(generate(spec));
  }
}

TEST_CASE("single arc covered by one endpoint") {
  auto g = fixtures::single_arc();
  std::vector<Vertex> cover = cover_arcs_greedy(g, {0});
  REQUIRE(cover.size() == 1);
  REQUIRE(3 * 1 <= g.n() + 1);  // the bound is tight here
}

TEST_CASE("minimum cover never beats the greedy cover") {
  for (const PlanarDigraph& g :
       {fixtures::lens7(), fixtures::triforce9(), fixtures::bowtie()}) {
    FasResult fas = min_feedback_arc_set(g);
    auto greedy = cover_arcs_greedy(g, fas.A);
    auto best = min_vertex_cover_of_arcs(g, fas.A);
    REQUIRE(best.size() <= greedy.size());
    std::set<Vertex> in_cover(best.begin(), best.end());
    for (ArcId a : fas.A)
      REQUIRE((in_cover.count(g.arc(a).tail) ||
               in_cover.count(g.arc(a).head)));
    // A feedback vertex set is never smaller than a minimum cover of a
    // minimum feedback arc set's endpoints... the other way around: the
    // cover is itself a feedback vertex set, so tau bounds it from below.
    REQUIRE(min_feedback_vertex_set(g).size <=
            static_cast<int>(best.size()));
    REQUIRE(acyclic_after_removing(g, best));
  }
}

TEST_CASE("empty feedback problems") {
  auto p = fixtures::path3();
  FvsResult r = min_feedback_vertex_set(p);
  REQUIRE(r.size == 0);
  REQUIRE(r.X.empty());
  REQUIRE(r.certificate.size() == 3);
  FasResult f = min_feedback_arc_set(p);
  REQUIRE(f.size == 0);
  REQUIRE(cover_arcs_greedy(p, {}).empty());
  REQUIRE(min_vertex_cover_of_arcs(p, {}).empty());
}
