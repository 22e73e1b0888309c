#include <algorithm>
#include <set>
#include <sstream>

#include "catch2/catch_amalgamated.hpp"
#include "fixtures.hpp"

using namespace pfvs;

static std::multiset<int> face_degrees(const PlanarDigraph& g) {
  std::multiset<int> out;
  for (const Face& f : g.faces()) out.insert(f.degree);
  return out;
}

TEST_CASE("dart arithmetic") {
  REQUIRE(fwd_dart(3) == 6);
  REQUIRE(bwd_dart(3) == 7);
  REQUIRE(arc_of(6) == 3);
  REQUIRE(arc_of(7) == 3);
  REQUIRE(rev_dart(6) == 7);
  REQUIRE(rev_dart(7) == 6);
  REQUIRE(dart_forward(6));
  REQUIRE(!dart_forward(7));
}

TEST_CASE("triangle embedding") {
  auto g = fixtures::triangle();
  REQUIRE(g.n() == 3);
  REQUIRE(g.m() == 3);
  REQUIRE(g.num_components() == 1);
  REQUIRE(g.faces().size() == 2);
  REQUIRE(face_degrees(g) == std::multiset<int>{3, 3});
  REQUIRE(euler_phi_total(g) == 6);
  for (ArcId a = 0; a < 3; ++a) REQUIRE(g.left_face(a) != g.right_face(a));
  REQUIRE(g.arc(0).tail == 0);
  REQUIRE(g.arc(0).head == 1);
  REQUIRE(g.origin(fwd_dart(1)) == 1);
  REQUIRE(g.target(fwd_dart(1)) == 2);
  REQUIRE(g.origin(bwd_dart(1)) == 2);
}

TEST_CASE("face orbits close") {
  auto g = fixtures::lens7();
  for (const Face& f : g.faces()) {
    int total = 0;
    for (const auto& walk : f.walks) {
      total += static_cast<int>(walk.size());
      for (std::size_t i = 0; i < walk.size(); ++i) {
        Dart d = walk[i];
        REQUIRE(g.face_of(d) == g.face_of(walk[0]));
        REQUIRE(g.next_in_face(d) == walk[(i + 1) % walk.size()]);
        REQUIRE(g.prev_in_face(walk[(i + 1) % walk.size()]) == d);
      }
    }
    REQUIRE(total == f.degree);
  }
}

TEST_CASE("sigma is the rotation successor") {
  auto g = fixtures::triforce9();
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto& rot = g.rotation()[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      REQUIRE(g.origin(rot[i]) == v);
      REQUIRE(g.rotation_pos(rot[i]) == i);
      REQUIRE(g.sigma(rot[i]) == rot[(i + 1) % rot.size()]);
      REQUIRE(g.sigma_inv(rot[(i + 1) % rot.size()]) == rot[i]);
    }
  }
}

TEST_CASE("degenerate graphs") {
  auto v1 = fixtures::isolated_vertex();
  REQUIRE(v1.faces().size() == 1);
  REQUIRE(v1.faces()[0].degree == 0);
  REQUIRE(v1.outer_face() == 0);
  REQUIRE(euler_phi_total(v1) == -6);

  auto a1 = fixtures::single_arc();
  REQUIRE(a1.faces().size() == 1);
  REQUIRE(a1.faces()[0].degree == 2);
  REQUIRE(euler_phi_total(a1) == 0);

  auto p = fixtures::path3();
  REQUIRE(p.faces().size() == 1);
  REQUIRE(p.faces()[0].degree == 4);
  REQUIRE(euler_phi_total(p) == 6);
}

TEST_CASE("fixture face structure") {
  auto lens = fixtures::lens7();
  REQUIRE(face_degrees(lens) == std::multiset<int>{3, 4, 5, 6});
  REQUIRE(lens.faces()[lens.outer_face()].degree == 5);
  REQUIRE(euler_phi_total(lens) == 30);

  auto tri = fixtures::triforce9();
  REQUIRE(face_degrees(tri) == std::multiset<int>{3, 4, 4, 4, 9});
  REQUIRE(tri.faces()[tri.outer_face()].degree == 9);
  REQUIRE(euler_phi_total(tri) == 42);

  auto k4 = fixtures::make_k4(true);
  REQUIRE(face_degrees(k4) == std::multiset<int>{3, 3, 3, 3});
  REQUIRE(euler_phi_total(k4) == 12);
}

TEST_CASE("disconnected graphs trace per component") {
  auto g = fixtures::two_triangles();
  REQUIRE(g.num_components() == 2);
  REQUIRE(g.component_of(0) == g.component_of(2));
  REQUIRE(g.component_of(0) != g.component_of(3));
  REQUIRE(g.faces().size() == 3);
  const Face& outer = g.faces()[g.outer_face()];
  REQUIRE(outer.walks.size() == 2);
  REQUIRE(outer.degree == 6);
  REQUIRE_THROWS_AS(euler_phi_total(g), NotConnected);
}

TEST_CASE("adjacency lists are sorted") {
  auto g = fixtures::lens7();
  REQUIRE(g.out_arcs(0) == std::vector<ArcId>{0, 5});
  REQUIRE(g.in_arcs(0) == std::vector<ArcId>{4, 8});
  REQUIRE(g.out_arcs(2) == std::vector<ArcId>{2, 6});
  REQUIRE(g.in_arcs(2) == std::vector<ArcId>{1, 5});
}

TEST_CASE("build rejects bad data") {
  REQUIRE_THROWS_AS(fixtures::make_k4(false), EulerViolation);
  REQUIRE_THROWS_AS(PlanarDigraph::build(0, {}, {}, 1), PreconditionViolated);
  REQUIRE_THROWS_AS(PlanarDigraph::build(1, {}, {{}}, 0),
                    PreconditionViolated);
  // Arc endpoint outside the vertex range.
  REQUIRE_THROWS_AS(
      PlanarDigraph::build(2, {{0, 2}}, {{fwd_dart(0)}, {bwd_dart(0)}}, 1),
      PreconditionViolated);
  // A loop contradicts digirth >= 2.
  REQUIRE_THROWS_AS(PlanarDigraph::build(
                        1, {{0, 0}}, {{fwd_dart(0), bwd_dart(0)}}, 2),
                    DigirthViolation);
  // An antiparallel pair is a digon, impossible at digirth >= 3.
  REQUIRE_THROWS_AS(
      PlanarDigraph::build(2, {{0, 1}, {1, 0}},
                           {{fwd_dart(0), bwd_dart(1)},
                            {bwd_dart(0), fwd_dart(1)}},
                           3),
      DigirthViolation);
  // Same-direction parallels carry no dicycle, but digirth >= 4 instances
  // must be simple.
  REQUIRE_NOTHROW(
      PlanarDigraph::build(2, {{0, 1}, {0, 1}},
                           {{fwd_dart(0), fwd_dart(1)},
                            {bwd_dart(1), bwd_dart(0)}},
                           3));
  REQUIRE_THROWS_AS(
      PlanarDigraph::build(2, {{0, 1}, {0, 1}},
                           {{fwd_dart(0), fwd_dart(1)},
                            {bwd_dart(1), bwd_dart(0)}},
                           4),
      DigirthViolation);
  // Missing dart in a rotation.
  REQUIRE_THROWS_AS(
      PlanarDigraph::build(2, {{0, 1}}, {{fwd_dart(0)}, {}}, 1), DanglingEnd);
  // Dart listed at the wrong vertex.
  REQUIRE_THROWS_AS(
      PlanarDigraph::build(2, {{0, 1}}, {{bwd_dart(0)}, {fwd_dart(0)}}, 1),
      DanglingEnd);
  // Dart listed twice.
  REQUIRE_THROWS_AS(
      PlanarDigraph::build(
          2, {{0, 1}}, {{fwd_dart(0), fwd_dart(0)}, {bwd_dart(0)}}, 1),
      DanglingEnd);
}

TEST_CASE("pdg round trip") {
  for (const PlanarDigraph& g :
       {fixtures::lens7(), fixtures::triforce9(), fixtures::bidi_triangle(),
        fixtures::two_triangles(), fixtures::isolated_vertex()}) {
    std::string text = pdg_string(g);
    PlanarDigraph back = read_pdg_string(text);
    REQUIRE(back.n() == g.n());
    REQUIRE(back.m() == g.m());
    REQUIRE(back.declared_digirth() == g.declared_digirth());
    for (ArcId a = 0; a < g.m(); ++a) {
      REQUIRE(back.arc(a).tail == g.arc(a).tail);
      REQUIRE(back.arc(a).head == g.arc(a).head);
    }
    REQUIRE(back.rotation() == g.rotation());
    // Writing the parse result reproduces the bytes.
    REQUIRE(pdg_string(back) == text);
  }
}

TEST_CASE("pdg text shape") {
  auto g = fixtures::triangle();
  REQUIRE(pdg_string(g) ==
          "3 3 3\n0 1\n1 2\n2 0\n0 1 -3\n1 2 -1\n2 3 -2\n");
}

TEST_CASE("pdg parse errors carry line numbers") {
  auto fails = [](const std::string& text, const std::string& needle) {
    try {
      read_pdg_string(text);
      FAIL("expected a parse error for: " << text);
    } catch (const ParseError& e) {
      REQUIRE(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  fails("", "empty input");
  fails("1 2\n", "three fields");
  fails("1 0 1 9\n", "unexpected field");
  fails("x 0 1\n", "line 1");
  fails("-1 0 1\n", "out of range");
  fails("2 1 1\n0 1\n", "rotation of vertex 0");
  fails("2 1 1\n0 9\n0 1\n1 -1\n", "out of range");
  fails("2 1 1\n0 1\n1 1\n1 -1\n", "vertex order");
  fails("2 1 1\n0 1\n0 2\n1 -1\n", "names no arc");
  fails("2 1 1\n0 1\n0 1\n1 -1\nextra\n", "extra content");
  fails("2 1 1\n0 1\n0 1.5\n1 -1\n", "line 3");
}
