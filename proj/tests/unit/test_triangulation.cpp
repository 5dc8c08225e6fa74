#include <algorithm>

#include "doctest.h"
#include "fivec/triangulation.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace fivec;
using namespace fivec::test;

TEST_CASE("W5 and icosa11 fixtures are 5c-triangulations") {
  auto w5 = load_fixture("w5.json");
  CHECK(w5->n() == 6);
  CHECK(w5->inner_faces() == 5);
  CHECK(is_5c(*w5).ok);

  auto ico = load_fixture("icosa11.json");
  CHECK(ico->n() == 11);
  CHECK(ico->inner_faces() == 15);  // 2*11 - 7
  CHECK(is_5c(*ico).ok);
  CHECK(is_5c_oracle(*ico).ok);
}

TEST_CASE("pentagon with a chord leaves a quad face") {
  // Pentagon plus the single chord {0,2}: one triangle and one quad inside.
  std::vector<std::vector<VertexId>> rot{
      {1, 2, 4}, {2, 0}, {3, 0, 1}, {4, 2}, {0, 3}};
  PlanarMap m = PlanarMap::build_from_rotation_system(rot, {0, 1, 2, 3, 4});
  CHECK_THROWS_AS(check_five_triangulation(m), Error);
}

TEST_CASE("non5c fixture is rejected with the refined-spoke witness") {
  auto t = load_fixture("non5c.json");
  FiveCVerdict v = is_5c(*t);
  CHECK_FALSE(v.ok);
  REQUIRE(v.witness_cycle.size() == 3);
  std::vector<VertexId> sorted = v.witness_cycle;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<VertexId>{0, 1, 5});
  CHECK(v.enclosed == 6);
  FiveCVerdict ov = is_5c_oracle(*t);
  CHECK_FALSE(ov.ok);
}

TEST_CASE("pentagon with two chords (n=5) is a 5-triangulation but not 5c") {
  std::vector<std::vector<VertexId>> rot{
      {1, 2, 3, 4}, {2, 0}, {3, 0, 1}, {4, 0, 2}, {0, 3}};
  PlanarMap m = PlanarMap::build_from_rotation_system(rot, {0, 1, 2, 3, 4});
  FiveTriangulation t = check_five_triangulation(m);
  CHECK(t.inner_faces() == 3);
  FiveCVerdict v = is_5c(t);
  CHECK_FALSE(v.ok);
  CHECK(v.reason == "chord between outer vertices");
}

TEST_CASE("is_5c agrees with the enumeration oracle on mutants") {
  std::mt19937_64 rng(7);
  auto base = load_fixture("icosa11.json");
  for (int i = 0; i < 20; ++i) {
    RotationSystem rs =
        i % 2 == 0 ? mutate_split_face(*base, rng)
                   : mutate_unchecked_flip(*base, rng).value_or(rotation_of(base->map));
    auto t = make_tri(rs);
    CHECK(is_5c(*t).ok == is_5c_oracle(*t).ok);
  }
}

TEST_CASE("completion of W5 has 21 vertices with the stated adjacencies") {
  auto t = load_fixture("w5.json");
  Completion c = completion(t);
  CHECK(c.map.vertex_count() == 6 + 10 + 5);
  // Dual vertices of W5 have degree 3.
  for (VertexId v = 0; v < c.map.vertex_count(); ++v)
    if (c.role[v] == Completion::Role::dual) CHECK(c.map.degree(v) == 3);
  // x_1 is adjacent to v_1, v_2 and b_1 only.
  VertexId x1 = c.outer_x[0];
  CHECK(c.map.degree(x1) == 3);
  std::vector<VertexId> nbrs;
  for (Dart d : c.map.darts_of(x1)) nbrs.push_back(c.map.head(d));
  std::sort(nbrs.begin(), nbrs.end());
  std::vector<VertexId> want{t->outer[0], t->outer[1], c.b[0]};
  std::sort(want.begin(), want.end());
  CHECK(nbrs == want);
}

TEST_CASE("completion vertex count matches V+E+F_inner in general") {
  auto ico = load_fixture("icosa11.json");
  Completion c = completion(ico);
  CHECK(c.map.vertex_count() ==
        ico->map.vertex_count() + ico->map.edge_count() + ico->inner_faces());
  CHECK(validate(c.map).ok());
}

TEST_CASE("contracting the completion's edge-vertices recovers G exactly") {
  for (const char* name : {"w5.json", "icosa11.json"}) {
    auto t = load_fixture(name);
    Completion c = completion(t);
    const PlanarMap& g = t->map;
    const PlanarMap& gp = c.map;
    // Around each primal vertex, replacing every edge-vertex neighbor by the
    // far primal endpoint reproduces the rotation list in order.
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::vector<VertexId> contracted;
      for (Dart d : gp.darts_of(v)) {
        VertexId x = gp.head(d);
        REQUIRE(c.role[x] == Completion::Role::edge);
        Dart gd = g.dart_of_edge(c.gedge_of[x]);
        contracted.push_back(g.origin(gd) == v ? g.head(gd) : g.origin(gd));
      }
      std::vector<VertexId> expect;
      for (Dart d : g.darts_of(v)) expect.push_back(g.head(d));
      CHECK(contracted == expect);
    }
  }
}

TEST_CASE("corner out-degrees are 2 except across the outer boundary") {
  auto t = load_fixture("w5.json");
  CornerGraph cg = corner_graph(t);
  std::vector<int> outdeg(t->map.dart_count(), 0);
  for (auto& a : cg.arcs) outdeg[a.from]++;
  for (Dart d = 0; d < t->map.dart_count(); ++d) {
    if (!cg.is_inner_corner[d]) continue;
    // Every inner corner has a face step; the vertex step drops exactly
    // when the clockwise successor corner is the outer one.
    bool successor_inner = cg.is_inner_corner[t->map.sigma(d)];
    CHECK(outdeg[d] == (successor_inner ? 2 : 1));
  }
}

TEST_CASE("corner graph of W5 has 15 inner corners and 11 inner faces") {
  auto t = load_fixture("w5.json");
  CornerGraph cg = corner_graph(t);
  CHECK(cg.inner_corner_count == 15);
  // Inner faces of C_G via Euler: E - V + 1 when connected.
  int arcs = static_cast<int>(cg.arcs.size());
  CHECK(arcs - cg.inner_corner_count + 1 == 11);
}

TEST_CASE("icosahedron minus a vertex is the icosa11 fixture") {
  RotationSystem ico = icosahedron();
  PlanarMap m = PlanarMap::build_from_rotation_system(ico.rot, ico.outer);
  FiveTriangulation t = from_five_connected(m, 11);
  auto fixture = load_fixture("icosa11.json");
  CHECK(canonical_code(t) == canonical_code(*fixture));
  CHECK(is_5c(t).ok);
}

TEST_CASE("octahedron apex has degree 4 and is rejected") {
  RotationSystem oct = octahedron();
  PlanarMap m = PlanarMap::build_from_rotation_system(oct.rot, oct.outer);
  try {
    from_five_connected(m, 0);
    FAIL("expected ApexDegreeNot5");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::apex_degree_not_5);
  }
}

TEST_CASE("double pyramid minus an apex is W5") {
  RotationSystem dp = double_pyramid();
  PlanarMap m = PlanarMap::build_from_rotation_system(dp.rot, dp.outer);
  FiveTriangulation t = from_five_connected(m, 6);
  auto w5 = load_fixture("w5.json");
  CHECK(canonical_code(t) == canonical_code(*w5));
}

TEST_CASE("faces count of icosa11 matches Euler") {
  auto ico = load_fixture("icosa11.json");
  int triangles = 0;
  for (FaceId f = 0; f < ico->map.face_count(); ++f)
    if (!ico->map.is_outer_face(f)) {
      CHECK(ico->map.face_degree(f) == 3);
      ++triangles;
    }
  CHECK(triangles == 15);
}
