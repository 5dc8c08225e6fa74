#include <algorithm>

#include "doctest.h"
#include "fivec/json_io.hpp"
#include "fivec/planar_map.hpp"
#include "support/instances.hpp"

using namespace fivec;

namespace {

RotationSystem c5() {
  RotationSystem rs;
  for (int k = 0; k < 5; ++k) rs.rot.push_back({(k + 4) % 5, (k + 1) % 5});
  rs.outer = {0, 1, 2, 3, 4};
  return rs;
}

RotationSystem w5() {
  RotationSystem rs;
  for (int k = 0; k < 5; ++k) rs.rot.push_back({(k + 1) % 5, 5, (k + 4) % 5});
  rs.rot.push_back({0, 1, 2, 3, 4});
  rs.outer = {0, 1, 2, 3, 4};
  return rs;
}

bool cyclically_equal(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  if (a.size() != b.size()) return false;
  for (size_t s = 0; s < a.size(); ++s) {
    bool ok = true;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[(s + i) % a.size()] != b[i]) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("pentagon C5 builds with V=5 E=5 F=2") {
  auto rs = c5();
  PlanarMap m = PlanarMap::build_from_rotation_system(rs.rot, rs.outer);
  CHECK(m.vertex_count() == 5);
  CHECK(m.edge_count() == 5);
  CHECK(m.face_count() == 2);
  auto fl = faces(m);
  CHECK(fl.orbits.size() == 2);
  for (auto& orbit : fl.orbits) CHECK(orbit.size() == 5);
}

TEST_CASE("wheel W5 builds with V=6 E=10 F=6 and triangle faces") {
  auto rs = w5();
  PlanarMap m = PlanarMap::build_from_rotation_system(rs.rot, rs.outer);
  CHECK(m.vertex_count() == 6);
  CHECK(m.edge_count() == 10);
  CHECK(m.face_count() == 6);
  int triangles = 0, pentagons = 0;
  for (FaceId f = 0; f < m.face_count(); ++f) {
    if (m.face_degree(f) == 3) ++triangles;
    if (m.face_degree(f) == 5) ++pentagons;
  }
  CHECK(triangles == 5);
  CHECK(pentagons == 1);
  CHECK(m.face_degree(m.outer_face()) == 5);
}

TEST_CASE("outer pentagon walk visits v1..v5 in order") {
  auto rs = w5();
  PlanarMap m = PlanarMap::build_from_rotation_system(rs.rot, rs.outer);
  Dart d = m.face_start(m.outer_face());
  while (m.origin(d) != 0) d = m.face_next(d);
  for (int i = 0; i < 5; ++i) {
    CHECK(m.origin(d) == i);
    d = m.face_next(d);
  }
}

TEST_CASE("inconsistent rotation is rejected") {
  // u=0 lists 1 twice but 1 lists 0 once.
  std::vector<std::vector<VertexId>> rot{{1, 1, 2}, {0, 2}, {0, 1}};
  try {
    PlanarMap::build_from_rotation_system(rot, {0, 1, 2});
    FAIL("expected InconsistentRotation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inconsistent_rotation);
  }
}

TEST_CASE("K5 rotation attempt fails the Euler check") {
  std::vector<std::vector<VertexId>> rot(5);
  for (int v = 0; v < 5; ++v)
    for (int w = 0; w < 5; ++w)
      if (w != v) rot[v].push_back(w);
  CHECK_THROWS_AS(PlanarMap::build_from_rotation_system(rot, {0, 1, 2, 3, 4}), Error);
}

TEST_CASE("disconnected input is rejected") {
  std::vector<std::vector<VertexId>> rot{{1, 1}, {0, 0}, {3, 3}, {2, 2}};
  CHECK_THROWS_AS(PlanarMap::build_from_rotation_system(rot, {0, 1}), Error);
}

TEST_CASE("validate flags a twin fixed point") {
  auto rs = w5();
  PlanarMap good = PlanarMap::build_from_rotation_system(rs.rot, rs.outer);
  CHECK(validate(good).ok());

  std::vector<Dart> twin(good.dart_count()), sigma(good.dart_count());
  std::vector<VertexId> origin(good.dart_count());
  for (Dart d = 0; d < good.dart_count(); ++d) {
    twin[d] = good.twin(d);
    sigma[d] = good.sigma(d);
    origin[d] = good.origin(d);
  }
  twin[0] = 0;  // fixed point
  PlanarMap bad = PlanarMap::from_raw(twin, sigma, origin);
  Report rep = bad.validate();
  CHECK_FALSE(rep.ok());
  bool mentioned = false;
  for (auto& v : rep.items)
    if (v.rule == "twin-fixed-point") mentioned = true;
  CHECK(mentioned);
}

TEST_CASE("rotation system round-trips up to cyclic rotation") {
  auto rs = fivec::test::icosahedron();
  PlanarMap m = PlanarMap::build_from_rotation_system(rs.rot, rs.outer);
  auto back = m.rotation_system();
  REQUIRE(back.size() == rs.rot.size());
  for (size_t v = 0; v < back.size(); ++v) CHECK(cyclically_equal(back[v], rs.rot[v]));
}

TEST_CASE("rotation JSON round-trip") {
  auto rs = w5();
  std::string text = rotation_to_json(rs);
  RotationSystem rs2 = rotation_from_json(text);
  CHECK(rs2.rot == rs.rot);
  CHECK(rs2.outer == rs.outer);
  CHECK_THROWS_AS(rotation_from_json("{\"vertices\": 3"), Error);
}
