#include <algorithm>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "fivec/construct.hpp"
#include "fivec/generator.hpp"
#include "fivec/regions.hpp"
#include "support/instances.hpp"

using namespace fivec;
using namespace fivec::test;

namespace {

std::shared_ptr<const WoodTrees> trees_of(std::shared_ptr<const FiveTriangulation> t,
                                          bool minimal = false) {
  auto o = construct_5c(t);
  if (minimal) o = minimize(o);
  return std::make_shared<const WoodTrees>(wood_trees(theta(phi_inv(o))));
}

}  // namespace

TEST_CASE("W5 trees are single spokes; icosa11 trees span the 6 inner vertices") {
  auto w5t = trees_of(load_fixture("w5.json"));
  for (int c = 0; c < 5; ++c) {
    int arcs = 0;
    for (VertexId v = 0; v < 6; ++v)
      if (w5t->parent[c][v] != kNoVertex) ++arcs;
    CHECK(arcs == 1);
    CHECK(w5t->parent[c][5] == w5t->base->outer[c]);
  }
  auto icot = trees_of(load_fixture("icosa11.json"));
  for (int c = 0; c < 5; ++c) {
    int spanned = 0;
    for (VertexId v = 0; v < 11; ++v)
      if (icot->parent[c][v] != kNoVertex) ++spanned;
    CHECK(spanned == 6);
  }
}

TEST_CASE("an injected color cycle is detected") {
  auto t = load_fixture("icosa11.json");
  auto o = construct_5c(t);
  WoodColoring w = theta(phi_inv(o));
  // Force a 2-cycle of color 1 between two adjacent inner vertices.
  const PlanarMap& g = t->map;
  Dart d = g.dart_between(5, 6);
  REQUIRE(d != kNoDart);
  WoodColoring bad = w;
  for (Dart dd : g.darts_of(5))
    if (bad.color[dd] == 0) bad.color[dd] = -1;
  for (Dart dd : g.darts_of(6))
    if (bad.color[dd] == 0) bad.color[dd] = -1;
  bad.color[d] = 0;
  bad.color[g.twin(d)] = 0;
  CHECK_THROWS_AS(wood_trees(bad), Error);
}

TEST_CASE("acyclicity certification passes on real woods") {
  for (int n : {6, 11, 20}) {
    auto t = n == 6 ? load_fixture("w5.json")
                    : std::make_shared<const FiveTriangulation>(
                          generate_random_5c(n, n + 4, 3 * n));
    auto o = construct_5c(t);
    WoodColoring w = theta(phi_inv(o));
    CHECK(check_acyclic_biorientations(w).ok());
  }
}

TEST_CASE("a hand-built cyclic biorientation is reported with its darts") {
  auto t = load_fixture("icosa11.json");
  const PlanarMap& g = t->map;
  WoodColoring fake{t, std::vector<std::int8_t>(g.dart_count(), -1)};
  // Directed ring of color 1 through the inner pentagon u_1..u_5.
  for (int k = 0; k < 5; ++k) {
    Dart d = g.dart_between(5 + k, 5 + (k + 1) % 5);
    REQUIRE(d != kNoDart);
    fake.color[d] = 0;
  }
  Report rep = check_acyclic_biorientations(fake);
  CHECK_FALSE(rep.ok());
  CHECK(rep.items.front().detail.find("darts:") != std::string::npos);
}

TEST_CASE("paths from the hub are disjoint except at the vertex itself") {
  auto icot = trees_of(load_fixture("icosa11.json"));
  auto ps = paths(*icot, 10);  // hub w
  for (int c = 0; c < 5; ++c) CHECK(ps[c].size() == 3);  // length 2
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) {
      std::set<VertexId> inter;
      std::set<VertexId> sa(ps[a].begin(), ps[a].end());
      for (VertexId v : ps[b])
        if (sa.count(v)) inter.insert(v);
      CHECK(inter == std::set<VertexId>{10});
    }
  auto w5t = trees_of(load_fixture("w5.json"));
  auto hub = paths(*w5t, 5);
  for (int c = 0; c < 5; ++c) CHECK(hub[c].size() == 2);  // five length-1 paths
}

TEST_CASE("region sizes on the fixtures match the formulas") {
  auto w5t = trees_of(load_fixture("w5.json"));
  RegionTable rt = region_sizes_linear(w5t);
  for (int c = 0; c < 5; ++c) {
    CHECK(rt.inside[5][c] == 0);
    CHECK(rt.length[5][c] == 1);
    CHECK(rt.faces[5][c] == 1);  // 0 + 1 + 1 - 1
  }
  auto icot = trees_of(load_fixture("icosa11.json"), true);
  RegionTable irt = region_sizes_linear(icot);
  long total = 0;
  for (int c = 0; c < 5; ++c) total += irt.faces[10][c];
  CHECK(total == 15);
  for (int c = 0; c < 5; ++c) CHECK(irt.faces[10][c] == 3);  // forced by symmetry
}

TEST_CASE("linear region sizes equal the naive oracle") {
  for (int n : {6, 11, 14, 40, 120}) {
    auto t = n == 6 ? load_fixture("w5.json")
                    : std::make_shared<const FiveTriangulation>(
                          generate_random_5c(n, 2 * n + 1, 3 * n));
    auto tr = trees_of(t);
    RegionTable lin = region_sizes_linear(tr);
    RegionTable nai = region_sizes_naive(tr);
    CHECK(lin.faces == nai.faces);
    CHECK(lin.vertices == nai.vertices);
    CHECK(lin.inside == nai.inside);
    CHECK(lin.length == nai.length);
    // Partition: the five regions cover the 2n-7 inner faces.
    for (VertexId v = 0; v < t->map.vertex_count(); ++v) {
      if (t->is_outer[v]) continue;
      long sum = 0;
      for (int c = 0; c < 5; ++c) sum += lin.faces[v][c];
      CHECK(sum == 2 * t->n() - 7);
    }
  }
}

TEST_CASE("region containment is monotone for nested vertices") {
  auto t = std::make_shared<const FiveTriangulation>(generate_random_5c(16, 9, 40));
  auto tr = trees_of(t);
  const PlanarMap& g = t->map;
  std::vector<std::vector<int>> labels(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!t->is_outer[v]) labels[v] = region_face_labels(*tr, v);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (t->is_outer[v]) continue;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (u == v || t->is_outer[u]) continue;
      for (int c = 0; c < 5; ++c) {
        // u in the open region R_c(v): some incident face labeled c.
        bool member = false;
        for (Dart d : g.darts_of(u))
          if (labels[v][g.face_of(d)] == c) member = true;
        if (!member) continue;
        for (FaceId f = 0; f < g.face_count(); ++f) {
          if (g.is_outer_face(f)) continue;
          if (labels[u][f] == c) CHECK(labels[v][f] == c);  // R_c(u) subset R_c(v)
          // R_{c-2,c+2}(v) subset R_{c-2,c+2}(u)
          if (labels[v][f] == mod5(c - 2) || labels[v][f] == mod5(c + 2)) {
            bool in_u = labels[u][f] == mod5(c - 2) || labels[u][f] == mod5(c + 2);
            CHECK(in_u);
          }
        }
      }
    }
  }
}

TEST_CASE("weights are exact rationals summing to one") {
  auto w5t = trees_of(load_fixture("w5.json"));
  RegionTable rt = region_sizes_linear(w5t);
  WeightTable faces = weights(rt, WeightMode::faces);
  CHECK(faces.den == 5);
  for (int c = 0; c < 5; ++c) CHECK(faces.num[5][c] == 1);  // hub at (1/5,...)

  WeightTable verts = weights(rt, WeightMode::vertices);
  CHECK(verts.den == 5);
  for (int c = 0; c < 5; ++c) CHECK(verts.num[5][c] == 1);

  // Equal face weights reproduce faces mode up to scale.
  std::vector<long long> fw(w5t->base->map.face_count(), 7);
  WeightTable wtd = weights(rt, WeightMode::weighted, &fw);
  CHECK(wtd.den == 7 * 5);
  for (VertexId v = 0; v < 6; ++v)
    for (int c = 0; c < 5; ++c) CHECK(wtd.num[v][c] == 7 * faces.num[v][c]);

  std::vector<long long> bad(w5t->base->map.face_count(), 7);
  bad[0] = 0;
  bool outer_is_zero = w5t->base->map.is_outer_face(0);
  if (!outer_is_zero) CHECK_THROWS_AS(weights(rt, WeightMode::weighted, &bad), Error);
}

TEST_CASE("outer rows follow the conventions") {
  auto icot = trees_of(load_fixture("icosa11.json"));
  RegionTable rt = region_sizes_linear(icot);
  auto t = icot->base;
  for (int i = 0; i < 5; ++i) {
    for (int c = 0; c < 5; ++c) {
      CHECK(rt.faces[t->outer[i]][c] == (c == i ? 15 : 0));
      CHECK(rt.vertices[t->outer[i]][c] == (c == i ? 10 : 0));
    }
  }
  std::string js = region_table_to_json(rt);
  CHECK(js.find("region_faces") != std::string::npos);
}

TEST_CASE("golden region dump for W5") {
  auto w5t = trees_of(load_fixture("w5.json"));
  std::string js = region_table_to_json(region_sizes_linear(w5t));
  auto j = nlohmann::json::parse(js);
  REQUIRE(j.at("rows").size() == 6);
  using V = std::vector<int>;
  CHECK(j["rows"][5]["region_faces"].get<V>() == V{1, 1, 1, 1, 1});  // hub
  CHECK(j["rows"][5]["path_lengths"].get<V>() == V{1, 1, 1, 1, 1});
  CHECK(j["rows"][0]["region_faces"].get<V>() == V{5, 0, 0, 0, 0});  // v1 convention
  CHECK(region_table_to_json(region_sizes_linear(w5t)) == js);  // byte-stable
}
