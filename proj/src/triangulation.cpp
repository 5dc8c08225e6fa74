#include "fivec/triangulation.hpp"

#include <algorithm>
#include <sstream>

namespace fivec {

Dart FiveTriangulation::outer_dart(int i) const {
  Dart d = map.face_start(map.outer_face());
  // Rotate the orbit until it starts at outer[0].
  while (map.origin(d) != outer[0]) d = map.face_next(d);
  for (int k = 0; k < i; ++k) d = map.face_next(d);
  return d;
}

FiveTriangulation check_five_triangulation(const PlanarMap& m) {
  const auto& oc = m.outer_cycle();
  if (oc.size() != 5) fail(Errc::bad_outer_face, "outer cycle is not a pentagon");
  std::array<VertexId, 5> outer;
  std::copy(oc.begin(), oc.end(), outer.begin());
  return check_five_triangulation(m, outer);
}

FiveTriangulation check_five_triangulation(const PlanarMap& m,
                                           const std::array<VertexId, 5>& outer) {
  if (m.face_degree(m.outer_face()) != 5)
    fail(Errc::bad_outer_face, "outer face has degree " +
                                   std::to_string(m.face_degree(m.outer_face())));
  {
    std::array<VertexId, 5> s = outer;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      fail(Errc::bad_outer_face, "outer cycle is not simple");
  }
  // The designated cycle must be the map's outer walk.
  {
    Dart d = m.face_start(m.outer_face());
    int spin = 0;
    while (m.origin(d) != outer[0] && spin < 5) {
      d = m.face_next(d);
      ++spin;
    }
    for (int i = 0; i < 5; ++i) {
      if (m.origin(d) != outer[i]) fail(Errc::bad_outer_face, "outer cycle mismatch");
      d = m.face_next(d);
    }
  }
  for (FaceId f = 0; f < m.face_count(); ++f) {
    if (f == m.outer_face()) continue;
    if (m.face_degree(f) != 3)
      fail(Errc::non_triangular_inner_face,
           "inner face " + std::to_string(f) + " has degree " +
               std::to_string(m.face_degree(f)));
  }
  FiveTriangulation t;
  t.map = m;
  t.outer = outer;
  t.is_outer.assign(m.vertex_count(), 0);
  for (VertexId v : outer) t.is_outer[v] = 1;
  return t;
}

namespace {

// Sorted neighbor multiset per vertex.
std::vector<std::vector<VertexId>> sorted_adjacency(const PlanarMap& m) {
  auto rot = m.rotation_system();
  for (auto& l : rot) std::sort(l.begin(), l.end());
  return rot;
}

std::vector<VertexId> common_neighbors(const std::vector<VertexId>& a,
                                       const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_face_triangle(const PlanarMap& m, VertexId u, VertexId v, VertexId w) {
  Dart d = m.dart_between(u, v);
  if (d == kNoDart) return false;
  for (FaceId f : {m.face_of(d), m.face_of(m.twin(d))}) {
    if (m.face_degree(f) != 3 || m.is_outer_face(f)) continue;
    bool has = false;
    for (Dart e : m.face_orbit(f))
      if (m.origin(e) == w) has = true;
    if (has) return true;
  }
  return false;
}

// Flood-fills faces from the outer face without crossing the cycle's edges.
// Returns an enclosed vertex, or kNoVertex when the cycle encloses none.
VertexId enclosed_vertex(const PlanarMap& m, const std::vector<VertexId>& cycle) {
  std::vector<char> cycle_edge(m.edge_count(), 0);
  std::vector<char> on_cycle(m.vertex_count(), 0);
  const int k = static_cast<int>(cycle.size());
  for (int i = 0; i < k; ++i) {
    on_cycle[cycle[i]] = 1;
    Dart d = m.dart_between(cycle[i], cycle[(i + 1) % k]);
    if (d == kNoDart) return kNoVertex;  // not a cycle of this map
    cycle_edge[m.edge_of(d)] = 1;
  }
  std::vector<char> reached(m.face_count(), 0);
  std::vector<FaceId> stack{m.outer_face()};
  reached[m.outer_face()] = 1;
  while (!stack.empty()) {
    FaceId f = stack.back();
    stack.pop_back();
    for (Dart d : m.face_orbit(f)) {
      if (cycle_edge[m.edge_of(d)]) continue;
      FaceId g = m.face_of(m.twin(d));
      if (!reached[g]) {
        reached[g] = 1;
        stack.push_back(g);
      }
    }
  }
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    if (on_cycle[v]) continue;
    // A vertex off the cycle lies strictly on one side; any incident face
    // determines which.
    if (!reached[m.face_of(m.first_dart(v))]) return v;
  }
  return kNoVertex;
}

}  // namespace

FiveCVerdict is_5c(const FiveTriangulation& t) {
  const PlanarMap& m = t.map;
  FiveCVerdict out;

  for (EdgeId e = 0; e < m.edge_count(); ++e) {
    Dart d = m.dart_of_edge(e);
    if (m.origin(d) == m.head(d)) {
      out.witness_cycle = {m.origin(d)};
      out.reason = "loop";
      return out;
    }
  }
  {
    auto adj = m.rotation_system();
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
      std::sort(adj[v].begin(), adj[v].end());
      auto it = std::adjacent_find(adj[v].begin(), adj[v].end());
      if (it != adj[v].end()) {
        out.witness_cycle = {v, *it};
        out.reason = "parallel edges";
        return out;
      }
    }
  }
  // An inner edge between two outer vertices admits no 5c-structure even
  // when it encloses nothing (possible only in the vertexless n=5 case).
  for (EdgeId e = 0; e < m.edge_count(); ++e) {
    Dart d = m.dart_of_edge(e);
    VertexId u = m.origin(d), v = m.head(d);
    if (!t.is_outer[u] || !t.is_outer[v]) continue;
    if (m.is_outer_face(m.face_of(d)) || m.is_outer_face(m.face_of(m.twin(d)))) continue;
    out.witness_cycle = {u, v};
    out.reason = "chord between outer vertices";
    return out;
  }

  auto adj = sorted_adjacency(m);

  // 3-cycles: an empty-interior triangle is necessarily a face.
  for (EdgeId e = 0; e < m.edge_count(); ++e) {
    Dart d = m.dart_of_edge(e);
    VertexId u = m.origin(d), v = m.head(d);
    if (u > v) std::swap(u, v);
    for (VertexId w : common_neighbors(adj[u], adj[v])) {
      if (w <= v) continue;  // each triangle once, with u < v < w
      if (is_face_triangle(m, u, v, w)) continue;
      VertexId enc = enclosed_vertex(m, {u, v, w});
      if (enc != kNoVertex) {
        out.witness_cycle = {u, v, w};
        out.enclosed = enc;
        out.reason = "separating triangle";
        return out;
      }
    }
  }

  // 4-cycles a-b-c-d, found from the diagonal pair {a,c}; empty interior
  // means one diagonal chord splitting the quad into two faces.
  for (VertexId a = 0; a < m.vertex_count(); ++a) {
    for (VertexId c = a + 1; c < m.vertex_count(); ++c) {
      auto cn = common_neighbors(adj[a], adj[c]);
      if (cn.size() < 2) continue;
      for (size_t i = 0; i < cn.size(); ++i) {
        for (size_t j = i + 1; j < cn.size(); ++j) {
          VertexId b = cn[i], dd = cn[j];
          if (b == a || b == c || dd == a || dd == c) continue;
          bool ok = false;
          Dart ac = m.dart_between(a, c);
          if (ac != kNoDart && is_face_triangle(m, a, b, c) && is_face_triangle(m, a, dd, c))
            ok = true;
          if (!ok) {
            Dart bd = m.dart_between(b, dd);
            if (bd != kNoDart && is_face_triangle(m, b, a, dd) && is_face_triangle(m, b, c, dd))
              ok = true;
          }
          if (ok) continue;
          VertexId enc = enclosed_vertex(m, {a, b, c, dd});
          if (enc != kNoVertex) {
            out.witness_cycle = {a, b, c, dd};
            out.enclosed = enc;
            out.reason = "separating 4-cycle";
            return out;
          }
        }
      }
    }
  }

  out.ok = true;
  return out;
}

Completion completion(std::shared_ptr<const FiveTriangulation> t) {
  const PlanarMap& g = t->map;
  const int n = g.vertex_count();
  const int ne = g.edge_count();

  for (EdgeId e = 0; e < ne; ++e) {
    Dart d = g.dart_of_edge(e);
    if (g.origin(d) == g.head(d)) fail(Errc::internal, "completion of a map with loops");
  }

  // Dense dual ids for inner faces.
  std::vector<VertexId> dual_of_face(g.face_count(), kNoVertex);
  std::vector<FaceId> face_of_dual;
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (g.is_outer_face(f)) continue;
    dual_of_face[f] = n + ne + static_cast<VertexId>(face_of_dual.size());
    face_of_dual.push_back(f);
  }
  const int nfi = static_cast<int>(face_of_dual.size());
  auto xv = [&](EdgeId e) { return static_cast<VertexId>(n + e); };

  std::vector<std::vector<VertexId>> rot(n + ne + nfi);
  for (VertexId v = 0; v < n; ++v) {
    rot[v].reserve(g.degree(v));
    for (Dart d : g.darts_of(v)) rot[v].push_back(xv(g.edge_of(d)));
  }
  for (EdgeId e = 0; e < ne; ++e) {
    Dart d = g.dart_of_edge(e);
    auto& r = rot[xv(e)];
    r.push_back(g.origin(d));
    if (!g.is_outer_face(g.face_of(d))) r.push_back(dual_of_face[g.face_of(d)]);
    r.push_back(g.head(d));
    if (!g.is_outer_face(g.face_of(g.twin(d)))) r.push_back(dual_of_face[g.face_of(g.twin(d))]);
  }
  for (int k = 0; k < nfi; ++k) {
    FaceId f = face_of_dual[k];
    auto orbit = g.face_orbit(f);
    auto& r = rot[n + ne + k];
    for (auto it = orbit.rbegin(); it != orbit.rend(); ++it)
      r.push_back(xv(g.edge_of(*it)));
  }

  // Outer contour of G+: v1, x(v1v2), v2, ..., v5, x(v5v1).
  std::vector<VertexId> outer;
  std::array<Dart, 5> odart{};
  {
    Dart d = t->outer_dart(0);
    for (int i = 0; i < 5; ++i) {
      odart[i] = d;
      outer.push_back(g.origin(d));
      outer.push_back(xv(g.edge_of(d)));
      d = g.face_next(d);
    }
  }

  Completion c;
  c.base = std::move(t);
  c.map = PlanarMap::build_from_rotation_system(rot, outer);
  c.role.assign(n + ne + nfi, Completion::Role::primal);
  c.primal_of.assign(n + ne + nfi, kNoVertex);
  c.gedge_of.assign(n + ne + nfi, kNoEdge);
  c.gface_of.assign(n + ne + nfi, kNoFace);
  for (VertexId v = 0; v < n; ++v) c.primal_of[v] = v;
  for (EdgeId e = 0; e < ne; ++e) {
    c.role[xv(e)] = Completion::Role::edge;
    c.gedge_of[xv(e)] = e;
  }
  for (int k = 0; k < nfi; ++k) {
    c.role[n + ne + k] = Completion::Role::dual;
    c.gface_of[n + ne + k] = face_of_dual[k];
  }
  c.x_of_edge.resize(ne);
  for (EdgeId e = 0; e < ne; ++e) c.x_of_edge[e] = xv(e);
  c.dual_of_face = std::move(dual_of_face);

  // Addressing tables. Builder dart layout is positional: the k-th dart of
  // vertex v is first_dart(v)+k, matching the k-th entry of rot[v].
  const PlanarMap& gp = c.map;
  c.half_edge.assign(g.dart_count(), kNoEdge);
  for (VertexId v = 0; v < n; ++v) {
    int k = 0;
    for (Dart d : g.darts_of(v)) {
      c.half_edge[d] = gp.edge_of(gp.first_dart(v) + k);
      ++k;
    }
  }
  c.dual_link.assign(g.dart_count(), kNoEdge);
  for (int k = 0; k < nfi; ++k) {
    FaceId f = face_of_dual[k];
    auto orbit = g.face_orbit(f);
    const VertexId dv = n + ne + k;
    const int deg = static_cast<int>(orbit.size());
    for (int j = 0; j < deg; ++j) {
      // rot[dv] lists x(edge(orbit[deg-1-j])) at position j
      c.dual_link[orbit[deg - 1 - j]] = gp.edge_of(gp.first_dart(dv) + j);
    }
  }
  for (int i = 0; i < 5; ++i) {
    Dart d = odart[i];
    c.outer_x[i] = xv(g.edge_of(d));
    // b_i is the dual of the inner face right of the contour dart.
    FaceId f = g.face_of(g.twin(d));
    c.b[i] = c.dual_of_face[f];
    c.outer_link[i] = c.dual_link[g.twin(d)];
  }

  c.edge_is_inner.assign(gp.edge_count(), 1);
  for (Dart d : gp.face_orbit(gp.outer_face())) c.edge_is_inner[gp.edge_of(d)] = 0;
  c.inner_edge_count = 0;
  for (char b : c.edge_is_inner) c.inner_edge_count += b;
  return c;
}

CornerGraph corner_graph(std::shared_ptr<const FiveTriangulation> t) {
  const PlanarMap& g = t->map;
  CornerGraph cg;
  cg.base = t;
  cg.is_inner_corner.assign(g.dart_count(), 0);
  for (Dart d = 0; d < g.dart_count(); ++d)
    cg.is_inner_corner[d] = !g.is_outer_face(g.face_of(g.twin(d)));
  cg.inner_corner_count = 0;
  for (char b : cg.is_inner_corner) cg.inner_corner_count += b;

  // Clockwise steps around each vertex: corner(d) -> corner(sigma(d)),
  // crossing the dart sigma(d).
  for (Dart d = 0; d < g.dart_count(); ++d) {
    if (!cg.is_inner_corner[d]) continue;
    Dart s = g.sigma(d);
    if (!cg.is_inner_corner[s]) continue;
    cg.arcs.push_back({d, s, CornerGraph::StepKind::around_vertex, s});
  }
  // Clockwise steps around each inner face. The orbit (e_0, e_1, ...) runs
  // counterclockwise and corner(twin(e_j)) is the face's corner at
  // origin(e_{j+1}), so the clockwise successor of corner(twin(e_j)) is
  // corner(twin(e_{j-1})) and the step crosses the face edge e_j.
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (g.is_outer_face(f)) continue;
    auto orbit = g.face_orbit(f);
    const int k = static_cast<int>(orbit.size());
    for (int j = 0; j < k; ++j) {
      Dart from = g.twin(orbit[j]);
      Dart to = g.twin(orbit[(j - 1 + k) % k]);
      cg.arcs.push_back({from, to, CornerGraph::StepKind::around_face, orbit[j]});
    }
  }
  return cg;
}

FiveTriangulation from_five_connected(const PlanarMap& m, VertexId apex) {
  if (apex < 0 || apex >= m.vertex_count()) fail(Errc::apex_degree_not_5, "no such vertex");
  if (m.degree(apex) != 5)
    fail(Errc::apex_degree_not_5,
         "vertex " + std::to_string(apex) + " has degree " + std::to_string(m.degree(apex)));
  for (FaceId f = 0; f < m.face_count(); ++f)
    if (m.face_degree(f) != 3)
      fail(Errc::apex_degree_not_5, "input is not a sphere triangulation");

  auto rot = m.rotation_system();
  std::vector<VertexId> link = rot[apex];  // clockwise around apex

  auto renum = [&](VertexId v) { return v < apex ? v : v - 1; };
  std::vector<std::vector<VertexId>> nrot;
  nrot.reserve(rot.size() - 1);
  for (VertexId v = 0; v < static_cast<VertexId>(rot.size()); ++v) {
    if (v == apex) continue;
    std::vector<VertexId> l;
    for (VertexId w : rot[v])
      if (w != apex) l.push_back(renum(w));
    nrot.push_back(std::move(l));
  }

  // The pentagonal hole is walked in the reverse of the apex rotation.
  std::vector<VertexId> outer(5);
  for (int i = 0; i < 5; ++i) outer[i] = renum(link[4 - i]);
  int best = 0;
  for (int i = 1; i < 5; ++i)
    if (outer[i] < outer[best]) best = i;
  std::rotate(outer.begin(), outer.begin() + best, outer.end());

  PlanarMap g = PlanarMap::build_from_rotation_system(nrot, outer);
  FiveTriangulation t = check_five_triangulation(g);
  FiveCVerdict v = is_5c(t);
  if (!v.ok) {
    std::ostringstream os;
    os << "deletion does not yield a 5c-triangulation (" << v.reason << ", witness cycle";
    for (VertexId w : v.witness_cycle) os << " " << w;
    os << ")";
    fail(Errc::result_not_5c, os.str());
  }
  return t;
}

}  // namespace fivec
