#include "fivec/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fivec {

namespace {

// Unit-capacity Dinic, deterministic for a fixed arc insertion order.
class MaxFlow {
public:
  explicit MaxFlow(int n) : g_(n), level_(n), it_(n) {}

  void add_edge(int a, int b, int cap) {
    g_[a].push_back({b, cap, static_cast<int>(g_[b].size())});
    g_[b].push_back({a, 0, static_cast<int>(g_[a].size()) - 1});
  }

  int run(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (int f = dfs(s, t, 1 << 30)) flow += f;
    }
    return flow;
  }

  bool arc_saturated(int v, int idx) const { return g_[v][idx].cap == 0; }
  int arc_count(int v) const { return static_cast<int>(g_[v].size()); }

private:
  struct Arc {
    int to, cap, rev;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> q{s};
    level_[s] = 0;
    for (size_t h = 0; h < q.size(); ++h) {
      int v = q[h];
      for (const Arc& a : g_[v])
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push_back(a.to);
        }
    }
    return level_[t] >= 0;
  }

  int dfs(int v, int t, int f) {
    if (v == t) return f;
    for (int& i = it_[v]; i < static_cast<int>(g_[v].size()); ++i) {
      Arc& a = g_[v][i];
      if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
        int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          g_[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> g_;
  std::vector<int> level_, it_;
};

}  // namespace

QuadAugmentation augment(std::shared_ptr<const FiveTriangulation> t) {
  const PlanarMap& g = t->map;
  const int n = g.vertex_count();
  const VertexId v0 = n;

  // Rotation list of an outer vertex starting right after the outer corner,
  // i.e. at the contour dart toward the next outer vertex.
  auto canonical = [&](int i) {
    std::vector<VertexId> list;
    Dart d0 = t->outer_dart(i);
    Dart d = d0;
    do {
      list.push_back(g.head(d));
      d = g.sigma(d);
    } while (d != d0);
    return list;
  };

  std::vector<std::vector<VertexId>> rot = g.rotation_system();
  for (int i = 0; i < 5; ++i) {
    auto list = canonical(i);
    if (i == 0 || i == 1) list.insert(list.begin(), v0);          // v1, v2
    else if (i == 2 || i == 3) list.push_back(v0);                // v3, v4
    rot[t->outer[i]] = std::move(list);
  }
  rot.push_back({t->outer[3], t->outer[2], t->outer[1], t->outer[0]});  // v0: v4,v3,v2,v1

  std::vector<VertexId> houter{v0, t->outer[3], t->outer[4], t->outer[0]};
  QuadAugmentation q;
  q.base = t;
  q.v0 = v0;
  q.H = PlanarMap::build_from_rotation_system(rot, houter);

  q.h_is_outer.assign(n + 1, 0);
  for (VertexId v : houter) q.h_is_outer[v] = 1;

  q.gface_to_hidx.assign(g.face_count(), -1);
  for (FaceId f = 0; f < q.H.face_count(); ++f) {
    if (f == q.H.outer_face()) continue;
    int idx = static_cast<int>(q.hface.size());
    q.hface.push_back(f);
    auto orbit = q.H.face_orbit(f);
    if (orbit.size() != 3) fail(Errc::internal, "augmented face is not a triangle");
    q.hface_corners.push_back({q.H.origin(orbit[0]), q.H.origin(orbit[1]), q.H.origin(orbit[2])});
  }
  // Match G's inner faces to H faces by their (simple) vertex triples.
  std::vector<std::array<VertexId, 3>> keys(q.hface.size());
  for (size_t i = 0; i < q.hface.size(); ++i) {
    keys[i] = q.hface_corners[i];
    std::sort(keys[i].begin(), keys[i].end());
  }
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (g.is_outer_face(f)) continue;
    auto orbit = g.face_orbit(f);
    std::array<VertexId, 3> key{g.origin(orbit[0]), g.origin(orbit[1]), g.origin(orbit[2])};
    std::sort(key.begin(), key.end());
    int found = -1;
    for (size_t i = 0; i < keys.size() && found < 0; ++i)
      if (keys[i] == key) found = static_cast<int>(i);
    if (found < 0) fail(Errc::internal, "G face lost in augmentation");
    q.gface_to_hidx[f] = found;
  }
  return q;
}

RegularOrientation regular_orientation(const QuadAugmentation& q) {
  const int nfaces = static_cast<int>(q.hface.size());
  const int nedges = 3 * nfaces;
  const int nverts = q.H.vertex_count();

  // Node layout: S, T, edge nodes, face nodes, original-vertex nodes, and
  // one pool collecting the outer vertices. Sink capacities sum to exactly
  // the edge count (faces 1 each, inner vertices 4 each, outer pool 4), so
  // a full flow forces every outdegree exactly.
  const int S = 0, T = 1;
  auto enode = [&](int e) { return 2 + e; };
  auto fnode = [&](int f) { return 2 + nedges + f; };
  auto vnode = [&](VertexId v) { return 2 + nedges + nfaces + v; };
  const int pool = 2 + nedges + nfaces + nverts;

  MaxFlow mf(pool + 1);
  std::vector<std::pair<int, int>> face_arc(nedges);  // (edge node, arc index) to the face side
  for (int i = 0; i < nfaces; ++i) {
    for (int k = 0; k < 3; ++k) {
      int e = 3 * i + k;
      mf.add_edge(S, enode(e), 1);
      face_arc[e] = {enode(e), mf.arc_count(enode(e))};
      mf.add_edge(enode(e), fnode(i), 1);
      mf.add_edge(enode(e), vnode(q.hface_corners[i][k]), 1);
    }
  }
  for (int i = 0; i < nfaces; ++i) mf.add_edge(fnode(i), T, 1);
  for (VertexId v = 0; v < nverts; ++v) {
    if (q.h_is_outer[v])
      mf.add_edge(vnode(v), pool, 4);
    else
      mf.add_edge(vnode(v), T, 4);
  }
  mf.add_edge(pool, T, 4);

  int need = nedges;
  int inner_total = 0;
  for (VertexId v = 0; v < nverts; ++v)
    if (!q.h_is_outer[v]) inner_total += 4;
  if (nfaces + inner_total + 4 != nedges)
    fail(Errc::infeasible, "degree budget mismatch (malformed augmentation)");

  int flow = mf.run(S, T);
  if (flow != need)
    fail(Errc::infeasible, "no regular orientation: flow " + std::to_string(flow) + " of " +
                               std::to_string(need));

  // Belt and braces: verify the exactness the capacity budget guarantees.
  RegularOrientation a;
  a.out_of_face.assign(nedges, 0);
  std::vector<int> vert_out(nverts, 0);
  for (int e = 0; e < nedges; ++e) {
    auto [node, idx] = face_arc[e];
    a.out_of_face[e] = mf.arc_saturated(node, idx) ? 1 : 0;
    if (!a.out_of_face[e]) vert_out[q.hface_corners[e / 3][e % 3]]++;
  }
  for (VertexId v = 0; v < nverts; ++v)
    if (!q.h_is_outer[v] && vert_out[v] != 4)
      fail(Errc::infeasible, "inner vertex misses outdegree 4 despite full flow");
  return a;
}

OrientationB orientation_b(const QuadAugmentation& q, const RegularOrientation& a) {
  const FiveTriangulation& t = *q.base;
  const PlanarMap& g = t.map;
  const int n = g.vertex_count();

  OrientationB b;
  b.base = q.base;
  b.facev_of_gface.assign(g.face_count(), kNoVertex);
  std::vector<FaceId> dense_faces;
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (g.is_outer_face(f)) continue;
    b.facev_of_gface[f] = n + static_cast<VertexId>(dense_faces.size());
    dense_faces.push_back(f);
  }
  b.gface_of_facev.assign(n + dense_faces.size(), kNoFace);
  for (size_t i = 0; i < dense_faces.size(); ++i) b.gface_of_facev[n + i] = dense_faces[i];

  std::vector<std::vector<VertexId>> rot(n + dense_faces.size());
  for (VertexId v = 0; v < n; ++v)
    for (Dart d : g.darts_of(v)) {
      FaceId f = g.face_of(g.twin(d));  // corner(d), clockwise with d
      if (!g.is_outer_face(f)) rot[v].push_back(b.facev_of_gface[f]);
    }
  for (size_t i = 0; i < dense_faces.size(); ++i) {
    auto orbit = g.face_orbit(dense_faces[i]);
    for (auto it = orbit.rbegin(); it != orbit.rend(); ++it)
      rot[n + i].push_back(g.origin(*it));
  }
  std::vector<VertexId> outer;
  for (int i = 0; i < 5; ++i) {
    outer.push_back(t.outer[i]);
    outer.push_back(b.facev_of_gface[g.face_of(g.twin(t.outer_dart(i)))]);
  }
  b.Gd = PlanarMap::build_from_rotation_system(rot, outer);
  for (int i = 0; i < 5; ++i)
    b.b[i] = b.facev_of_gface[g.face_of(g.twin(t.outer_dart(i)))];

  // Tails from the restriction of the regular orientation.
  b.tail.assign(b.Gd.edge_count(), kNoVertex);
  for (EdgeId e = 0; e < b.Gd.edge_count(); ++e) {
    Dart d = b.Gd.dart_of_edge(e);
    VertexId x = b.Gd.origin(d), y = b.Gd.head(d);
    VertexId orig = x < n ? x : y;
    VertexId facev = x < n ? y : x;
    FaceId gf = b.gface_of_facev[facev];
    int hidx = q.gface_to_hidx[gf];
    int k = -1;
    for (int j = 0; j < 3; ++j)
      if (q.hface_corners[hidx][j] == orig) k = j;
    if (k < 0) fail(Errc::internal, "corner not found in H face");
    b.tail[e] = a.out_of_face[3 * hidx + k] ? facev : orig;
  }

  // Lift each b_i to outdegree 2 by reorienting {b_i, v_i} when it points
  // inward, else {b_i, v_{i+1}} (which then necessarily points inward).
  for (int i = 0; i < 5; ++i) {
    VertexId vi = t.outer[i];
    VertexId vj = t.outer[(i + 1) % 5];
    Dart d1 = b.Gd.dart_between(b.b[i], vi);
    Dart d2 = b.Gd.dart_between(b.b[i], vj);
    if (d1 == kNoDart || d2 == kNoDart) fail(Errc::internal, "b_i not adjacent to outer edge");
    EdgeId e1 = b.Gd.edge_of(d1), e2 = b.Gd.edge_of(d2);
    if (b.tail[e1] != b.b[i]) {
      b.tail[e1] = b.b[i];
    } else {
      if (b.tail[e2] == b.b[i]) fail(Errc::internal, "b_i already had outdegree 2");
      b.tail[e2] = b.b[i];
    }
  }

  int star_count = 0;
  for (EdgeId e = 0; e < b.Gd.edge_count(); ++e) {
    VertexId tl = b.tail[e];
    if (tl < n && t.is_outer[tl]) {
      ++star_count;
      b.estar = e;
      b.vstar = tl;
    }
  }
  if (star_count != 1)
    fail(Errc::non_unique_star,
         std::to_string(star_count) + " oriented edges leave the outer vertices");
  return b;
}

TreePairing spanning_tree(const OrientationB& b) {
  const PlanarMap& gd = b.Gd;
  TreePairing tp;
  tp.parent_edge.assign(gd.vertex_count(), kNoEdge);
  tp.in_tree.assign(gd.edge_count(), 0);

  // BFS from v* along B; neighbor order is the dart order around each vertex.
  std::vector<char> seen(gd.vertex_count(), 0);
  std::vector<VertexId> queue{b.vstar};
  seen[b.vstar] = 1;
  for (size_t h = 0; h < queue.size(); ++h) {
    VertexId v = queue[h];
    for (Dart d : gd.darts_of(v)) {
      EdgeId e = gd.edge_of(d);
      if (b.tail[e] != v) continue;
      VertexId w = gd.head(d);
      if (seen[w]) continue;
      seen[w] = 1;
      tp.parent_edge[w] = e;
      tp.in_tree[e] = 1;
      queue.push_back(w);
    }
  }
  if (static_cast<int>(queue.size()) != gd.vertex_count())
    fail(Errc::not_accessible, "orientation B is not accessible from v*");

  // Interdigitating dual tree: the duals of non-tree edges span the faces;
  // each inner face pairs with the non-tree edge leading to its dual parent.
  tp.pair_edge.assign(gd.face_count(), kNoEdge);
  tp.t_s.assign(gd.face_count(), kNoVertex);
  std::vector<char> fseen(gd.face_count(), 0);
  std::vector<FaceId> fqueue{gd.outer_face()};
  fseen[gd.outer_face()] = 1;
  int paired = 0;
  for (size_t h = 0; h < fqueue.size(); ++h) {
    FaceId f = fqueue[h];
    for (Dart d : gd.face_orbit(f)) {
      EdgeId e = gd.edge_of(d);
      if (tp.in_tree[e]) continue;
      FaceId other = gd.face_of(gd.twin(d));
      if (fseen[other]) continue;
      fseen[other] = 1;
      tp.pair_edge[other] = e;
      Dart de = gd.dart_of_edge(e);
      tp.t_s[other] = b.tail[e] == gd.origin(de) ? gd.head(de) : gd.origin(de);
      ++paired;
      fqueue.push_back(other);
    }
  }
  if (paired != gd.face_count() - 1)
    fail(Errc::internal, "dual tree does not span all faces");
  return tp;
}

FiveCOrientation assemble(const OrientationB& b, const TreePairing& tp,
                          std::shared_ptr<const Completion> cp) {
  const Completion& c = *cp;
  const FiveTriangulation& t = *c.base;
  const PlanarMap& g = t.map;
  const PlanarMap& gd = b.Gd;
  const int n = g.vertex_count();

  FiveCOrientation o;
  o.carrier = cp;
  o.tail.assign(c.map.edge_count(), kNoVertex);

  for (FaceId s = 0; s < gd.face_count(); ++s) {
    if (gd.is_outer_face(s)) continue;
    // Inner Gd faces are quads around one inner G edge.
    VertexId u = kNoVertex, v = kNoVertex;
    for (Dart d : gd.face_orbit(s)) {
      VertexId w = gd.origin(d);
      if (w < n) (u == kNoVertex ? u : v) = w;
    }
    if (u == kNoVertex || v == kNoVertex) fail(Errc::internal, "degenerate Gd face");
    Dart dg = g.dart_between(u, v);
    if (dg == kNoDart) fail(Errc::internal, "Gd face without a G edge");
    VertexId xs = c.x_of_edge[g.edge_of(dg)];

    // Image of t_s in G+.
    VertexId ts_gd = tp.t_s[s];
    VertexId ts = ts_gd < n ? ts_gd : c.dual_of_face[b.gface_of_facev[ts_gd]];

    const EdgeId around[4] = {c.half_edge[dg], c.half_edge[g.twin(dg)], c.dual_link[dg],
                              c.dual_link[g.twin(dg)]};
    const VertexId far[4] = {g.origin(dg), g.head(dg),
                             c.dual_of_face[g.face_of(dg)],
                             c.dual_of_face[g.face_of(g.twin(dg))]};
    bool hit = false;
    for (int k = 0; k < 4; ++k) {
      if (around[k] == kNoEdge) fail(Errc::internal, "missing G+ edge around x_s");
      if (far[k] == ts) {
        o.tail[around[k]] = xs;  // (x_s, t_s) outward
        hit = true;
      } else {
        o.tail[around[k]] = far[k];  // the rest point into x_s
      }
    }
    if (!hit) fail(Errc::internal, "t_s is not incident to its face");
  }
  for (int i = 0; i < 5; ++i) o.tail[c.outer_link[i]] = c.outer_x[i];

  if (auto rep = validate_orientation(o); !rep.ok())
    fail(Errc::internal, "assembled orientation invalid: " + rep.items.front().detail);
  return o;
}

FiveCOrientation construct_5c(std::shared_ptr<const FiveTriangulation> t) {
  const PlanarMap& g = t->map;
  // Non-simple inputs and inner faces carrying two outer edges cannot be 5c;
  // reject them before the pipeline assumes simplicity.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Dart d = g.dart_of_edge(e);
    if (g.origin(d) == g.head(d)) fail(Errc::not_5c, "loop in input");
  }
  {
    auto rot = g.rotation_system();
    for (auto& l : rot) {
      std::sort(l.begin(), l.end());
      if (std::adjacent_find(l.begin(), l.end()) != l.end())
        fail(Errc::not_5c, "parallel edges in input");
    }
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        if (j == i || (i + 1) % 5 == j || (j + 1) % 5 == i) continue;
        if (g.dart_between(t->outer[i], t->outer[j]) != kNoDart)
          fail(Errc::not_5c, "chord between outer vertices");
      }
    std::array<FaceId, 5> bf;
    for (int i = 0; i < 5; ++i) bf[i] = g.face_of(g.twin(t->outer_dart(i)));
    std::sort(bf.begin(), bf.end());
    if (std::adjacent_find(bf.begin(), bf.end()) != bf.end())
      fail(Errc::not_5c, "an inner face carries two outer edges");
  }

  try {
    QuadAugmentation q = augment(t);
    RegularOrientation a = regular_orientation(q);
    OrientationB b = orientation_b(q, a);
    TreePairing tp = spanning_tree(b);
    auto cp = std::make_shared<const Completion>(completion(t));
    return assemble(b, tp, cp);
  } catch (const Error& e) {
    if (e.code() == Errc::infeasible || e.code() == Errc::not_accessible) {
      std::ostringstream os;
      os << "stage " << errc_name(e.code()) << ": " << e.what();
      if (g.vertex_count() <= 5000) {
        FiveCVerdict v = is_5c(*t);
        if (!v.ok) {
          os << "; witness(" << v.reason << "):";
          for (VertexId w : v.witness_cycle) os << " " << w;
        }
      }
      fail(Errc::not_5c, os.str());
    }
    throw;
  }
}

}  // namespace fivec
