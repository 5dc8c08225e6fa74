#include "support/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fivec::test {

namespace {

VertexId flood_enclosed(const PlanarMap& m, const std::vector<VertexId>& cycle) {
  std::vector<char> cut(m.edge_count(), 0);
  std::vector<char> on(m.vertex_count(), 0);
  const int k = static_cast<int>(cycle.size());
  for (int i = 0; i < k; ++i) {
    on[cycle[i]] = 1;
    Dart d = m.dart_between(cycle[i], cycle[(i + 1) % k]);
    if (d == kNoDart) return kNoVertex;
    cut[m.edge_of(d)] = 1;
  }
  std::vector<char> reach(m.face_count(), 0);
  std::vector<FaceId> st{m.outer_face()};
  reach[m.outer_face()] = 1;
  while (!st.empty()) {
    FaceId f = st.back();
    st.pop_back();
    for (Dart d : m.face_orbit(f)) {
      if (cut[m.edge_of(d)]) continue;
      FaceId g = m.face_of(m.twin(d));
      if (!reach[g]) {
        reach[g] = 1;
        st.push_back(g);
      }
    }
  }
  for (VertexId v = 0; v < m.vertex_count(); ++v)
    if (!on[v] && !reach[m.face_of(m.first_dart(v))]) return v;
  return kNoVertex;
}

}  // namespace

FiveCVerdict is_5c_oracle(const FiveTriangulation& t) {
  const PlanarMap& m = t.map;
  FiveCVerdict out;
  auto adj = m.rotation_system();
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    for (VertexId w : adj[v])
      if (w == v) {
        out.witness_cycle = {v};
        out.reason = "loop";
        return out;
      }
    auto s = adj[v];
    std::sort(s.begin(), s.end());
    auto it = std::adjacent_find(s.begin(), s.end());
    if (it != s.end()) {
      out.witness_cycle = {v, *it};
      out.reason = "parallel edges";
      return out;
    }
  }
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j || (i + 1) % 5 == j || (j + 1) % 5 == i) continue;
      if (m.dart_between(t.outer[i], t.outer[j]) != kNoDart) {
        out.witness_cycle = {t.outer[i], t.outer[j]};
        out.reason = "chord between outer vertices";
        return out;
      }
    }
  auto adjacent = [&](VertexId a, VertexId b) {
    return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
  };
  // All simple 3- and 4-cycles by path DFS from their minimum vertex.
  for (VertexId a = 0; a < m.vertex_count(); ++a) {
    for (VertexId b : adj[a]) {
      if (b <= a) continue;
      for (VertexId c : adj[b]) {
        if (c <= a || c == b) continue;
        if (adjacent(c, a) && b < c) {
          VertexId enc = flood_enclosed(m, {a, b, c});
          if (enc != kNoVertex) {
            out.witness_cycle = {a, b, c};
            out.enclosed = enc;
            out.reason = "separating triangle";
            return out;
          }
        }
        for (VertexId d : adj[c]) {
          if (d <= a || d == b || d == c) continue;
          if (!adjacent(d, a)) continue;
          if (b > d) continue;  // each 4-cycle once
          VertexId enc = flood_enclosed(m, {a, b, c, d});
          if (enc != kNoVertex) {
            out.witness_cycle = {a, b, c, d};
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

std::vector<std::vector<VertexId>> enumerate_orientations(const Completion& c) {
  const PlanarMap& gp = c.map;
  std::vector<EdgeId> vars;
  for (EdgeId e = 0; e < gp.edge_count(); ++e)
    if (c.edge_is_inner[e]) vars.push_back(e);

  std::vector<int> target(gp.vertex_count());
  for (VertexId v = 0; v < gp.vertex_count(); ++v) {
    switch (c.role[v]) {
      case Completion::Role::primal:
        target[v] = c.base->is_outer[c.primal_of[v]] ? 0 : 5;
        break;
      case Completion::Role::dual:
        target[v] = 2;
        break;
      case Completion::Role::edge:
        target[v] = 1;
        break;
    }
  }
  std::vector<int> rem_edges(gp.vertex_count(), 0);
  for (EdgeId e : vars) {
    Dart d = gp.dart_of_edge(e);
    rem_edges[gp.origin(d)]++;
    rem_edges[gp.head(d)]++;
  }
  std::vector<int> rem_out = target;
  std::vector<VertexId> tail(gp.edge_count(), kNoVertex);
  std::vector<std::vector<VertexId>> found;

  auto feasible = [&](VertexId v) { return rem_out[v] >= 0 && rem_out[v] <= rem_edges[v]; };

  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == vars.size()) {
      found.push_back(tail);
      return;
    }
    EdgeId e = vars[i];
    Dart d = gp.dart_of_edge(e);
    VertexId a = gp.origin(d), b = gp.head(d);
    rem_edges[a]--;
    rem_edges[b]--;
    for (VertexId tl : {a, b}) {
      rem_out[tl]--;
      if (feasible(a) && feasible(b)) {
        tail[e] = tl;
        rec(i + 1);
      }
      rem_out[tl]++;
    }
    tail[e] = kNoVertex;
    rem_edges[a]++;
    rem_edges[b]++;
  };
  rec(0);
  return found;
}

std::vector<std::vector<std::int8_t>> enumerate_labelings(const FiveTriangulation& t) {
  const PlanarMap& g = t.map;
  std::vector<std::int8_t> label(g.dart_count(), -1);
  std::vector<Dart> vars;
  for (Dart d = 0; d < g.dart_count(); ++d) {
    if (g.is_outer_face(g.face_of(g.twin(d)))) continue;  // outer corner
    int oi = t.outer_index(g.origin(d));
    if (oi >= 0)
      label[d] = static_cast<std::int8_t>(oi);
    else
      vars.push_back(d);
  }
  std::vector<std::vector<std::int8_t>> found;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == vars.size()) {
      CornerLabeling l{std::make_shared<const FiveTriangulation>(t), label};
      if (validate_labeling(l).ok()) found.push_back(label);
      return;
    }
    Dart d = vars[i];
    for (int val = 0; val < 5; ++val) {
      // Prune on already-assigned clockwise neighbors around the vertex.
      Dart prev = g.sigma_inv(d), next = g.sigma(d);
      if (label[prev] >= 0 && jump5(label[prev], val) > 1) continue;
      if (label[next] >= 0 && jump5(val, label[next]) > 1) continue;
      label[d] = static_cast<std::int8_t>(val);
      rec(i + 1);
      label[d] = -1;
    }
  };
  rec(0);
  return found;
}

std::vector<std::vector<std::int8_t>> enumerate_woods(const FiveTriangulation& t) {
  const PlanarMap& g = t.map;
  auto tp = std::make_shared<const FiveTriangulation>(t);
  std::vector<EdgeId> vars;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Dart d = g.dart_of_edge(e);
    if (g.is_outer_face(g.face_of(d)) || g.is_outer_face(g.face_of(g.twin(d)))) continue;
    vars.push_back(e);
  }
  std::vector<std::int8_t> color(g.dart_count(), -1);
  std::vector<std::array<char, 5>> used(g.vertex_count(), {0, 0, 0, 0, 0});
  std::vector<std::vector<std::int8_t>> found;

  auto candidates = [&](Dart d) {
    std::vector<int> cs;
    VertexId from = g.origin(d), to = g.head(d);
    if (t.is_outer[from]) {
      cs.push_back(-1);
      return cs;
    }
    int oi = t.outer_index(to);
    if (oi >= 0) {
      cs = {-1, oi};
      return cs;
    }
    cs = {-1, 0, 1, 2, 3, 4};
    return cs;
  };

  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == vars.size()) {
      WoodColoring w{tp, color};
      if (validate_wood(w).ok()) found.push_back(color);
      return;
    }
    Dart d = g.dart_of_edge(vars[i]);
    Dart dt = g.twin(d);
    for (int ca : candidates(d)) {
      if (ca >= 0 && used[g.origin(d)][ca]) continue;
      for (int cb : candidates(dt)) {
        if (ca < 0 && cb < 0) continue;  // W3
        if (cb >= 0 && used[g.origin(dt)][cb]) continue;
        color[d] = static_cast<std::int8_t>(ca);
        color[dt] = static_cast<std::int8_t>(cb);
        if (ca >= 0) used[g.origin(d)][ca] = 1;
        if (cb >= 0) used[g.origin(dt)][cb] = 1;
        rec(i + 1);
        if (ca >= 0) used[g.origin(d)][ca] = 0;
        if (cb >= 0) used[g.origin(dt)][cb] = 0;
        color[d] = color[dt] = -1;
      }
    }
  };
  rec(0);
  return found;
}

bool pairing_inside_fundamental_cycle(const OrientationB& b, const TreePairing& tp,
                                      FaceId face) {
  const PlanarMap& gd = b.Gd;
  EdgeId e = tp.pair_edge[face];
  if (e == kNoEdge) return false;
  Dart d = gd.dart_of_edge(e);

  // Fundamental cycle = e plus the symmetric difference of the two
  // root paths in T.
  std::map<EdgeId, int> count;
  for (VertexId v : {gd.origin(d), gd.head(d)}) {
    VertexId cur = v;
    while (tp.parent_edge[cur] != kNoEdge) {
      EdgeId pe = tp.parent_edge[cur];
      count[pe]++;
      cur = b.tail[pe];  // tree edges run parent -> child in B
    }
  }
  std::vector<char> cut(gd.edge_count(), 0);
  cut[e] = 1;
  for (auto& [pe, k] : count)
    if (k == 1) cut[pe] = 1;

  std::vector<char> reach(gd.face_count(), 0);
  std::vector<FaceId> st{gd.outer_face()};
  reach[gd.outer_face()] = 1;
  while (!st.empty()) {
    FaceId f = st.back();
    st.pop_back();
    for (Dart dd : gd.face_orbit(f)) {
      if (cut[gd.edge_of(dd)]) continue;
      FaceId g2 = gd.face_of(gd.twin(dd));
      if (!reach[g2]) {
        reach[g2] = 1;
        st.push_back(g2);
      }
    }
  }
  bool incident = false;
  for (Dart dd : gd.face_orbit(face))
    if (gd.edge_of(dd) == e) incident = true;
  return incident && !reach[face];
}

std::optional<bool> has_ccw_cycle_oracle(const FiveCOrientation& o, long cap) {
  const Completion& c = *o.carrier;
  const PlanarMap& gp = c.map;
  std::vector<std::vector<Dart>> out(gp.vertex_count());
  for (EdgeId e = 0; e < gp.edge_count(); ++e) {
    if (o.tail[e] == kNoVertex) continue;
    Dart d = gp.dart_of_edge(e);
    if (gp.origin(d) != o.tail[e]) d = gp.twin(d);
    out[gp.origin(d)].push_back(d);
  }
  long budget = cap;
  std::vector<char> onpath(gp.vertex_count(), 0);
  std::vector<Dart> path;

  auto is_ccw = [&](const std::vector<Dart>& cyc) {
    std::vector<char> cut(gp.edge_count(), 0);
    for (Dart d : cyc) cut[gp.edge_of(d)] = 1;
    std::vector<char> reach(gp.face_count(), 0);
    std::vector<FaceId> st{gp.outer_face()};
    reach[gp.outer_face()] = 1;
    while (!st.empty()) {
      FaceId f = st.back();
      st.pop_back();
      for (Dart dd : gp.face_orbit(f)) {
        if (cut[gp.edge_of(dd)]) continue;
        FaceId g2 = gp.face_of(gp.twin(dd));
        if (!reach[g2]) {
          reach[g2] = 1;
          st.push_back(g2);
        }
      }
    }
    // Interior on the left of the cycle darts means counterclockwise.
    return !reach[gp.face_of(cyc.front())];
  };

  bool found = false;
  std::function<bool(VertexId, VertexId)> dfs = [&](VertexId start, VertexId v) -> bool {
    if (--budget < 0) return true;  // cap hit
    for (Dart d : out[v]) {
      VertexId w = gp.head(d);
      if (w < start) continue;
      if (w == start) {
        path.push_back(d);
        if (is_ccw(path)) found = true;
        path.pop_back();
        if (found) return true;
        continue;
      }
      if (onpath[w]) continue;
      onpath[w] = 1;
      path.push_back(d);
      bool stop = dfs(start, w);
      path.pop_back();
      onpath[w] = 0;
      if (stop) return true;
    }
    return false;
  };
  for (VertexId s = 0; s < gp.vertex_count(); ++s) {
    onpath[s] = 1;
    bool stop = dfs(s, s);
    onpath[s] = 0;
    if (found) return true;
    if (stop && budget < 0) return std::nullopt;
  }
  return false;
}

std::optional<std::pair<EdgeId, EdgeId>> segment_crossing_oracle(const Drawing& d,
                                                                 const FiveTriangulation& t) {
  const PlanarMap& g = t.map;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v = u + 1; v < g.vertex_count(); ++v)
      if (d.w[u] == d.w[v])
        return std::make_pair(g.edge_of(g.first_dart(u)), g.edge_of(g.first_dart(v)));

  for (EdgeId e1 = 0; e1 < g.edge_count(); ++e1) {
    Dart d1 = g.dart_of_edge(e1);
    VertexId a1 = g.origin(d1), a2 = g.head(d1);
    for (EdgeId e2 = e1 + 1; e2 < g.edge_count(); ++e2) {
      Dart d2 = g.dart_of_edge(e2);
      VertexId b1 = g.origin(d2), b2 = g.head(d2);
      if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) continue;
      int s1 = orient3(d.w[a1], d.w[a2], d.w[b1]);
      int s2 = orient3(d.w[a1], d.w[a2], d.w[b2]);
      int s3 = orient3(d.w[b1], d.w[b2], d.w[a1]);
      int s4 = orient3(d.w[b1], d.w[b2], d.w[a2]);
      if (s1 * s2 < 0 && s3 * s4 < 0) return std::make_pair(e1, e2);
    }
  }
  return std::nullopt;
}

}  // namespace fivec::test
