#include "fivec/structures.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "json.hpp"

namespace fivec {

using Role = Completion::Role;

std::vector<int> FiveCOrientation::out_degrees() const {
  std::vector<int> out(carrier->map.vertex_count(), 0);
  for (EdgeId e = 0; e < carrier->map.edge_count(); ++e)
    if (tail[e] != kNoVertex) out[tail[e]]++;
  return out;
}

Report validate_orientation(const FiveCOrientation& o) {
  Report rep;
  const Completion& c = *o.carrier;
  const PlanarMap& gp = c.map;
  if (static_cast<int>(o.tail.size()) != gp.edge_count()) {
    rep.add("coverage", "tail table size mismatch");
    return rep;
  }
  for (EdgeId e = 0; e < gp.edge_count(); ++e) {
    Dart d = gp.dart_of_edge(e);
    const bool inner = c.edge_is_inner[e];
    if (!inner) {
      if (o.tail[e] != kNoVertex)
        rep.add("coverage", "outer edge " + std::to_string(e) + " is oriented");
      continue;
    }
    if (o.tail[e] != gp.origin(d) && o.tail[e] != gp.head(d))
      rep.add("coverage", "edge " + std::to_string(e) + " has a foreign tail");
  }
  if (!rep.ok()) return rep;

  auto out = o.out_degrees();
  for (VertexId v = 0; v < gp.vertex_count(); ++v) {
    int want = 0;
    const char* what = "";
    switch (c.role[v]) {
      case Role::primal: {
        const bool outer = c.base->is_outer[c.primal_of[v]];
        want = outer ? 0 : 5;
        what = outer ? "outer primal (O0)" : "inner primal (O1)";
        break;
      }
      case Role::dual:
        want = 2;
        what = "dual (O1)";
        break;
      case Role::edge:
        want = 1;
        what = "edge-vertex (O1)";
        break;
    }
    if (out[v] != want) {
      std::ostringstream os;
      os << what << " vertex " << v << " has outdegree " << out[v] << ", expected " << want;
      rep.add("outdegree", os.str());
    }
  }
  return rep;
}

namespace {

inline Dart corner_before(const PlanarMap& g, Dart d) { return g.sigma_inv(d); }

// Clockwise corner sequence of an inner face (reverse of the ccw orbit),
// paired with the crossed face edge dart.
struct FaceCorners {
  std::array<Dart, 3> corner;  // corner ids, clockwise
  std::array<Dart, 3> crossed; // crossed[j]: orbit dart between corner[j] and corner[j+1]
};

FaceCorners face_corners_cw(const PlanarMap& g, FaceId f) {
  auto orbit = g.face_orbit(f);  // e0,e1,e2 counterclockwise
  FaceCorners fc;
  // corner(twin(e_j)) sits at origin(e_{j+1}); clockwise order is j = 2,1,0
  // and the step from corner(twin(e_j)) to corner(twin(e_{j-1})) crosses e_j.
  for (int k = 0; k < 3; ++k) {
    int j = (2 - k + 3) % 3;
    fc.corner[k] = g.twin(orbit[j]);
    fc.crossed[k] = orbit[j];
  }
  return fc;
}

}  // namespace

Report validate_labeling(const CornerLabeling& l) {
  Report rep;
  const FiveTriangulation& t = *l.carrier;
  const PlanarMap& g = t.map;
  std::vector<char> inner_corner(g.dart_count(), 0);
  for (Dart d = 0; d < g.dart_count(); ++d)
    inner_corner[d] = !g.is_outer_face(g.face_of(g.twin(d)));

  for (Dart d = 0; d < g.dart_count(); ++d) {
    if (!inner_corner[d]) continue;
    int lab = l.label[d];
    if (lab < 0 || lab > 4) {
      rep.add("range", "corner " + std::to_string(d) + " has no label");
      return rep;
    }
    int oi = t.outer_index(g.origin(d));
    if (oi >= 0 && lab != oi) {
      std::ostringstream os;
      os << "(L0) corner " << d << " at outer vertex v" << oi + 1 << " labeled " << lab + 1;
      rep.add("L0", os.str());
    }
  }

  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (t.is_outer[v]) continue;
    int sum = 0;
    bool bad = false;
    for (Dart d : g.darts_of(v)) {
      int j = jump5(l.label[d], l.label[g.sigma(d)]);
      if (j > 1) bad = true;
      sum += j;
    }
    if (bad || sum != 5)
      rep.add("L1", "labels around inner vertex " + std::to_string(v) +
                        " do not form 5 clockwise intervals");
  }

  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (g.is_outer_face(f)) continue;
    auto fc = face_corners_cw(g, f);
    int twos = 0, ones = 0;
    for (int k = 0; k < 3; ++k) {
      int j = jump5(l.label[fc.corner[k]], l.label[fc.corner[(k + 1) % 3]]);
      if (j == 2) ++twos;
      else if (j == 1) ++ones;
    }
    if (twos != 2 || ones != 1)
      rep.add("L2", "inner face " + std::to_string(f) +
                        " lacks the (2,2,1) clockwise jump pattern");
  }

  // Counterclockwise jumps around every inner edge sum to 5.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Dart d = g.dart_of_edge(e);
    Dart tw = g.twin(d);
    if (g.is_outer_face(g.face_of(d)) || g.is_outer_face(g.face_of(tw))) continue;
    int a = l.label[corner_before(g, d)];
    int b = l.label[d];
    int c = l.label[corner_before(g, tw)];
    int dd = l.label[tw];
    int sum = jump5(a, b) + jump5(b, c) + jump5(c, dd) + jump5(dd, a);
    if (sum != 5)
      rep.add("edge-jumps", "ccw jumps around inner edge " + std::to_string(e) +
                                " sum to " + std::to_string(sum));
  }
  return rep;
}

Report validate_wood(const WoodColoring& w) {
  Report rep;
  const FiveTriangulation& t = *w.carrier;
  const PlanarMap& g = t.map;
  auto edge_inner = [&](Dart d) {
    return !g.is_outer_face(g.face_of(d)) && !g.is_outer_face(g.face_of(g.twin(d)));
  };

  for (Dart d = 0; d < g.dart_count(); ++d) {
    int c = w.color[d];
    if (c == -1) continue;
    if (c < 0 || c > 4) {
      rep.add("range", "arc " + std::to_string(d) + " has color out of range");
      return rep;
    }
    if (!edge_inner(d)) rep.add("W0", "colored arc on an outer edge");
    if (t.is_outer[g.origin(d)])
      rep.add("W0", "colored arc starts at outer vertex " + std::to_string(g.origin(d)));
    int oi = t.outer_index(g.head(d));
    if (oi >= 0 && c != oi) {
      std::ostringstream os;
      os << "arc into v" << oi + 1 << " colored " << c + 1;
      rep.add("W0", os.str());
    }
  }

  // (W1) and positions of the five outgoing arcs per inner vertex.
  std::vector<std::array<Dart, 5>> out_dart(g.vertex_count(), {kNoDart, kNoDart, kNoDart, kNoDart, kNoDart});
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (t.is_outer[v]) continue;
    std::vector<std::pair<int, Dart>> outs;  // (color, dart) in sigma order
    for (Dart d : g.darts_of(v))
      if (w.color[d] >= 0) outs.push_back({w.color[d], d});
    bool ok = outs.size() == 5;
    if (ok) {
      std::array<int, 5> seen{};
      for (auto& [c, d] : outs) seen[c]++;
      for (int c = 0; c < 5; ++c) ok = ok && seen[c] == 1;
    }
    if (ok) {
      for (size_t k = 0; k < 5; ++k)
        ok = ok && mod5(outs[(k + 1) % 5].first - outs[k].first) == 1;
    }
    if (!ok) {
      rep.add("W1", "inner vertex " + std::to_string(v) +
                        " lacks one outgoing arc per color in clockwise order");
      continue;
    }
    for (auto& [c, d] : outs) out_dart[v][c] = d;
  }
  if (!rep.ok()) return rep;

  // (W2): an arc of color i into inner vertex v arrives weakly between the
  // outgoing arcs of colors i+2 and i+3.
  for (Dart d = 0; d < g.dart_count(); ++d) {
    int c = w.color[d];
    if (c < 0) continue;
    VertexId v = g.head(d);
    if (t.is_outer[v]) continue;
    Dart in = g.twin(d);
    Dart lo = out_dart[v][mod5(c + 2)];
    Dart hi = out_dart[v][mod5(c + 3)];
    bool within = false;
    for (Dart cur = lo;; cur = g.sigma(cur)) {
      if (cur == in) {
        within = true;
        break;
      }
      if (cur == hi) break;
    }
    if (in == hi) within = true;
    if (!within)
      rep.add("W2", "arc " + std::to_string(d) + " of color " + std::to_string(c + 1) +
                        " arrives outside its clockwise window");
  }

  // (W3): every inner edge carries at least one color.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Dart d = g.dart_of_edge(e);
    if (!edge_inner(d)) continue;
    if (w.color[d] == -1 && w.color[g.twin(d)] == -1)
      rep.add("W3", "inner edge " + std::to_string(e) + " has no color");
  }
  return rep;
}

FiveCOrientation phi(const CornerLabeling& l, std::shared_ptr<const Completion> gp) {
  if (auto rep = validate_labeling(l); !rep.ok())
    fail(Errc::invalid_labeling, rep.items.front().rule + ": " + rep.items.front().detail);
  const FiveTriangulation& t = *l.carrier;
  const PlanarMap& g = t.map;
  const Completion& c = *gp;

  FiveCOrientation o;
  o.carrier = gp;
  o.tail.assign(c.map.edge_count(), kNoVertex);

  // Half-edges of inner G edges: jump 0 across the dart means "toward the
  // primal vertex", jump 1 means "away".
  for (Dart d = 0; d < g.dart_count(); ++d) {
    Dart tw = g.twin(d);
    if (g.is_outer_face(g.face_of(d)) || g.is_outer_face(g.face_of(tw))) continue;
    VertexId v = g.origin(d);
    int j = jump5(l.label[corner_before(g, d)], l.label[d]);
    VertexId x = c.x_of_edge[g.edge_of(d)];
    if (j == 0)
      o.tail[c.half_edge[d]] = x;
    else if (j == 1)
      o.tail[c.half_edge[d]] = v;
    else
      fail(Errc::invalid_labeling, "jump across a vertex dart exceeds 1");
  }
  // Dual links: clockwise jump 1 around the face means "toward the dual".
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (g.is_outer_face(f)) continue;
    auto fc = face_corners_cw(g, f);
    for (int k = 0; k < 3; ++k) {
      int j = jump5(l.label[fc.corner[k]], l.label[fc.corner[(k + 1) % 3]]);
      Dart crossed = fc.crossed[k];
      EdgeId ge = g.edge_of(crossed);
      EdgeId de = c.dual_link[crossed];
      if (de == kNoEdge) fail(Errc::internal, "missing dual link");
      if (j == 1)
        o.tail[de] = c.x_of_edge[ge];
      else if (j == 2)
        o.tail[de] = c.dual_of_face[f];
      else
        fail(Errc::invalid_labeling, "jump across a face edge is not 1 or 2");
    }
  }
  // The (x_i, b_i) edges land in the loop above via the boundary faces, but
  // force them anyway for inputs where the labels degenerate.
  for (int i = 0; i < 5; ++i) o.tail[c.outer_link[i]] = c.outer_x[i];
  return o;
}

CornerLabeling phi_inv(const FiveCOrientation& o) {
  const Completion& c = *o.carrier;
  const FiveTriangulation& t = *c.base;
  const PlanarMap& g = t.map;
  CornerGraph cg = corner_graph(c.base);

  auto arc_weight = [&](const CornerGraph::Arc& a) -> int {
    if (a.kind == CornerGraph::StepKind::around_vertex) {
      EdgeId he = c.half_edge[a.crossing];
      return o.tail[he] == g.origin(a.crossing) ? 1 : 0;
    }
    EdgeId de = c.dual_link[a.crossing];
    return o.tail[de] == c.x_of_edge[g.edge_of(a.crossing)] ? 1 : 2;
  };

  // Adjacency of the corner graph, traversed in both directions.
  std::vector<std::vector<int>> adj(g.dart_count());
  for (int i = 0; i < static_cast<int>(cg.arcs.size()); ++i) {
    adj[cg.arcs[i].from].push_back(i);
    adj[cg.arcs[i].to].push_back(i);
  }

  CornerLabeling l;
  l.carrier = c.base;
  l.label.assign(g.dart_count(), -1);

  std::deque<Dart> queue;
  for (Dart d = 0; d < g.dart_count(); ++d) {
    if (!cg.is_inner_corner[d]) continue;
    int oi = t.outer_index(g.origin(d));
    if (oi >= 0) {
      l.label[d] = static_cast<std::int8_t>(oi);
      queue.push_back(d);
    }
  }
  while (!queue.empty()) {
    Dart d = queue.front();
    queue.pop_front();
    for (int ai : adj[d]) {
      const auto& a = cg.arcs[ai];
      int w = arc_weight(a);
      Dart other = a.from == d ? a.to : a.from;
      int want = a.from == d ? mod5(l.label[d] + w) : mod5(l.label[d] - w);
      if (l.label[other] == -1) {
        l.label[other] = static_cast<std::int8_t>(want);
        queue.push_back(other);
      }
    }
  }
  // Every arc is re-checked, so conflicts are detected rather than masked.
  for (const auto& a : cg.arcs) {
    if (l.label[a.from] == -1 || l.label[a.to] == -1)
      fail(Errc::propagation_conflict, "corner graph not fully labeled");
    if (mod5(l.label[a.from] + arc_weight(a)) != l.label[a.to])
      fail(Errc::propagation_conflict,
           "label jump violated between corners " + std::to_string(a.from) + " and " +
               std::to_string(a.to));
  }
  return l;
}

WoodColoring theta(const CornerLabeling& l) {
  if (auto rep = validate_labeling(l); !rep.ok())
    fail(Errc::invalid_labeling, rep.items.front().rule + ": " + rep.items.front().detail);
  const FiveTriangulation& t = *l.carrier;
  const PlanarMap& g = t.map;
  WoodColoring w;
  w.carrier = l.carrier;
  w.color.assign(g.dart_count(), -1);
  for (Dart d = 0; d < g.dart_count(); ++d) {
    if (g.is_outer_face(g.face_of(d)) || g.is_outer_face(g.face_of(g.twin(d)))) continue;
    int left = l.label[corner_before(g, d)];
    int right = l.label[d];
    if (left == right) continue;
    if (jump5(left, right) != 1) fail(Errc::invalid_labeling, "bad jump across an arc");
    w.color[d] = static_cast<std::int8_t>(mod5(left - 2));
  }
  return w;
}

CornerLabeling theta_inv(const WoodColoring& w) {
  if (auto rep = validate_wood(w); !rep.ok())
    fail(Errc::invalid_wood, rep.items.front().rule + ": " + rep.items.front().detail);
  const FiveTriangulation& t = *w.carrier;
  const PlanarMap& g = t.map;
  CornerLabeling l;
  l.carrier = w.carrier;
  l.label.assign(g.dart_count(), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int oi = t.outer_index(v);
    if (oi >= 0) {
      for (Dart d : g.darts_of(v))
        if (!g.is_outer_face(g.face_of(g.twin(d)))) l.label[d] = static_cast<std::int8_t>(oi);
      continue;
    }
    // A corner between the outgoing arcs of colors i+2 and i+3 gets label i,
    // i.e. color-of-preceding-out-arc + 3.
    Dart start = kNoDart;
    for (Dart d : g.darts_of(v))
      if (w.color[d] >= 0) {
        start = d;
        break;
      }
    int cur = -1;
    Dart d = start;
    do {
      if (w.color[d] >= 0) cur = w.color[d];
      l.label[d] = static_cast<std::int8_t>(mod5(cur + 3));
      d = g.sigma(d);
    } while (d != start);
  }
  return l;
}

WoodColoring psi(const FiveCOrientation& o) {
  const Completion& c = *o.carrier;
  const FiveTriangulation& t = *c.base;
  const PlanarMap& g = t.map;
  WoodColoring w;
  w.carrier = c.base;
  w.color.assign(g.dart_count(), -1);

  const long budget = 2L * g.edge_count() + 5;

  // Scan from dart `from` (exclusive) in the given rotation direction and
  // return the third outgoing dart at the vertex.
  auto third_out = [&](Dart from, bool clockwise) -> Dart {
    VertexId v = g.origin(from);
    Dart cur = from;
    int count = 0;
    for (int guard = 0; guard <= g.degree(v) + 1; ++guard) {
      cur = clockwise ? g.sigma(cur) : g.sigma_inv(cur);
      if (o.tail[c.half_edge[cur]] == v) {
        if (++count == 3) return cur;
      }
      if (cur == from) break;
    }
    fail(Errc::nonterminating_path, "no third outgoing arc at vertex " + std::to_string(v));
  };

  for (Dart a = 0; a < g.dart_count(); ++a) {
    if (g.is_outer_face(g.face_of(a)) || g.is_outer_face(g.face_of(g.twin(a)))) continue;
    if (o.tail[c.half_edge[a]] != g.origin(a)) continue;  // points back: uncolored
    Dart b = a;
    long steps = 0;
    while (true) {
      if (++steps > budget) fail(Errc::nonterminating_path, "straight path exceeded 2E steps");
      VertexId v = g.head(b);
      int oi = t.outer_index(v);
      if (oi >= 0) {
        w.color[a] = static_cast<std::int8_t>(oi);
        break;
      }
      Dart tw = g.twin(b);
      VertexId x = c.x_of_edge[g.edge_of(b)];
      if (o.tail[c.half_edge[tw]] != v) {
        // {x,v} points toward v: two outgoing arcs between (v,x) and (v,x')
        // clockwise.
        b = third_out(tw, true);
      } else {
        EdgeId right_link = c.dual_link[tw];
        EdgeId left_link = c.dual_link[b];
        if (right_link != kNoEdge && o.tail[right_link] == x) {
          b = third_out(tw, true);
        } else if (left_link != kNoEdge && o.tail[left_link] == x) {
          b = third_out(tw, false);
        } else {
          fail(Errc::nonterminating_path, "edge-vertex without an outgoing arc");
        }
      }
    }
  }
  return w;
}

FiveCOrientation minimize(const FiveCOrientation& o) {
  const Completion& c = *o.carrier;
  const PlanarMap& gp = c.map;

  // alpha-orientations with fixed outdegrees correspond to integer dual
  // potentials; the pointwise-maximal feasible potential (0/1-BFS distances
  // from the outer face) is the orientation with no ccw cycle.
  struct Arc {
    FaceId to;
    int w;
  };
  std::vector<std::vector<Arc>> dual(gp.face_count());
  for (EdgeId e = 0; e < gp.edge_count(); ++e) {
    Dart d = gp.dart_of_edge(e);
    if (!c.edge_is_inner[e]) {
      FaceId a = gp.face_of(d), b = gp.face_of(gp.twin(d));
      dual[a].push_back({b, 0});
      dual[b].push_back({a, 0});
      continue;
    }
    if (o.tail[e] != gp.origin(d)) d = gp.twin(d);
    FaceId l = gp.face_of(d), r = gp.face_of(gp.twin(d));
    dual[r].push_back({l, 1});
    dual[l].push_back({r, 0});
  }
  std::vector<int> dist(gp.face_count(), -1);
  std::deque<FaceId> dq{gp.outer_face()};
  dist[gp.outer_face()] = 0;
  while (!dq.empty()) {
    FaceId f = dq.front();
    dq.pop_front();
    for (const Arc& a : dual[f]) {
      int nd = dist[f] + a.w;
      if (dist[a.to] == -1 || nd < dist[a.to]) {
        dist[a.to] = nd;
        if (a.w == 0)
          dq.push_front(a.to);
        else
          dq.push_back(a.to);
      }
    }
  }

  FiveCOrientation res = o;
  for (EdgeId e = 0; e < gp.edge_count(); ++e) {
    if (!c.edge_is_inner[e]) continue;
    Dart d = gp.dart_of_edge(e);
    if (o.tail[e] != gp.origin(d)) d = gp.twin(d);
    int x = dist[gp.face_of(d)] - dist[gp.face_of(gp.twin(d))];
    if (x < 0 || x > 1) fail(Errc::internal, "potential step out of range");
    if (x == 1) res.tail[e] = o.tail[e] == gp.origin(d) ? gp.head(d) : gp.origin(d);
  }
  if (o.out_degrees() != res.out_degrees())
    fail(Errc::internal, "minimize changed outdegrees");
  return res;
}

bool has_ccw_face_cycle(const FiveCOrientation& o) {
  const PlanarMap& gp = o.carrier->map;
  for (FaceId f = 0; f < gp.face_count(); ++f) {
    if (gp.is_outer_face(f)) continue;
    bool all = true;
    for (Dart d : gp.face_orbit(f)) {
      EdgeId e = gp.edge_of(d);
      if (o.tail[e] == kNoVertex || o.tail[e] != gp.origin(d)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

// ---- structure JSON ----

namespace {

using nlohmann::json;

json vertex_desc(const Completion& c, VertexId v) {
  const PlanarMap& g = c.base->map;
  switch (c.role[v]) {
    case Role::primal:
      return json{{"role", "primal"}, {"id", c.primal_of[v]}};
    case Role::edge: {
      Dart d = g.dart_of_edge(c.gedge_of[v]);
      VertexId a = g.origin(d), b = g.head(d);
      return json{{"role", "edge"}, {"u", std::min(a, b)}, {"v", std::max(a, b)}};
    }
    case Role::dual: {
      std::vector<VertexId> tri;
      for (Dart d : g.face_orbit(c.gface_of[v])) tri.push_back(g.origin(d));
      std::sort(tri.begin(), tri.end());
      return json{{"role", "dual"}, {"face", tri}};
    }
  }
  return {};
}

VertexId vertex_from_desc(const Completion& c, const json& j) {
  const PlanarMap& g = c.base->map;
  std::string role = j.at("role").get<std::string>();
  if (role == "primal") return j.at("id").get<VertexId>();
  if (role == "edge") {
    Dart d = g.dart_between(j.at("u").get<VertexId>(), j.at("v").get<VertexId>());
    if (d == kNoDart) fail(Errc::parse_error, "unknown edge endpoint pair");
    return c.x_of_edge[g.edge_of(d)];
  }
  if (role == "dual") {
    auto tri = j.at("face").get<std::vector<VertexId>>();
    std::sort(tri.begin(), tri.end());
    for (FaceId f = 0; f < g.face_count(); ++f) {
      if (g.is_outer_face(f)) continue;
      std::vector<VertexId> cand;
      for (Dart d : g.face_orbit(f)) cand.push_back(g.origin(d));
      std::sort(cand.begin(), cand.end());
      if (cand == tri) return c.dual_of_face[f];
    }
    fail(Errc::parse_error, "unknown face triple");
  }
  fail(Errc::parse_error, "unknown role " + role);
}

}  // namespace

std::string orientation_to_json(const FiveCOrientation& o) {
  const Completion& c = *o.carrier;
  const PlanarMap& gp = c.map;
  json edges = json::array();
  for (EdgeId e = 0; e < gp.edge_count(); ++e) {
    if (o.tail[e] == kNoVertex) continue;
    Dart d = gp.dart_of_edge(e);
    VertexId tl = o.tail[e];
    VertexId hd = gp.origin(d) == tl ? gp.head(d) : gp.origin(d);
    edges.push_back(json{{"tail", vertex_desc(c, tl)}, {"head", vertex_desc(c, hd)}});
  }
  return json{{"type", "orientation"}, {"edges", edges}}.dump(1) + "\n";
}

FiveCOrientation orientation_from_json(const std::string& text,
                                       std::shared_ptr<const Completion> gp) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
  FiveCOrientation o;
  o.carrier = gp;
  o.tail.assign(gp->map.edge_count(), kNoVertex);
  try {
    for (const auto& je : j.at("edges")) {
      VertexId tl = vertex_from_desc(*gp, je.at("tail"));
      VertexId hd = vertex_from_desc(*gp, je.at("head"));
      Dart d = gp->map.dart_between(tl, hd);
      if (d == kNoDart) fail(Errc::parse_error, "edge not present in G+");
      o.tail[gp->map.edge_of(d)] = tl;
    }
  } catch (const json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
  return o;
}

std::string labeling_to_json(const CornerLabeling& l) {
  const PlanarMap& g = l.carrier->map;
  json corners = json::array();
  for (Dart d = 0; d < g.dart_count(); ++d) {
    if (l.label[d] < 0) continue;
    corners.push_back(json{{"v", g.origin(d)},
                           {"k", d - g.first_dart(g.origin(d))},
                           {"label", l.label[d] + 1}});
  }
  return json{{"type", "labeling"}, {"corners", corners}}.dump(1) + "\n";
}

CornerLabeling labeling_from_json(const std::string& text,
                                  std::shared_ptr<const FiveTriangulation> t) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
  CornerLabeling l;
  l.carrier = t;
  l.label.assign(t->map.dart_count(), -1);
  try {
    for (const auto& jc : j.at("corners")) {
      VertexId v = jc.at("v").get<VertexId>();
      int k = jc.at("k").get<int>();
      if (v < 0 || v >= t->map.vertex_count() || k < 0 || k >= t->map.degree(v))
        fail(Errc::parse_error, "corner out of range");
      l.label[t->map.first_dart(v) + k] =
          static_cast<std::int8_t>(jc.at("label").get<int>() - 1);
    }
  } catch (const json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
  return l;
}

std::string wood_to_json(const WoodColoring& w) {
  const PlanarMap& g = w.carrier->map;
  json arcs = json::array();
  for (Dart d = 0; d < g.dart_count(); ++d) {
    if (g.is_outer_face(g.face_of(d)) || g.is_outer_face(g.face_of(g.twin(d)))) continue;
    json a{{"from", g.origin(d)}, {"to", g.head(d)}};
    if (w.color[d] >= 0)
      a["color"] = w.color[d] + 1;
    else
      a["color"] = nullptr;
    arcs.push_back(std::move(a));
  }
  return json{{"type", "wood"}, {"arcs", arcs}}.dump(1) + "\n";
}

WoodColoring wood_from_json(const std::string& text,
                            std::shared_ptr<const FiveTriangulation> t) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
  WoodColoring w;
  w.carrier = t;
  w.color.assign(t->map.dart_count(), -1);
  try {
    for (const auto& ja : j.at("arcs")) {
      if (ja.at("color").is_null()) continue;
      VertexId u = ja.at("from").get<VertexId>();
      VertexId v = ja.at("to").get<VertexId>();
      Dart d = t->map.dart_between(u, v);
      if (d == kNoDart) fail(Errc::parse_error, "unknown arc");
      w.color[d] = static_cast<std::int8_t>(ja.at("color").get<int>() - 1);
    }
  } catch (const json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
  return w;
}

}  // namespace fivec
