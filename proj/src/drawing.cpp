#include "fivec/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fivec {

std::array<double, 2> PentagonFrame::anchor(int k) {
  const double t = (234.0 - 72.0 * k) * std::numbers::pi / 180.0;
  return {std::cos(t), std::sin(t)};
}

int quad5_sign(__int128 a, __int128 b) {
  if (a == 0 && b == 0) return 0;
  if (a >= 0 && b >= 0) return 1;
  if (a <= 0 && b <= 0) return -1;
  // Opposite signs: compare a^2 with 5 b^2.
  __int128 a2 = a * a, b25 = 5 * b * b;
  if (a > 0) return a2 > b25 ? 1 : a2 < b25 ? -1 : 0;
  return a2 > b25 ? -1 : a2 < b25 ? 1 : 0;
}

namespace {

// Cyclic correlations S_m = sum_j a_j b_{j+m}.
std::array<__int128, 5> correlations(const std::array<long long, 5>& a,
                                     const std::array<long long, 5>& b) {
  std::array<__int128, 5> s{};
  for (int m = 0; m < 5; ++m)
    for (int j = 0; j < 5; ++j) s[m] += static_cast<__int128>(a[j]) * b[(j + m) % 5];
  return s;
}

}  // namespace

int orient3(const std::array<long long, 5>& p, const std::array<long long, 5>& q,
            const std::array<long long, 5>& r) {
  std::array<long long, 5> a, b;
  for (int k = 0; k < 5; ++k) {
    a[k] = q[k] - p[k];
    b[k] = r[k] - p[k];
  }
  // cross(V_j, V_k) = -sin(72 (k-j)) = s1 * C[(k-j) mod 5] with
  // C = (0, -1, -g, g, 1), g = (sqrt5-1)/2 and s1 = sin 72 > 0. Thus
  // 2*cross/s1 = 2(S4 - S1) + (sqrt5 - 1)(S3 - S2).
  auto s = correlations(a, b);
  __int128 rat = 2 * (s[4] - s[1]) - (s[3] - s[2]);
  __int128 irr = s[3] - s[2];
  return quad5_sign(rat, irr);
}

int dot_sign(int i, const std::array<long long, 5>& delta) {
  // 4*dot(V_i, sum delta_k V_k) = 4 d_i + (sqrt5-1)(d_{i+1}+d_{i-1})
  //                                     - (sqrt5+1)(d_{i+2}+d_{i-2})
  __int128 near = static_cast<__int128>(delta[mod5(i + 1)]) + delta[mod5(i - 1)];
  __int128 farr = static_cast<__int128>(delta[mod5(i + 2)]) + delta[mod5(i - 2)];
  __int128 rat = 4 * static_cast<__int128>(delta[mod5(i)]) - near - farr;
  __int128 irr = near - farr;
  return quad5_sign(rat, irr);
}

double modulus(const std::array<long long, 5>& delta) {
  // 4 |sum delta_k V_k|^2 = 4 S0 + (sqrt5-1)(S1+S4) - (sqrt5+1)(S2+S3)
  auto s = correlations(delta, delta);
  __int128 rat = 4 * s[0] - (s[1] + s[4]) - (s[2] + s[3]);
  __int128 irr = (s[1] + s[4]) - (s[2] + s[3]);
  double val = (static_cast<double>(rat) + static_cast<double>(irr) * std::sqrt(5.0)) / 4.0;
  return std::sqrt(std::max(0.0, val));
}

Drawing place(const WeightTable& wt, std::shared_ptr<const FiveTriangulation> t) {
  Drawing d;
  d.base = std::move(t);
  d.mode = wt.mode;
  d.w = wt.num;
  d.den = wt.den;
  d.xy.assign(d.w.size(), {0.0, 0.0});
  for (size_t v = 0; v < d.w.size(); ++v) {
    double x = 0, y = 0;
    for (int k = 0; k < 5; ++k) {
      auto a = PentagonFrame::anchor(k);
      double alpha = static_cast<double>(d.w[v][k]) / static_cast<double>(d.den);
      x += alpha * a[0];
      y += alpha * a[1];
    }
    d.xy[v] = {x, y};
  }
  return d;
}

PlanarityVerdict certify_planar(const Drawing& d, const FiveTriangulation& t) {
  const PlanarMap& g = t.map;
  // Anchor triangle (V1,V2,V3), clockwise by the frame convention.
  const int want = orient3({1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0});
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (g.is_outer_face(f)) continue;
    auto orbit = g.face_orbit(f);  // counterclockwise; reverse for clockwise
    VertexId p = g.origin(orbit[2]), q = g.origin(orbit[1]), r = g.origin(orbit[0]);
    if (orient3(d.w[p], d.w[q], d.w[r]) != want) return {false, f};
  }
  return {};
}

Report check_halfplane(const Drawing& d, const WoodTrees& tr, bool allow_boundary) {
  Report rep;
  const FiveTriangulation& t = *tr.base;
  const PlanarMap& g = t.map;
  const int limit = allow_boundary ? 1 : 0;
  auto check_pair = [&](VertexId v, VertexId u, int c) {
    if (dot_sign(c, d.delta(u, v)) >= limit) {
      std::ostringstream os;
      os << "u=" << u << " in R_" << c + 1 << "(v=" << v << ") not in the open half-plane";
      rep.add("halfplane", os.str());
    }
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (t.is_outer[v]) continue;
    auto label = region_face_labels(tr, v);
    // u belongs to the closed region R_c(v) iff some incident face has
    // label c; collect membership from face labels.
    std::vector<std::array<char, 5>> member(g.vertex_count(), {0, 0, 0, 0, 0});
    for (FaceId f = 0; f < g.face_count(); ++f) {
      if (label[f] == kNoFace) continue;
      for (Dart dd : g.face_orbit(f)) member[g.origin(dd)][label[f]] = 1;
    }
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      if (u == v) continue;
      for (int c = 0; c < 5; ++c)
        if (member[u][c]) check_pair(v, u, c);
    }
  }
  // Outer conventions: R_i(v_i) is the whole triangulation.
  for (int i = 0; i < 5; ++i) {
    VertexId vi = t.outer[i];
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      if (u != vi) check_pair(vi, u, i);
  }
  return rep;
}

Report check_sectors(const Drawing& d, const WoodColoring& w, bool allow_boundary) {
  Report rep;
  const PlanarMap& g = w.carrier->map;
  const int limit = allow_boundary ? 1 : 0;
  for (Dart dd = 0; dd < g.dart_count(); ++dd) {
    int c = w.color[dd];
    if (c < 0) continue;
    auto delta = d.delta(g.head(dd), g.origin(dd));  // u - v for arc (v,u)
    if (dot_sign(mod5(c - 2), delta) >= limit || dot_sign(mod5(c + 2), delta) >= limit) {
      std::ostringstream os;
      os << "arc " << g.origin(dd) << "->" << g.head(dd) << " of color " << c + 1
         << " leaves the open sector";
      rep.add("sector", os.str());
    }
  }
  return rep;
}

double resolution_d5() { return modulus({-2, -1, 3, 1, -1}); }
double resolution_d5_prime() { return modulus({-1, -1, 1, 1, 0}); }

ResolutionMetrics resolution(const Drawing& d) {
  ResolutionMetrics m;
  m.d5 = resolution_d5();
  m.d5_prime = resolution_d5_prime();
  const int n = static_cast<int>(d.w.size());

  // Closest pair on the evaluated coordinates (sweep over x), then the
  // winning pair's distance recomputed from the exact weights.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return d.xy[a][0] < d.xy[b][0]; });
  auto sqdist = [&](int a, int b) {
    double dx = d.xy[a][0] - d.xy[b][0], dy = d.xy[a][1] - d.xy[b][1];
    return dx * dx + dy * dy;
  };
  double best = std::numeric_limits<double>::infinity();
  std::set<std::pair<double, int>> active;  // (y, vertex)
  size_t left = 0;
  for (int idx : order) {
    double bd = std::sqrt(best);
    while (left < order.size() && d.xy[order[left]][0] < d.xy[idx][0] - bd) {
      active.erase({d.xy[order[left]][1], order[left]});
      ++left;
    }
    auto lo = active.lower_bound({d.xy[idx][1] - bd, -1});
    auto hi = active.upper_bound({d.xy[idx][1] + bd, n});
    for (auto it = lo; it != hi; ++it) {
      double sq = sqdist(idx, it->second);
      if (sq < best) {
        best = sq;
        m.arg_u = idx;
        m.arg_v = it->second;
      }
    }
    active.insert({d.xy[idx][1], idx});
  }
  if (m.arg_u != kNoVertex) m.min_distance = modulus(d.delta(m.arg_u, m.arg_v)) / d.den;

  if (d.mode == WeightMode::faces || d.mode == WeightMode::vertices) {
    m.bound_applies = true;
    m.normalized = m.min_distance * static_cast<double>(d.den);
    const double bound = d.mode == WeightMode::faces ? m.d5 : m.d5_prime;
    m.meets_bound = m.normalized >= bound - 1e-9;
  }
  return m;
}

bool check_rotational_symmetry(const Drawing& d,
                               const std::optional<std::vector<VertexId>>& rho) {
  if (!rho) fail(Errc::no_automorphism_provided, "no order-5 automorphism supplied");
  const auto& p = *rho;
  for (size_t v = 0; v < d.w.size(); ++v)
    for (int k = 0; k < 5; ++k)
      if (d.w[p[v]][mod5(k + 1)] != d.w[v][k]) return false;
  return true;
}

std::optional<std::vector<VertexId>> find_rotation_automorphism(const FiveTriangulation& t) {
  const PlanarMap& g = t.map;
  // A map automorphism is determined by one dart image; propagate
  // f(sigma d) = sigma f(d), f(twin d) = twin f(d) from the outer contour.
  std::vector<Dart> f(g.dart_count(), kNoDart);
  Dart d0 = t.outer_dart(0), e0 = t.outer_dart(1);
  f[d0] = e0;
  std::vector<Dart> stack{d0};
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    const Dart pairs[2][2] = {{g.sigma(d), g.sigma(f[d])}, {g.twin(d), g.twin(f[d])}};
    for (auto& [from, to] : pairs) {
      if (f[from] == kNoDart) {
        f[from] = to;
        stack.push_back(from);
      } else if (f[from] != to) {
        return std::nullopt;
      }
    }
  }
  std::vector<VertexId> rho(g.vertex_count(), kNoVertex);
  for (Dart d = 0; d < g.dart_count(); ++d) {
    if (f[d] == kNoDart) return std::nullopt;
    VertexId v = g.origin(d), w = g.origin(f[d]);
    if (rho[v] != kNoVertex && rho[v] != w) return std::nullopt;
    rho[v] = w;
  }
  // Must be a bijection of order consistent with v_i -> v_{i+1}.
  std::vector<char> hit(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (rho[v] == kNoVertex || hit[rho[v]]) return std::nullopt;
    hit[rho[v]] = 1;
  }
  for (int i = 0; i < 5; ++i)
    if (rho[t.outer[i]] != t.outer[(i + 1) % 5]) return std::nullopt;
  return rho;
}

std::string drawing_to_svg(const Drawing& d, const WoodColoring* wood, double scale) {
  const PlanarMap& g = d.base->map;
  const double s = scale;
  const double cx = 1.05 * s, cy = 1.05 * s;
  auto X = [&](VertexId v) { return cx + s * d.xy[v][0]; };
  auto Y = [&](VertexId v) { return cy - s * d.xy[v][1]; };
  static const char* kTreeColor[5] = {"#d62728", "#ff7f0e", "#2ca02c", "#1f77b4", "#9467bd"};

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2.1 * s << "\" height=\""
     << 2.1 * s << "\" viewBox=\"0 0 " << 2.1 * s << " " << 2.1 * s << "\">\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Dart dd = g.dart_of_edge(e);
    os << "  <line x1=\"" << X(g.origin(dd)) << "\" y1=\"" << Y(g.origin(dd)) << "\" x2=\""
       << X(g.head(dd)) << "\" y2=\"" << Y(g.head(dd))
       << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  }
  if (wood) {
    for (Dart dd = 0; dd < g.dart_count(); ++dd) {
      int c = wood->color[dd];
      if (c < 0) continue;
      VertexId a = g.origin(dd), b = g.head(dd);
      // Colored arcs as half-length overlays from the origin.
      double mx = 0.5 * (X(a) + X(b)), my = 0.5 * (Y(a) + Y(b));
      os << "  <line x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << mx << "\" y2=\""
         << my << "\" stroke=\"" << kTreeColor[c] << "\" stroke-width=\"2.5\"/>\n";
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    os << "  <circle cx=\"" << X(v) << "\" cy=\"" << Y(v) << "\" r=\"2.5\" fill=\"#000000\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string drawing_to_json(const Drawing& d) {
  nlohmann::json verts = nlohmann::json::array();
  for (size_t v = 0; v < d.w.size(); ++v) {
    nlohmann::json jw = nlohmann::json::array();
    for (int k = 0; k < 5; ++k)
      jw.push_back(std::to_string(d.w[v][k]) + "/" + std::to_string(d.den));
    verts.push_back(nlohmann::json{{"id", v},
                                   {"weights", jw},
                                   {"x", d.xy[v][0]},
                                   {"y", d.xy[v][1]}});
  }
  const char* mode = d.mode == WeightMode::faces ? "faces"
                     : d.mode == WeightMode::vertices ? "vertices"
                                                      : "weighted";
  return nlohmann::json{{"type", "drawing"}, {"mode", mode}, {"vertices", verts}}.dump(1) +
         "\n";
}

}  // namespace fivec
