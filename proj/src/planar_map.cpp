#include "fivec/planar_map.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fivec {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::inconsistent_rotation: return "InconsistentRotation";
    case Errc::outer_face_not_found: return "OuterFaceNotFound";
    case Errc::disconnected: return "Disconnected";
    case Errc::non_planar: return "NonPlanar";
    case Errc::bad_outer_face: return "BadOuterFace";
    case Errc::non_triangular_inner_face: return "NonTriangularInnerFace";
    case Errc::apex_degree_not_5: return "ApexDegreeNot5";
    case Errc::result_not_5c: return "ResultNot5c";
    case Errc::generation_failed: return "GenerationFailed";
    case Errc::invalid_labeling: return "InvalidLabeling";
    case Errc::invalid_wood: return "InvalidWood";
    case Errc::propagation_conflict: return "PropagationConflict";
    case Errc::nonterminating_path: return "NonterminatingPath";
    case Errc::infeasible: return "Infeasible";
    case Errc::non_unique_star: return "NonUniqueStar";
    case Errc::not_accessible: return "NotAccessible";
    case Errc::not_5c: return "Not5c";
    case Errc::cycle_detected: return "CycleDetected";
    case Errc::non_positive_weight: return "NonPositiveWeight";
    case Errc::no_automorphism_provided: return "NoAutomorphismProvided";
    case Errc::parse_error: return "ParseError";
    case Errc::check_failed: return "CheckFailed";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

std::string Report::to_string() const {
  std::ostringstream os;
  for (const auto& v : items) os << v.rule << ": " << v.detail << "\n";
  return os.str();
}

PlanarMap PlanarMap::build_from_rotation_system(const std::vector<std::vector<VertexId>>& rot,
                                                const std::vector<VertexId>& outer) {
  const int n = static_cast<int>(rot.size());
  std::vector<Dart> prefix(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    for (VertexId w : rot[v])
      if (w < 0 || w >= n) fail(Errc::inconsistent_rotation, "neighbor id out of range");
    prefix[v + 1] = prefix[v] + static_cast<Dart>(rot[v].size());
  }
  const int nd = prefix[n];
  if (nd % 2 != 0) fail(Errc::inconsistent_rotation, "odd number of darts");

  PlanarMap m;
  m.sigma_.resize(nd);
  m.sigma_inv_.resize(nd);
  m.origin_.resize(nd);
  m.twin_.assign(nd, kNoDart);
  m.edge_of_.assign(nd, kNoEdge);
  m.vertex_first_.resize(n);
  m.vertex_degree_.resize(n);

  for (int v = 0; v < n; ++v) {
    const int deg = static_cast<int>(rot[v].size());
    m.vertex_first_[v] = deg > 0 ? prefix[v] : kNoDart;
    m.vertex_degree_[v] = deg;
    for (int k = 0; k < deg; ++k) {
      const Dart d = prefix[v] + k;
      m.origin_[d] = v;
      m.sigma_[d] = prefix[v] + (k + 1) % deg;
    }
  }
  for (Dart d = 0; d < nd; ++d) m.sigma_inv_[m.sigma_[d]] = d;

  // Twin pairing: the i-th occurrence of v in rot[u] pairs with the i-th
  // occurrence of u in rot[v]; loop occurrences pair up consecutively.
  std::map<std::pair<VertexId, VertexId>, std::pair<std::vector<Dart>, std::vector<Dart>>> occ;
  for (int u = 0; u < n; ++u) {
    for (int k = 0; k < static_cast<int>(rot[u].size()); ++k) {
      const VertexId v = rot[u][k];
      const Dart d = prefix[u] + k;
      const VertexId lo = std::min(static_cast<VertexId>(u), v);
      const VertexId hi = std::max(static_cast<VertexId>(u), v);
      auto& slot = occ[{lo, hi}];
      (u <= v ? slot.first : slot.second).push_back(d);
    }
  }
  EdgeId ne = 0;
  for (auto& [key, slot] : occ) {
    auto& [a, b] = slot;
    if (key.first == key.second) {
      if (a.size() % 2 != 0) fail(Errc::inconsistent_rotation, "unmatched loop dart");
      for (size_t i = 0; i + 1 < a.size(); i += 2) {
        m.twin_[a[i]] = a[i + 1];
        m.twin_[a[i + 1]] = a[i];
        m.edge_of_[a[i]] = m.edge_of_[a[i + 1]] = ne;
        m.edge_dart_.push_back(a[i]);
        ++ne;
      }
    } else {
      if (a.size() != b.size()) {
        std::ostringstream os;
        os << "vertex " << key.first << " lists " << key.second << " " << a.size()
           << " time(s) but " << key.second << " lists " << key.first << " " << b.size()
           << " time(s)";
        fail(Errc::inconsistent_rotation, os.str());
      }
      for (size_t i = 0; i < a.size(); ++i) {
        m.twin_[a[i]] = b[i];
        m.twin_[b[i]] = a[i];
        m.edge_of_[a[i]] = m.edge_of_[b[i]] = ne;
        m.edge_dart_.push_back(a[i]);
        ++ne;
      }
    }
  }
  m.edge_count_ = ne;

  // Connectivity over darts (twin and sigma generate the map's dart group).
  if (nd == 0) fail(Errc::disconnected, "empty map");
  for (int v = 0; v < n; ++v)
    if (rot[v].empty()) fail(Errc::disconnected, "isolated vertex " + std::to_string(v));
  {
    std::vector<char> seen(nd, 0);
    std::vector<Dart> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      Dart d = stack.back();
      stack.pop_back();
      for (Dart e : {m.twin_[d], m.sigma_[d]})
        if (!seen[e]) {
          seen[e] = 1;
          stack.push_back(e);
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      fail(Errc::disconnected, "map is not connected");
  }

  m.compute_faces();

  // Euler relation is the genus-0 certificate.
  if (n - m.edge_count_ + m.face_count() != 2) {
    std::ostringstream os;
    os << "V-E+F = " << n << "-" << m.edge_count_ << "+" << m.face_count() << " != 2";
    fail(Errc::non_planar, os.str());
  }

  // Locate the outer face: an orbit visiting `outer` in the given order.
  if (outer.size() < 3) fail(Errc::outer_face_not_found, "outer cycle too short");
  const int olen = static_cast<int>(outer.size());
  FaceId found = kNoFace;
  for (Dart d = 0; d < nd && found == kNoFace; ++d) {
    if (m.origin_[d] != outer[0]) continue;
    if (m.face_degree_[m.face_of_[d]] != olen) continue;
    Dart cur = d;
    bool match = true;
    for (int i = 0; i < olen; ++i) {
      if (m.origin_[cur] != outer[i]) {
        match = false;
        break;
      }
      cur = m.face_next(cur);
    }
    if (match && cur == d) found = m.face_of_[d];
  }
  if (found == kNoFace) fail(Errc::outer_face_not_found, "no face walk matches the outer cycle");
  m.outer_face_ = found;
  m.outer_cycle_ = outer;
  return m;
}

PlanarMap PlanarMap::from_raw(std::vector<Dart> twin, std::vector<Dart> sigma,
                              std::vector<VertexId> origin) {
  PlanarMap m;
  const int nd = static_cast<int>(twin.size());
  m.twin_ = std::move(twin);
  m.sigma_ = std::move(sigma);
  m.origin_ = std::move(origin);
  m.sigma_inv_.assign(nd, kNoDart);
  for (Dart d = 0; d < nd; ++d) {
    Dart s = m.sigma_[d];
    if (s >= 0 && s < nd) m.sigma_inv_[s] = d;
  }
  VertexId n = 0;
  for (VertexId v : m.origin_) n = std::max(n, static_cast<VertexId>(v + 1));
  m.vertex_first_.assign(n, kNoDart);
  m.vertex_degree_.assign(n, 0);
  for (Dart d = 0; d < nd; ++d) {
    VertexId v = m.origin_[d];
    if (v >= 0 && v < n) {
      if (m.vertex_first_[v] == kNoDart) m.vertex_first_[v] = d;
      m.vertex_degree_[v]++;
    }
  }
  m.edge_of_.assign(nd, kNoEdge);
  m.edge_count_ = 0;
  for (Dart d = 0; d < nd; ++d) {
    Dart t = m.twin_[d];
    if (m.edge_of_[d] == kNoEdge && t >= 0 && t < nd && t != d && m.twin_[t] == d) {
      m.edge_of_[d] = m.edge_of_[t] = m.edge_count_++;
      m.edge_dart_.push_back(d);
    }
  }
  return m;
}

void PlanarMap::compute_faces() {
  const int nd = dart_count();
  face_of_.assign(nd, kNoFace);
  face_start_.clear();
  face_degree_.clear();
  for (Dart d = 0; d < nd; ++d) {
    if (face_of_[d] != kNoFace) continue;
    const FaceId f = static_cast<FaceId>(face_start_.size());
    face_start_.push_back(d);
    int deg = 0;
    Dart cur = d;
    do {
      face_of_[cur] = f;
      cur = face_next(cur);
      ++deg;
    } while (cur != d);
    face_degree_.push_back(deg);
  }
}

std::vector<Dart> PlanarMap::darts_of(VertexId v) const {
  std::vector<Dart> out;
  out.reserve(vertex_degree_[v]);
  Dart d0 = vertex_first_[v];
  if (d0 == kNoDart) return out;
  Dart d = d0;
  do {
    out.push_back(d);
    d = sigma_[d];
  } while (d != d0);
  return out;
}

std::vector<Dart> PlanarMap::face_orbit(FaceId f) const {
  std::vector<Dart> out;
  out.reserve(face_degree_[f]);
  Dart d0 = face_start_[f];
  Dart d = d0;
  do {
    out.push_back(d);
    d = face_next(d);
  } while (d != d0);
  return out;
}

std::vector<std::vector<Dart>> PlanarMap::face_orbits() const {
  std::vector<std::vector<Dart>> out(face_count());
  for (FaceId f = 0; f < face_count(); ++f) out[f] = face_orbit(f);
  return out;
}

std::vector<std::vector<VertexId>> PlanarMap::rotation_system() const {
  std::vector<std::vector<VertexId>> rot(vertex_count());
  for (VertexId v = 0; v < vertex_count(); ++v) {
    rot[v].reserve(degree(v));
    for (Dart d : darts_of(v)) rot[v].push_back(head(d));
  }
  return rot;
}

Dart PlanarMap::dart_between(VertexId u, VertexId v) const {
  Dart d0 = vertex_first_[u];
  if (d0 == kNoDart) return kNoDart;
  Dart d = d0;
  do {
    if (head(d) == v) return d;
    d = sigma_[d];
  } while (d != d0);
  return kNoDart;
}

FaceList faces(const PlanarMap& m) { return {m.face_orbits(), m.outer_face()}; }

Report PlanarMap::validate() const {
  Report rep;
  const int nd = dart_count();
  auto in_range = [&](Dart d) { return d >= 0 && d < nd; };

  bool perm_ok = true;
  for (Dart d = 0; d < nd; ++d) {
    if (!in_range(twin_[d])) {
      rep.add("twin-range", "twin out of range at dart " + std::to_string(d));
      perm_ok = false;
    } else if (twin_[d] == d) {
      rep.add("twin-fixed-point", "twin not fixed-point-free at dart " + std::to_string(d));
      perm_ok = false;
    } else if (twin_[twin_[d]] != d) {
      rep.add("twin-involution", "twin(twin(d)) != d at dart " + std::to_string(d));
      perm_ok = false;
    }
    if (!in_range(sigma_[d])) {
      rep.add("sigma-range", "sigma out of range at dart " + std::to_string(d));
      perm_ok = false;
    }
  }
  {
    std::vector<char> hit(nd, 0);
    for (Dart d = 0; d < nd && perm_ok; ++d) {
      if (in_range(sigma_[d])) {
        if (hit[sigma_[d]]) {
          rep.add("sigma-permutation", "sigma is not a permutation");
          perm_ok = false;
        }
        hit[sigma_[d]] = 1;
      }
    }
  }
  for (Dart d = 0; d < nd; ++d) {
    if (in_range(sigma_[d]) && origin_[sigma_[d]] != origin_[d]) {
      rep.add("origin-consistency",
              "sigma leaves the vertex orbit at dart " + std::to_string(d));
      perm_ok = false;
      break;
    }
  }
  if (!perm_ok || nd == 0) return rep;

  std::vector<char> seen(nd, 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Dart d = stack.back();
    stack.pop_back();
    for (Dart e : {twin_[d], sigma_[d]})
      if (!seen[e]) {
        seen[e] = 1;
        ++reached;
        stack.push_back(e);
      }
  }
  if (reached != nd) rep.add("connected", "map is not connected");

  // Count faces straight from the permutations (face_of_ may be stale for
  // raw maps).
  int nf = 0;
  {
    std::vector<char> done(nd, 0);
    for (Dart d = 0; d < nd; ++d) {
      if (done[d]) continue;
      ++nf;
      Dart cur = d;
      do {
        done[cur] = 1;
        cur = sigma_[twin_[cur]];
      } while (cur != d);
    }
  }
  const int euler = vertex_count() - edge_count_ + nf;
  if (euler != 2)
    rep.add("euler", "V-E+F = " + std::to_string(vertex_count()) + "-" +
                         std::to_string(edge_count_) + "+" + std::to_string(nf) +
                         " = " + std::to_string(euler) + " (genus > 0)");
  return rep;
}

Report validate(const PlanarMap& m) { return m.validate(); }

}  // namespace fivec
