#include "fivec/generator.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace fivec {

RotationSystem onion(int rings) {
  if (rings < 0) fail(Errc::generation_failed, "negative ring count");
  const int k = rings;
  RotationSystem rs;
  rs.outer = {0, 1, 2, 3, 4};
  auto ring = [](int r, int i) { return 5 * r + mod5(i); };
  const VertexId hub = 5 * (k + 1);

  if (k == 0) {
    for (int i = 0; i < 5; ++i) rs.rot.push_back({ring(0, i + 1), hub, ring(0, i - 1)});
    rs.rot.push_back({0, 1, 2, 3, 4});
    return rs;
  }
  for (int i = 0; i < 5; ++i)
    rs.rot.push_back({ring(0, i + 1), ring(1, i), ring(1, i - 1), ring(0, i - 1)});
  for (int r = 1; r <= k; ++r) {
    for (int i = 0; i < 5; ++i) {
      std::vector<VertexId> l{ring(r - 1, i), ring(r - 1, i + 1), ring(r, i + 1)};
      if (r < k) {
        l.push_back(ring(r + 1, i));
        l.push_back(ring(r + 1, i - 1));
      } else {
        l.push_back(hub);
      }
      l.push_back(ring(r, i - 1));
      rs.rot.push_back(std::move(l));
    }
  }
  rs.rot.push_back({ring(k, 0), ring(k, 1), ring(k, 2), ring(k, 3), ring(k, 4)});
  return rs;
}

namespace {

// Mutable rotation-list triangulation for the growth moves. States are
// always valid 5c-triangulations; every move is validated locally before
// being kept (only cycles through the touched vertices can newly violate).
class MutableTri {
public:
  MutableTri(const RotationSystem& rs) : rot(rs.rot), pos(rs.rot.size()) {
    std::copy(rs.outer.begin(), rs.outer.end(), outer.begin());
    is_outer.assign(rot.size(), 0);
    for (VertexId v : outer) is_outer[v] = 1;
    for (VertexId v = 0; v < n(); ++v) reindex(v);
  }

  int n() const { return static_cast<int>(rot.size()); }
  int degree(VertexId v) const { return static_cast<int>(rot[v].size()); }
  bool adjacent(VertexId u, VertexId v) const { return pos[u].count(v) > 0; }
  int index_of(VertexId u, VertexId v) const { return pos[u].at(v); }
  VertexId at(VertexId v, int k) const { return rot[v][mod_deg(v, k)]; }

  RotationSystem snapshot() const {
    RotationSystem rs;
    rs.rot = rot;
    rs.outer.assign(outer.begin(), outer.end());
    return rs;
  }

  // (p,q,r) bounds a face iff the face-walk relation holds at all three
  // corners (the outer pentagon can never satisfy all three).
  bool is_face(VertexId p, VertexId q, VertexId r) const {
    return follows(q, p, r) && follows(r, q, p) && follows(p, r, q);
  }
  bool is_face_any(VertexId p, VertexId q, VertexId r) const {
    return is_face(p, q, r) || is_face(p, r, q);
  }

  int outer_index(VertexId v) const {
    for (int i = 0; i < 5; ++i)
      if (outer[i] == v) return i;
    return -1;
  }

  /// Fan insertion: new degree-5 vertex replacing the three faces spanned by
  /// sectors j, j+1, j+2 at vertex a. Returns false (state unchanged) when
  /// the move is invalid or breaks the 5c property.
  bool insert_fan(VertexId a, int j) {
    const int deg = degree(a);
    if (deg < 4) return false;
    int oi = outer_index(a);
    if (oi >= 0) {
      // Sectors at an outer vertex exclude the outer corner, which sits
      // between the neighbors v_{i-1} and v_{i+1}.
      int wrap = index_of(a, outer[mod5(oi - 1)]);
      for (int s = j; s <= j + 2; ++s)
        if (mod_deg(a, s) == wrap) return false;
    }
    VertexId p0 = at(a, j), p1 = at(a, j + 1), p2 = at(a, j + 2), p3 = at(a, j + 3);
    if (p0 == p3) return false;  // degree-4 fan wrapping onto itself
    // Inner vertices must keep degree >= 5.
    if (oi < 0 && deg - 1 < 5) return false;

    const VertexId z = n();
    rot.push_back({a, p0, p1, p2, p3});
    pos.push_back({});
    is_outer.push_back(0);

    auto& ra = rot[a];
    {
      int ja = index_of(a, p0);
      // remove p1, p2 and put z after p0
      std::vector<VertexId> nl;
      nl.reserve(deg - 1);
      for (int s = 0; s < deg; ++s) {
        VertexId w = at(a, ja + s);
        if (w == p1 || w == p2) continue;
        nl.push_back(w);
        if (w == p0) nl.push_back(z);
      }
      ra = std::move(nl);
    }
    insert_before(p0, a, z);  // [.., p1, z, a, ..]
    insert_after(p3, a, z);   // [.., a, z, p2, ..]
    replace(p1, a, z);
    replace(p2, a, z);
    for (VertexId v : {a, p0, p1, p2, p3}) reindex(v);
    reindex(z);

    if (local_ok_around(z)) return true;
    undo_fan(a, j, p0, p1, p2, p3);
    return false;
  }

  /// Diagonal flip of the inner edge {a,b}. Returns false when invalid.
  bool flip(VertexId a, VertexId b) {
    if (is_outer[a] && is_outer[b]) return false;
    if (!adjacent(a, b)) return false;
    VertexId u = at(a, index_of(a, b) + 1);  // apex right of a->b
    VertexId w = at(b, index_of(b, a) + 1);  // apex right of b->a
    if (u == w || adjacent(u, w)) return false;
    if (is_outer[u] && is_outer[w]) return false;  // would create a chord
    if (!is_outer[a] && degree(a) <= 5) return false;
    if (!is_outer[b] && degree(b) <= 5) return false;
    if (!is_face(b, a, u) && !is_face(a, b, u)) return false;  // sanity

    apply_flip(a, b, u, w);
    if (local_ok_flip(u, w)) return true;
    apply_flip(u, w, b, a);  // flip the diagonal back
    return false;
  }

  std::vector<std::vector<VertexId>> rot;
  std::array<VertexId, 5> outer;
  std::vector<char> is_outer;

private:
  std::vector<std::unordered_map<VertexId, int>> pos;

  int mod_deg(VertexId v, int k) const {
    int d = degree(v);
    return ((k % d) + d) % d;
  }
  bool follows(VertexId q, VertexId p, VertexId r) const {
    auto it = pos[q].find(p);
    if (it == pos[q].end() || !adjacent(q, r)) return false;
    return at(q, it->second + 1) == r;
  }
  void reindex(VertexId v) {
    pos[v].clear();
    for (int k = 0; k < degree(v); ++k) pos[v][rot[v][k]] = k;
  }
  void insert_before(VertexId v, VertexId anchor, VertexId w) {
    rot[v].insert(rot[v].begin() + index_of(v, anchor), w);
  }
  void insert_after(VertexId v, VertexId anchor, VertexId w) {
    rot[v].insert(rot[v].begin() + index_of(v, anchor) + 1, w);
  }
  void replace(VertexId v, VertexId from, VertexId to) { rot[v][index_of(v, from)] = to; }
  void erase(VertexId v, VertexId w) { rot[v].erase(rot[v].begin() + index_of(v, w)); }

  // Replace the diagonal {x,y} of the quad (x,p,y,q) by {p,q}, where p is
  // the apex right of x->y and q the apex right of y->x. The new rotations
  // read [.., x, q, y, ..] at p and [.., y, p, x, ..] at q.
  void apply_flip(VertexId x, VertexId y, VertexId p, VertexId q) {
    erase(x, y);
    erase(y, x);
    insert_after(p, x, q);
    insert_before(q, x, p);
    for (VertexId v : {x, y, p, q}) reindex(v);
  }

  void undo_fan(VertexId a, int /*j*/, VertexId p0, VertexId p1, VertexId p2, VertexId p3) {
    const VertexId z = n() - 1;
    erase(p0, z);
    erase(p3, z);
    replace(p1, z, a);
    replace(p2, z, a);
    {
      // restore [.., p0, p1, p2, p3, ..] at a
      erase(a, z);
      int ja = index_of(a, p0);
      rot[a].insert(rot[a].begin() + ja + 1, p2);
      rot[a].insert(rot[a].begin() + ja + 1, p1);
    }
    rot.pop_back();
    pos.pop_back();
    is_outer.pop_back();
    for (VertexId v : {a, p0, p1, p2, p3}) reindex(v);
  }

  // New short cycles after a fan insertion all pass through z.
  bool local_ok_around(VertexId z) {
    const auto& nz = rot[z];
    const int d = degree(z);
    auto ring_consecutive = [&](VertexId x, VertexId y) {
      int ix = index_of(z, x), iy = index_of(z, y);
      return (ix + 1) % d == iy || (iy + 1) % d == ix;
    };
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        VertexId x = nz[i], y = nz[j];
        bool consec = ring_consecutive(x, y);
        if (adjacent(x, y) && !consec) return false;  // separating triangle (z,x,y)
        // 4-cycles (z, x, c, y) with c a common neighbor of x and y
        const auto& small = degree(x) <= degree(y) ? rot[x] : rot[y];
        VertexId other = degree(x) <= degree(y) ? y : x;
        for (VertexId c : small) {
          if (c == z || c == other || !adjacent(other, c)) continue;
          if (adjacent(z, c)) continue;  // treated by triangle cases at (x,c),(y,c)
          if (!consec) return false;      // no chord available: enclosed interior
          if (!is_face_any(x, c, y)) return false;
        }
      }
    }
    return true;
  }

  // New short cycles after a flip all contain the new edge {u,w}.
  bool local_ok_flip(VertexId u, VertexId w) {
    for (VertexId y : rot[u]) {
      if (y == w || !adjacent(w, y)) continue;
      if (!is_face_any(u, w, y)) return false;  // separating triangle (u,w,y)
    }
    for (VertexId p : rot[w]) {
      if (p == u) continue;
      for (VertexId q : rot[u]) {
        if (q == w || q == p || !adjacent(p, q)) continue;
        // 4-cycle u-w-p-q; empty interior needs a splitting diagonal
        bool ok = false;
        if (adjacent(u, p) && is_face_any(u, w, p) && is_face_any(u, p, q)) ok = true;
        if (!ok && adjacent(w, q) && is_face_any(w, p, q) && is_face_any(w, q, u)) ok = true;
        if (!ok) return false;
      }
    }
    return true;
  }
};

}  // namespace

FiveTriangulation generate_random_5c(int n_target, std::uint64_t seed, int flips) {
  if (n_target < 6) fail(Errc::generation_failed, "n_target must be at least 6");
  std::mt19937_64 rng(seed);

  int rings = n_target >= 11 ? (n_target - 6) / 5 : 0;
  MutableTri tri(onion(rings));

  long budget = 200L * (n_target + flips + 1);
  auto spend = [&]() {
    if (--budget < 0)
      fail(Errc::generation_failed, "move budget exhausted at n=" + std::to_string(tri.n()));
  };

  while (tri.n() < n_target) {
    // Random fan attempts; every valid fan has three usable sectors.
    bool grown = false;
    const int tries = 50 + 20 * tri.n();
    for (int t = 0; t < tries && !grown; ++t) {
      spend();
      VertexId a = static_cast<VertexId>(rng() % tri.n());
      if (tri.degree(a) < 4) continue;
      int j = static_cast<int>(rng() % tri.degree(a));
      grown = tri.insert_fan(a, j);
    }
    if (!grown)
      fail(Errc::generation_failed,
           "no valid insertion at n=" + std::to_string(tri.n()) +
               " (sizes 7..10 admit no 5c-triangulation)");
  }

  for (int t = 0; t < flips; ++t) {
    spend();
    VertexId a = static_cast<VertexId>(rng() % tri.n());
    if (tri.degree(a) == 0) continue;
    VertexId b = tri.at(a, static_cast<int>(rng() % tri.degree(a)));
    tri.flip(a, b);
  }

  RotationSystem rs = tri.snapshot();
  PlanarMap m = PlanarMap::build_from_rotation_system(rs.rot, rs.outer);
  FiveTriangulation t = check_five_triangulation(m);
  if (t.n() <= 2048) {
    FiveCVerdict v = is_5c(t);
    if (!v.ok) fail(Errc::generation_failed, "generator produced a non-5c instance: " + v.reason);
  }
  return t;
}

}  // namespace fivec
