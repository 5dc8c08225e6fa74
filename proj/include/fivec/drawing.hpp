#pragma once

// 5c-barycentric drawing: exact barycentric weights over a regular pentagon
// frame, sign predicates in Q(sqrt5), planarity certification, half-plane /
// sector checks and resolution metrics. Floating point appears only in
// emitted coordinates and reported distances, never in a sign decision.

#include <array>
#include <memory>
#include <optional>
#include <string>

#include "fivec/regions.hpp"

namespace fivec {

/// Anchors V_k = (cos t_k, sin t_k), t_k = 234 - 72k degrees (0-based k):
/// v1..v5 clockwise on the unit circle with {v1,v5} as the bottom edge.
struct PentagonFrame {
  static std::array<double, 2> anchor(int k);
};

/// Sign of a + b*sqrt(5), exactly.
int quad5_sign(__int128 a, __int128 b);

struct Drawing {
  std::shared_ptr<const FiveTriangulation> base;
  WeightMode mode;
  std::vector<std::array<long long, 5>> w;  // exact numerators, common denominator
  long long den;
  std::vector<std::array<double, 2>> xy;  // circumradius-1 evaluation

  std::array<long long, 5> delta(VertexId u, VertexId v) const {
    std::array<long long, 5> d;
    for (int k = 0; k < 5; ++k) d[k] = w[u][k] - w[v][k];
    return d;
  }
};

Drawing place(const WeightTable& wt, std::shared_ptr<const FiveTriangulation> t);

/// Exact orientation sign of the barycentric triple (p,q,r): the sign of
/// cross(q-p, r-p) after factoring out the common positive sin(72deg).
/// Geometrically clockwise triples give -1.
int orient3(const std::array<long long, 5>& p, const std::array<long long, 5>& q,
            const std::array<long long, 5>& r);

/// Sign of dot(V_i, sum_k delta_k V_k), exactly.
int dot_sign(int i, const std::array<long long, 5>& delta);

/// |sum_k delta_k V_k|, evaluated from the exact Q(sqrt5) square.
double modulus(const std::array<long long, 5>& delta);

struct PlanarityVerdict {
  bool ok = true;
  FaceId bad_face = kNoFace;
};

/// Every inner face, read in its clockwise combinatorial order, must give
/// the same strict orient3 sign as the anchor triangle (V1,V2,V3).
PlanarityVerdict certify_planar(const Drawing& d, const FiveTriangulation& t);

/// Half-plane property: for u in R_i(v), u != v, the exact sign of
/// V_i . (u-v) is strictly negative. Region membership comes from the
/// naive flood.
/// Vertex-counting drawings admit exact boundary ties (the strict
/// inequality fails there while the closed one holds); such callers pass
/// allow_boundary to accept sign 0.
Report check_halfplane(const Drawing& d, const WoodTrees& tr, bool allow_boundary = false);

/// Sector property, via its two half-plane tests: each colored arc (v,u)
/// of color i satisfies V_{i-2}.(u-v) < 0 and V_{i+2}.(u-v) < 0, i.e. it
/// points within 3*pi/10 of V_i (same boundary caveat as check_halfplane).
Report check_sectors(const Drawing& d, const WoodColoring& w, bool allow_boundary = false);

struct ResolutionMetrics {
  double min_distance = 0;       // over all vertex pairs
  double normalized = 0;         // min * (2n-7) or min * (n-1); 0 in weighted mode
  double d5 = 0, d5_prime = 0;   // smallest-modulus constants, recomputed
  bool bound_applies = false;    // faces/vertices mode
  bool meets_bound = false;      // normalized >= bound - 1e-9
  VertexId arg_u = kNoVertex, arg_v = kNoVertex;
};

ResolutionMetrics resolution(const Drawing& d);

/// Smallest modulus constants from their defining integer vectors.
double resolution_d5();
double resolution_d5_prime();

/// Exact cyclic-shift equality of weight vectors under an order-5 map
/// automorphism rho with rho(v_i) = v_{i+1}. Throws NoAutomorphismProvided
/// when rho is absent.
bool check_rotational_symmetry(const Drawing& d,
                               const std::optional<std::vector<VertexId>>& rho);

/// The order-5 automorphism mapping each outer v_i to v_{i+1}, when the map
/// admits one (propagated over darts from the outer contour).
std::optional<std::vector<VertexId>> find_rotation_automorphism(const FiveTriangulation& t);

/// Deterministic SVG (unit circle scaled by `scale` pixels); the wood, when
/// given, is overlaid with one stroke color per tree.
std::string drawing_to_svg(const Drawing& d, const WoodColoring* wood, double scale);

std::string drawing_to_json(const Drawing& d);

}  // namespace fivec
