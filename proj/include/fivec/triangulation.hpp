#pragma once

// 5-triangulations (triangulations of the pentagon), the 5c predicate, the
// primal-dual completion G+, the corner graph, and ingestion from
// 5-connected triangulations.

#include <array>
#include <memory>
#include <optional>

#include "fivec/planar_map.hpp"

namespace fivec {

struct FiveTriangulation {
  PlanarMap map;
  std::array<VertexId, 5> outer;  // v1..v5, clockwise
  std::vector<char> is_outer;     // per vertex

  int n() const { return map.vertex_count(); }
  int inner_faces() const { return map.inner_face_count(); }
  /// Index 0..4 of an outer vertex, or -1.
  int outer_index(VertexId v) const {
    for (int i = 0; i < 5; ++i)
      if (outer[i] == v) return i;
    return -1;
  }
  /// The dart v_{i+1} -> v_{i+2}... walking the outer orbit; outer_dart(i)
  /// is the contour dart from outer[i] to outer[i+1].
  Dart outer_dart(int i) const;
};

/// Validates the face structure; uses the map's designated outer cycle.
FiveTriangulation check_five_triangulation(const PlanarMap& m);
FiveTriangulation check_five_triangulation(const PlanarMap& m,
                                           const std::array<VertexId, 5>& outer);

struct FiveCVerdict {
  bool ok = false;
  std::vector<VertexId> witness_cycle;  // nonempty on failure
  VertexId enclosed = kNoVertex;        // kNoVertex when the failure is structural
  std::string reason;
};

/// True iff every cycle of length <= 4 encloses no vertex. Loops, parallel
/// edges and inner edges joining two outer vertices are rejected as well
/// (they preclude 5c-structures even when no vertex is enclosed).
FiveCVerdict is_5c(const FiveTriangulation& t);

/// Primal-dual completion G+ with vertex roles and back-references.
struct Completion {
  enum class Role : std::uint8_t { primal, edge, dual };

  std::shared_ptr<const FiveTriangulation> base;
  PlanarMap map;  // G+

  std::vector<Role> role;          // per G+ vertex
  std::vector<VertexId> primal_of; // G+ vertex -> G vertex, or -1
  std::vector<EdgeId> gedge_of;    // G+ vertex -> G edge, or -1
  std::vector<FaceId> gface_of;    // G+ vertex -> G inner face, or -1

  std::vector<VertexId> x_of_edge;    // G edge -> edge-vertex
  std::vector<VertexId> dual_of_face; // G face -> dual vertex (-1 for outer)
  std::array<VertexId, 5> outer_x;    // x_i on outer edge {v_i, v_{i+1}}
  std::array<VertexId, 5> b;          // b_i = dual of the face on that edge

  // G+ edge ids addressed from the base triangulation:
  std::vector<EdgeId> half_edge;  // per G dart d: {origin(d), x(edge(d))}
  std::vector<EdgeId> dual_link;  // per G dart d with inner face_of(d):
                                  // {dual(face_of(d)), x(edge(d))}; else -1
  std::array<EdgeId, 5> outer_link;  // {x_i, b_i}

  std::vector<char> edge_is_inner;  // per G+ edge

  int inner_edge_count = 0;

  VertexId primal(VertexId v) const { return v; }  // primal ids coincide
};

Completion completion(std::shared_ptr<const FiveTriangulation> t);

/// Directed graph on the inner corners of G; a corner is identified with the
/// G dart d whose clockwise sector it is (the face right of d must be inner).
struct CornerGraph {
  enum class StepKind : std::uint8_t { around_vertex, around_face };
  struct Arc {
    Dart from;       // corner id = dart id
    Dart to;
    StepKind kind;
    Dart crossing;   // vertex step: the dart separating the corners;
                     // face step: the G dart of the crossed edge (on the face orbit)
  };

  std::shared_ptr<const FiveTriangulation> base;
  std::vector<char> is_inner_corner;  // per dart
  std::vector<Arc> arcs;
  int inner_corner_count = 0;
};

CornerGraph corner_graph(std::shared_ptr<const FiveTriangulation> t);

/// Deletes a degree-5 vertex from a sphere triangulation; its link becomes
/// the outer pentagon (v1 = smallest link vertex id; ids above the apex
/// shift down by one). Throws ApexDegreeNot5 / ResultNot5c.
FiveTriangulation from_five_connected(const PlanarMap& m, VertexId apex);

}  // namespace fivec
