#pragma once

// Permutation-encoded embedded planar multigraph (combinatorial map).
//
// Conventions used throughout the project:
//  * sigma(d) is the NEXT dart in CLOCKWISE order around origin(d);
//  * the walk around a face is face_next(d) = sigma(twin(d)), so every face
//    orbit keeps its face on the LEFT of each dart; inner faces are traversed
//    counterclockwise and the outer face clockwise;
//  * the corner written corner(d) is the sector swept clockwise from d to
//    sigma(d), i.e. the face on the right of d.

#include <array>
#include <vector>

#include "fivec/core.hpp"

namespace fivec {

struct RotationSystem {
  std::vector<std::vector<VertexId>> rot;  // clockwise neighbor lists
  std::vector<VertexId> outer;             // outer cycle, clockwise
};

class PlanarMap {
public:
  PlanarMap() = default;  // empty map; populate via the named constructors

  /// Builds a map realizing the given clockwise rotations, with the face
  /// matching `outer` (walked in the given order) designated as outer.
  /// Throws InconsistentRotation / OuterFaceNotFound / Disconnected /
  /// NonPlanar.
  static PlanarMap build_from_rotation_system(const std::vector<std::vector<VertexId>>& rot,
                                              const std::vector<VertexId>& outer);

  /// Raw constructor for validator tests; performs no checking and computes
  /// no face structure. Use validate() on the result.
  static PlanarMap from_raw(std::vector<Dart> twin, std::vector<Dart> sigma,
                            std::vector<VertexId> origin);

  int vertex_count() const { return static_cast<int>(vertex_first_.size()); }
  int dart_count() const { return static_cast<int>(sigma_.size()); }
  int edge_count() const { return edge_count_; }
  int face_count() const { return static_cast<int>(face_start_.size()); }
  int inner_face_count() const { return face_count() - 1; }

  Dart twin(Dart d) const { return twin_[d]; }
  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart face_next(Dart d) const { return sigma_[twin_[d]]; }
  VertexId origin(Dart d) const { return origin_[d]; }
  VertexId head(Dart d) const { return origin_[twin_[d]]; }
  EdgeId edge_of(Dart d) const { return edge_of_[d]; }
  Dart dart_of_edge(EdgeId e) const { return edge_dart_[e]; }

  int degree(VertexId v) const { return vertex_degree_[v]; }
  Dart first_dart(VertexId v) const { return vertex_first_[v]; }
  std::vector<Dart> darts_of(VertexId v) const;

  FaceId face_of(Dart d) const { return face_of_[d]; }
  FaceId outer_face() const { return outer_face_; }
  bool is_outer_face(FaceId f) const { return f == outer_face_; }
  int face_degree(FaceId f) const { return face_degree_[f]; }
  Dart face_start(FaceId f) const { return face_start_[f]; }
  std::vector<Dart> face_orbit(FaceId f) const;

  /// All face orbits as dart cycles; index = face id.
  std::vector<std::vector<Dart>> face_orbits() const;

  /// The outer cycle as supplied at build time.
  const std::vector<VertexId>& outer_cycle() const { return outer_cycle_; }

  /// Reconstructs the clockwise neighbor lists (each list starts at an
  /// arbitrary cyclic position).
  std::vector<std::vector<VertexId>> rotation_system() const;

  /// First dart from u whose head is v, or kNoDart.
  Dart dart_between(VertexId u, VertexId v) const;

  /// Checks every structural invariant and reports violations instead of
  /// throwing; usable on maps produced by from_raw.
  Report validate() const;

private:
  void compute_faces();  // requires twin/sigma/origin consistent

  std::vector<Dart> twin_;
  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<VertexId> origin_;
  std::vector<EdgeId> edge_of_;
  std::vector<Dart> edge_dart_;  // one representative dart per edge
  std::vector<Dart> vertex_first_;
  std::vector<int> vertex_degree_;
  std::vector<FaceId> face_of_;
  std::vector<Dart> face_start_;
  std::vector<int> face_degree_;
  std::vector<VertexId> outer_cycle_;
  FaceId outer_face_ = kNoFace;
  int edge_count_ = 0;

  friend class PlanarMapBuilder;
};

/// Spec operation faces(m): the orbits with the outer one flagged by index.
struct FaceList {
  std::vector<std::vector<Dart>> orbits;
  FaceId outer;
};
FaceList faces(const PlanarMap& m);

Report validate(const PlanarMap& m);

}  // namespace fivec
