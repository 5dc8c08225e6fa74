#pragma once

// Existence pipeline: 5c-triangulation -> regular orientation of the
// quad-augmentation diamond -> orientation B of G-diamond -> spanning tree
// and face pairing -> 5c-orientation of G+.

#include <memory>

#include "fivec/structures.hpp"

namespace fivec {

struct QuadAugmentation {
  std::shared_ptr<const FiveTriangulation> base;
  PlanarMap H;   // G plus v0 joined to v1..v4; outer 4-gon (v0,v4,v5,v1)
  VertexId v0;

  // H-diamond incidence (abstract; the flow does not need an embedding):
  // one face node per inner face of H, each carrying its 3 corners.
  std::vector<FaceId> hface;                        // dense -> H face id
  std::vector<std::array<VertexId, 3>> hface_corners;
  std::vector<int> gface_to_hidx;                   // G face id -> dense idx (-1 outer)
  std::vector<char> h_is_outer;                     // per H vertex

  int hdiamond_edge_count() const { return 3 * static_cast<int>(hface.size()); }
};

QuadAugmentation augment(std::shared_ptr<const FiveTriangulation> t);

/// Per H-diamond edge 3*hidx+k: true when oriented out of the face node.
/// Computed by unit-capacity max-flow; throws Infeasible when H admits no
/// regular orientation (exactly the non-5c case).
struct RegularOrientation {
  std::vector<char> out_of_face;
};

RegularOrientation regular_orientation(const QuadAugmentation& q);

struct OrientationB {
  std::shared_ptr<const FiveTriangulation> base;
  PlanarMap Gd;  // G-diamond: face-vertices joined to face corners
  std::vector<VertexId> facev_of_gface;  // G face -> Gd vertex (-1 outer)
  std::vector<FaceId> gface_of_facev;    // Gd vertex -> G face (-1 originals)
  std::array<VertexId, 5> b;             // b_i as Gd vertices
  std::vector<VertexId> tail;            // per Gd edge
  EdgeId estar = kNoEdge;
  VertexId vstar = kNoVertex;
};

OrientationB orientation_b(const QuadAugmentation& q, const RegularOrientation& a);

struct TreePairing {
  std::vector<EdgeId> parent_edge;  // per Gd vertex; kNoEdge at the root
  std::vector<char> in_tree;        // per Gd edge
  std::vector<EdgeId> pair_edge;    // per Gd face: the non-tree edge e with phi(e)=face
  std::vector<VertexId> t_s;        // per Gd face: terminal vertex of that edge
};

TreePairing spanning_tree(const OrientationB& b);

FiveCOrientation assemble(const OrientationB& b, const TreePairing& tp,
                          std::shared_ptr<const Completion> c);

/// Full pipeline; throws Not5c exactly when is_5c rejects (the error message
/// carries the failing stage and, when available, a witness cycle).
FiveCOrientation construct_5c(std::shared_ptr<const FiveTriangulation> t);

}  // namespace fivec
