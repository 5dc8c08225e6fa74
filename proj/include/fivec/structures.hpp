#pragma once

// The three incarnations of 5c-structures (orientation / corner labeling /
// wood), their validators, the bijections phi, theta and the straight-path
// map psi, and canonicalization to the minimal orientation.
//
// Labels and colors are stored 0..4 internally and rendered 1..5 externally.

#include <memory>
#include <optional>

#include "fivec/triangulation.hpp"

namespace fivec {

/// Orientation of the inner edges of G+; tail[e] is the source vertex of
/// G+ edge e (kNoVertex on the ten outer contour edges).
struct FiveCOrientation {
  std::shared_ptr<const Completion> carrier;
  std::vector<VertexId> tail;

  bool edge_points_to(EdgeId e, VertexId v) const {
    return tail[e] != kNoVertex && tail[e] != v;
  }
  std::vector<int> out_degrees() const;
};

/// Inner-corner labeling; corner id = G dart id, values 0..4 (meaning 1..5),
/// -1 on outer corners.
struct CornerLabeling {
  std::shared_ptr<const FiveTriangulation> carrier;
  std::vector<std::int8_t> label;
};

/// Partial coloring of the inner arcs of G; arc id = G dart id, values 0..4
/// (colors 1..5) or -1 for "no color".
struct WoodColoring {
  std::shared_ptr<const FiveTriangulation> carrier;
  std::vector<std::int8_t> color;
};

Report validate_orientation(const FiveCOrientation& o);
Report validate_labeling(const CornerLabeling& l);
Report validate_wood(const WoodColoring& w);

/// Def. phi: labeling -> orientation (throws InvalidLabeling).
FiveCOrientation phi(const CornerLabeling& l, std::shared_ptr<const Completion> gp);

/// Label propagation over the corner graph (throws PropagationConflict on
/// invalid input; guaranteed conflict-free on valid 5c-orientations).
CornerLabeling phi_inv(const FiveCOrientation& o);

/// Local rule theta: labeling -> wood (throws InvalidLabeling).
WoodColoring theta(const CornerLabeling& l);

/// Inverse of theta (throws InvalidWood).
CornerLabeling theta_inv(const WoodColoring& w);

/// The straight-path rule, applied directly to the orientation; equals
/// theta(phi_inv(o)) on valid input (throws NonterminatingPath otherwise).
WoodColoring psi(const FiveCOrientation& o);

/// The unique 5c-orientation with no counterclockwise directed cycle,
/// computed via dual integer potentials (0/1-BFS from the outer face).
FiveCOrientation minimize(const FiveCOrientation& o);

/// True iff the boundary of some inner face of G+ is a counterclockwise
/// directed cycle (a necessary sign of non-minimality).
bool has_ccw_face_cycle(const FiveCOrientation& o);

// ---- structure JSON (round-trip stable) ----
std::string orientation_to_json(const FiveCOrientation& o);
std::string labeling_to_json(const CornerLabeling& l);
std::string wood_to_json(const WoodColoring& w);
FiveCOrientation orientation_from_json(const std::string& text,
                                       std::shared_ptr<const Completion> gp);
CornerLabeling labeling_from_json(const std::string& text,
                                  std::shared_ptr<const FiveTriangulation> t);
WoodColoring wood_from_json(const std::string& text,
                            std::shared_ptr<const FiveTriangulation> t);

}  // namespace fivec
