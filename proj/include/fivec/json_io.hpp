#pragma once

// Rotation-system JSON, the normative interchange format:
//   {"vertices": N, "rot": [[neighbor ids clockwise] per vertex],
//    "outer": [5 vertex ids clockwise]}
// Vertex ids are 0-based; outer[0] is v1.

#include <string>

#include "fivec/planar_map.hpp"

namespace fivec {

RotationSystem rotation_from_json(const std::string& text);
RotationSystem rotation_from_file(const std::string& path);
std::string rotation_to_json(const RotationSystem& rs);
void rotation_to_file(const RotationSystem& rs, const std::string& path);

RotationSystem rotation_of(const PlanarMap& m);

}  // namespace fivec
