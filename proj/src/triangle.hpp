#pragma once

#include <array>
#include <optional>

#include "akmove/diagram.hpp"

namespace akmove::detail {

// darts[i] runs from corner[i] to corner[i+1] along the face boundary.
struct Triangle {
  std::array<Dart, 3> darts;
  std::array<int, 3> corner;
  std::array<int, 3> start_pos;   // slot of darts[i] at corner[i]
  std::array<int, 3> arrive_pos;  // slot of darts[i] at corner[i+1]
};

std::optional<Triangle> triangle_of_face(const Diagram& d, int face);
// Throws Error(Site) unless exactly one triangular face is bounded by the arcs.
Triangle find_triangle(const Diagram& d, const std::array<int, 3>& arcs);
// No strand is over (or under) at both of its corners.
bool is_cyclic(const Triangle& t);
// Moves every strand across the opposite corner; crossing indices and arc ids
// are preserved, and the same arcs bound the new triangle.
Diagram flip_triangle(const Diagram& d, const Triangle& t);

}  // namespace akmove::detail
