#pragma once

#include <array>
#include <utility>
#include <vector>

#include "akmove/diagram.hpp"

namespace akmove {

enum class RKind { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

struct ReidemeisterSite {
  RKind kind = RKind::R1Plus;
  // R1+: kink of the given sign on `side` of `arc`.
  // R2+: a finger of `arc` pushed across `arc2`; the darts (arc, side) and
  //      (arc2, side2) must face the same region.
  int arc = -1;
  Side side = Side::Left;
  int sign = 1;
  int arc2 = -1;
  Side side2 = Side::Left;
  bool first_over = true;
  // R1-: the kinked crossing. R2-: the two corners of the bigon.
  int crossing = -1;
  int crossing2 = -1;
  // R3: the arcs bounding the triangle.
  std::array<int, 3> arcs{};
};

Diagram reidemeister(const Diagram& d, const ReidemeisterSite& site);

Diagram r1_add(const Diagram& d, int arc, Side side, int sign);
Diagram r1_remove(const Diagram& d, int crossing);
Diagram r2_add(const Diagram& d, int arc1, Side side1, int arc2, Side side2, bool first_over);
Diagram r2_remove(const Diagram& d, int c1, int c2);
Diagram r3(const Diagram& d, const std::array<int, 3>& arcs);

// Candidate sites, for tests and random walks.
std::vector<int> r1_remove_sites(const Diagram& d);
std::vector<std::pair<int, int>> r2_remove_sites(const Diagram& d);
// Triangles with the R3 pattern (delta = false) or the cyclic one (delta = true).
std::vector<std::array<int, 3>> triangle_sites(const Diagram& d, bool delta);

// Greedy R1-/R2- reduction until neither applies.
Diagram simplify(const Diagram& d);

}  // namespace akmove
