#pragma once

#include <array>
#include <string>
#include <vector>

#include "akmove/diagram.hpp"

namespace akmove {

// A_1: over and under exchanged at c.
Diagram crossing_change(const Diagram& d, int c);

// A_2: the three arcs bound a triangular face whose corners alternate
// cyclically (each strand over at one corner, under at the other). The same
// arcs bound the triangle of the result, so the move is undone by applying it
// again with the same arcs.
Diagram delta_move(const Diagram& d, const std::array<int, 3>& arcs);

// Clasp-pass site: `clasp` are the two arcs of a clasp bigon; `band` are the
// two prongs of a finger that crosses both clasp strands next to one corner
// of the clasp, going over one clasp strand and under the other. band[0] is
// the prong adjacent to the clasp.
struct ClaspSite {
  std::array<int, 2> clasp{};
  std::array<int, 2> band{};
};

struct ClaspResult {
  Diagram diagram;
  // Applying clasp_pass at this site restores the input.
  ClaspSite image;
};

// Pushes the clasp through the band.
ClaspResult clasp_pass(const Diagram& d, const ClaspSite& site);
// Every valid clasp-pass site of d, for tests and random batteries.
std::vector<ClaspSite> clasp_sites(const Diagram& d);

}  // namespace akmove
