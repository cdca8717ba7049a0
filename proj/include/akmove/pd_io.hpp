#pragma once

#include <string>
#include <string_view>

#include "akmove/diagram.hpp"

namespace akmove {

// PD text:
//   components=<n> free_loops=<m> [flip=a,b,...]   (optional header)
//   X(a,b,c,d)   crossing, counterclockwise from the incoming under-arc
//   V(a,b,...)   graph vertex, counterclockwise
//   O(a)         crossingless loop carrying arc a
//   # comment to end of line
// Strands that never pass under a crossing get a default orientation (see
// README); `flip` reverses the strands containing the listed arcs.
Diagram parse_pd(std::string_view text);
// Canonical text; parse_pd(serialize_pd(d)) == d.
std::string serialize_pd(const Diagram& d);

// Signed Gauss code for knots, e.g. "O1+ U2+ O3+ U1+ O2+ U3+".
Diagram parse_gauss(std::string_view text);
std::string serialize_gauss(const Diagram& d);

}  // namespace akmove
