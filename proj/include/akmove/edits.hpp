#pragma once

#include <vector>

#include "akmove/diagram.hpp"

namespace akmove {

// Components of d1 come first, then those of d2.
Diagram disjoint_union(const Diagram& d1, const Diagram& d2);
// Every crossing switched; orientation kept.
Diagram mirror(const Diagram& d);
Diagram reverse(const Diagram& d, int component);
// Joins the closed components through a1 and a2 (arc ids of d1 and d2).
Diagram connected_sum(const Diagram& d1, int a1, const Diagram& d2, int a2);

// Over/under exchanged at c; arc ids and crossing indices are kept.
Diagram switch_crossing(const Diagram& d, int c);
// Oriented (Seifert) smoothing of crossing c.
Diagram smooth(const Diagram& d, int c);
// Keeps the listed components of a link diagram, in their original order.
Diagram sublink(const Diagram& d, const std::vector<int>& keep);
Diagram delete_component(const Diagram& d, int component);

}  // namespace akmove
