#pragma once

#include <string>
#include <vector>

#include "akmove/diagram.hpp"

namespace akmove {

// Closure of a braid word on `strands` strands; generator +i / -i is the
// positive / negative crossing of positions i and i+1 (1-based).
Diagram braid_closure(int strands, const std::vector<int>& word);

Diagram unknot();
Diagram unlink(int n);

struct CatalogEntry {
  std::string name;
  std::string description;
  Diagram diagram;
};

// unknot, unlinks, Hopf links, trefoils, figure-eight, Whitehead, Borromean, ...
const std::vector<CatalogEntry>& diagram_catalog();
// Throws Error(Argument) for an unknown name.
const Diagram& catalog_diagram(const std::string& name);

}  // namespace akmove
