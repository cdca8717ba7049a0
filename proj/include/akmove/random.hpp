#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "akmove/diagram.hpp"
#include "akmove/moves.hpp"
#include "akmove/reidemeister.hpp"

namespace akmove {

using Rng = std::mt19937_64;

// Closure of a random braid word with 2..max_strands strands and
// 1..max_crossings letters.
Diagram random_braid_diagram(Rng& rng, int max_strands, int max_crossings);
// As above, retried until the closure has the wanted number of components.
Diagram random_braid_link(Rng& rng, int components, int max_strands, int max_crossings);

// A random applicable Reidemeister move (R1+, R1-, R2+, R2-, R3).
ReidemeisterSite random_reidemeister_site(const Diagram& d, Rng& rng);

// Pushes a finger of some arc across both strands next to a clasp corner of
// d, producing a clasp-pass site. The finger tip is then hooked to a
// neighbouring strand, so the result is in general not isotopic to d.
// nullopt when d has no usable clasp.
std::optional<std::pair<Diagram, ClaspSite>> prepare_clasp_site(const Diagram& d, Rng& rng);

}  // namespace akmove
