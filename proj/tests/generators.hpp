#pragma once

// Hand-rolled generators for the property tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "akmove/catalog.hpp"
#include "akmove/diagram.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Braid word on `strands` strands; letters are +-1 .. +-(strands-1).
inline std::vector<int> word(Rng& rng, int strands, int length) {
  std::vector<int> w;
  for (int i = 0; i < length; ++i) {
    int g = uniform(rng, 1, strands - 1);
    w.push_back(uniform(rng, 0, 1) ? g : -g);
  }
  return w;
}

inline akmove::Diagram braid(Rng& rng, int max_strands, int max_crossings) {
  int s = uniform(rng, 2, max_strands);
  return akmove::braid_closure(s, word(rng, s, uniform(rng, 1, max_crossings)));
}

inline akmove::Diagram knot(Rng& rng, int max_crossings) {
  for (;;) {
    akmove::Diagram d = braid(rng, 4, max_crossings);
    if (d.num_components() == 1) return d;
  }
}

inline akmove::Diagram link(Rng& rng, int components, int max_crossings) {
  for (;;) {
    akmove::Diagram d = braid(rng, components + 2, max_crossings);
    if (d.num_components() == components && d.num_loops() == 0) return d;
  }
}

// Same diagram with arcs renamed and crossings reordered at random. Diagrams
// without free loops only.
inline akmove::Diagram relabel(const akmove::Diagram& d, Rng& rng) {
  std::vector<int> arc(static_cast<std::size_t>(d.num_arcs()));
  std::iota(arc.begin(), arc.end(), 0);
  std::shuffle(arc.begin(), arc.end(), rng);
  std::vector<int> xs(static_cast<std::size_t>(d.num_crossings()));
  std::iota(xs.begin(), xs.end(), 0);
  std::shuffle(xs.begin(), xs.end(), rng);
  std::vector<akmove::Crossing> crossings(xs.size());
  for (std::size_t c = 0; c < xs.size(); ++c) {
    akmove::Crossing x = d.crossing(static_cast<int>(c));
    for (auto& a : x.arcs) a = arc[static_cast<std::size_t>(a)];
    crossings[static_cast<std::size_t>(xs[c])] = x;
  }
  std::vector<akmove::Slot> heads(arc.size());
  for (std::size_t a = 0; a < arc.size(); ++a) {
    akmove::Slot h = d.head(static_cast<int>(a));
    if (h.kind == akmove::NodeKind::Crossing) h.node = xs[static_cast<std::size_t>(h.node)];
    heads[static_cast<std::size_t>(arc[a])] = h;
  }
  return akmove::Diagram::from_parts(std::move(crossings), {}, std::move(heads));
}

}  // namespace gen
