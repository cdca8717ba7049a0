#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "akmove/diagram.hpp"

namespace akmove {

// Relabeling-invariant encoding of a diagram's combinatorics. Equal codes mean
// isomorphic PD data (same abstract diagram), not isotopic links.
// The crossingless unknot has the empty code.
struct CanonicalCode {
  std::vector<int> data;
  bool operator==(const CanonicalCode&) const = default;
  auto operator<=>(const CanonicalCode&) const = default;
  bool empty() const { return data.empty(); }
  std::string to_string() const;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const;
};

CanonicalCode canonical_code(const Diagram& d);

}  // namespace akmove
