#pragma once

#include <array>
#include <string>
#include <vector>

#include "akmove/diagram.hpp"

namespace akmove {

// Unoriented tangle in a disk. Each crossing lists four labels
// counterclockwise, slots 0 and 2 on the under strand. `boundary` lists the
// labels meeting the disk boundary, counterclockwise. Every label occurs
// exactly twice among crossing slots and boundary points.
struct Tangle {
  std::vector<std::array<int, 4>> crossings;
  std::vector<int> boundary;
};

struct LocalMoveRule {
  std::string name;
  Tangle before, after;
  // Also match the mirror image of `before` (replaced by the mirror of `after`).
  bool mirrors = true;
  int arity() const { return static_cast<int>(before.boundary.size()) / 2; }
};

// Throws Error(Argument) when a tangle is malformed, non-planar, has closed
// loops, or the two tangles do not join the same boundary points.
void validate_rule(const LocalMoveRule& rule);

// Append-only registry shared by all threads. Built-in rules
// "crossing-change" and "delta" are registered first.
int register_move(const LocalMoveRule& rule);
LocalMoveRule registered_rule(int id);
// Throws Error(Argument) for an unknown name.
int rule_id(const std::string& name);
std::vector<std::string> rule_names();

struct RuleResult {
  Diagram diagram;
  // Crossings of the inserted tangle, in the order of rule.after.
  std::vector<int> image;
};

// Replaces the tangle formed by the site crossings (in any order) by the
// rule's after tangle. Throws Error(Site) when the crossings do not form the
// before tangle. When the crossings bound the tangle in more than one way
// (two triangular faces on the same three crossings, say) the first match in
// sorted crossing order is used.
RuleResult apply_rule(const Diagram& d, int rule, const std::vector<int>& site);

LocalMoveRule crossing_change_rule();
LocalMoveRule delta_rule();

}  // namespace akmove
