#pragma once

#include <set>
#include <vector>

#include "akmove/canonical.hpp"
#include "akmove/diagram.hpp"

namespace akmove {

// A diagram some of whose crossings are double points. The over/under data of
// a marked crossing is ignored.
struct SingularDiagram {
  Diagram base;
  std::set<int> double_points;
  int order() const { return static_cast<int>(double_points.size()); }
};

struct SumTerm {
  long coefficient = 0;
  Diagram diagram;
};

// Integer combination of diagrams.
class FormalSum {
 public:
  FormalSum() = default;
  void add(long coefficient, Diagram d);
  const std::vector<SumTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  long coefficient_sum() const;
  // Terms with equal canonical code merged, zero coefficients dropped,
  // ordered by code. normalized() of a normalized sum is unchanged.
  FormalSum normalized() const;

 private:
  std::vector<SumTerm> terms_;
};

// Each double point becomes (positive crossing) - (negative crossing). Terms
// come in subset order: bit k of the index set means the k-th double point is
// resolved negatively.
FormalSum resolve(const SingularDiagram& sd);

}  // namespace akmove
