#include "akmove/singular.hpp"

#include <map>
#include <string>

#include "akmove/edits.hpp"

namespace akmove {

void FormalSum::add(long coefficient, Diagram d) {
  if (coefficient == 0) return;
  terms_.push_back({coefficient, std::move(d)});
}

long FormalSum::coefficient_sum() const {
  long s = 0;
  for (const auto& t : terms_) s += t.coefficient;
  return s;
}

FormalSum FormalSum::normalized() const {
  std::map<CanonicalCode, SumTerm> merged;
  for (const auto& t : terms_) {
    auto [it, fresh] = merged.try_emplace(canonical_code(t.diagram), t);
    if (!fresh) it->second.coefficient += t.coefficient;
  }
  FormalSum out;
  for (auto& [code, t] : merged) out.add(t.coefficient, t.diagram);
  return out;
}

FormalSum resolve(const SingularDiagram& sd) {
  std::vector<int> dps(sd.double_points.begin(), sd.double_points.end());
  for (int c : dps)
    if (c < 0 || c >= sd.base.num_crossings())
      throw Error(ErrorKind::Argument, "double point " + std::to_string(c + 1) + " is not a crossing");
  if (dps.size() > 20) throw Error(ErrorKind::Budget, "too many double points");
  FormalSum out;
  const unsigned n = static_cast<unsigned>(dps.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Diagram d = sd.base;
    long coeff = 1;
    for (unsigned k = 0; k < n; ++k) {
      int want = (mask >> k) & 1u ? -1 : 1;
      if (want < 0) coeff = -coeff;
      if (d.sign(dps[k]) != want) d = switch_crossing(d, dps[k]);
    }
    out.add(coeff, std::move(d));
  }
  return out;
}

}  // namespace akmove
