#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "akmove/band.hpp"
#include "akmove/invariants.hpp"
#include "akmove/random.hpp"
#include "akmove/singular.hpp"

namespace akmove {

// Base diagram f with n+1 attachments of type k-1 models.
struct BandSumScheme {
  Diagram base;
  std::vector<Attachment> attachments;
  int k = 2;
  int n() const { return static_cast<int>(attachments.size()) - 1; }
};

// Throws Error(Argument) unless the scheme has at least one attachment and
// every model has type k-1.
void validate_scheme(const BandSumScheme& s);

struct ReportRow {
  std::string label;
  long coefficient = 0;
  std::string code;  // canonical code of the row's diagram, if any
  std::vector<std::pair<std::string, std::string>> values;
};

struct ExperimentReport {
  std::string name;
  std::string scope;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> inputs;  // canonical codes
  std::vector<ReportRow> rows;
  std::optional<std::string> residual;
  bool pass = false;

  std::string to_json() const;  // "schema":1, deterministic key order
  std::string to_text() const;
};

// Sum over subsets X of the attachments of (-1)^|X| times the band sum with
// the attachments in X. Term m is the subset whose bits are set in m.
FormalSum alternating_sum(const BandSumScheme& s);
// Pass iff the invariant kills the alternating sum.
ExperimentReport order_nk_test(const InvariantDescriptor& inv, const BandSumScheme& s);
// Pass iff the invariant kills every resolved singular diagram. All battery
// members must have the same number of double points.
ExperimentReport vassiliev_order_test(const InvariantDescriptor& inv, const std::vector<SingularDiagram>& battery);

struct MovePair {
  std::string label;
  Diagram before, after;
};
MovePair delta_pair(const Diagram& d, const std::array<int, 3>& arcs);
MovePair clasp_pair(const Diagram& d, const ClaspSite& site);
MovePair crossing_change_pair(const Diagram& d, int c);

// k = 1: every pair has equal linking numbers. k = 2: also equal component a2.
ExperimentReport theorem51_experiment(int k, const std::vector<MovePair>& pairs);
// order_nk_test on every scheme; needs a declared Vassiliev order of inv at
// most (n+1)(k-1)-1 for each scheme.
ExperimentReport prop13_experiment(const InvariantDescriptor& inv, const std::vector<BandSumScheme>& schemes);
// Whitehead link against the 2-component unlink: equal lk and component a2,
// different Conway polynomial and Arf invariant.
ExperimentReport whitehead_experiment();
ExperimentReport whitehead_experiment(const Diagram& whitehead, const Diagram& unlink2);
// a2 and Arf additivity, commutativity and the unknot unit law under
// connected sum, for every ordered pair of knots.
ExperimentReport group_checks(const std::vector<Diagram>& knots);
std::vector<Diagram> catalog_knots();

// Random batteries. Feet are uniform among arcs off graph vertices, each band
// passes at most max_passes arcs, and every arc is used by one band at most.
Attachment random_attachment(Rng& rng, const Diagram& base, const LinkModel& m, int max_passes,
                             std::vector<char>& used);
BandSumScheme random_scheme(Rng& rng, const Diagram& base, const LinkModel& m, int attachments, int max_passes);
// As above on a random braid closure with the given component count and at
// least three crossings, resampled until the bands fit.
BandSumScheme random_scheme(Rng& rng, int components, int max_crossings, const LinkModel& m, int attachments,
                            int max_passes);
std::vector<MovePair> delta_battery(Rng& rng, int count);
std::vector<MovePair> clasp_battery(Rng& rng, int count);
// components = 0 allows any number of components.
std::vector<SingularDiagram> singular_battery(Rng& rng, int count, int order, int max_crossings, int components = 0);

// Recorded witnesses: a2 is not of order (1;2) and a3 is not of order (1;2).
BandSumScheme a2_witness_scheme();
BandSumScheme a3_witness_scheme();
// a2 has order 2 but not 1: a 2-singular diagram on which it does not vanish.
SingularDiagram a2_singular_witness();

}  // namespace akmove
