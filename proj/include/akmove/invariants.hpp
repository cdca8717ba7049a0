#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "akmove/canonical.hpp"
#include "akmove/diagram.hpp"
#include "akmove/laurent.hpp"
#include "akmove/singular.hpp"

namespace akmove {

inline constexpr std::uint64_t kDefaultNodeBudget = 1000000;

int writhe(const Diagram& d);
// Half the signed count of crossings between components i and j.
int linking_number(const Diagram& d, int i, int j);
// (i, j, lk) for every pair i < j of closed components.
std::vector<std::array<int, 3>> linking_numbers(const Diagram& d);

// Memoized skein evaluation of the Conway polynomial. The cache is keyed by
// canonical code and cleared wholesale when it outgrows its byte bound.
class ConwayEngine {
 public:
  // cache_bytes = 0 reads AKMOVE_CACHE_BYTES (default 64 MiB).
  explicit ConwayEngine(std::size_t cache_bytes = 0);
  LaurentPoly evaluate(const Diagram& d, std::uint64_t node_budget = kDefaultNodeBudget);
  // Skein nodes expanded by the most recent evaluate on this thread.
  static std::uint64_t last_node_count();
  std::size_t cache_entries() const;
  std::size_t cache_resets() const;

 private:
  LaurentPoly eval(const Diagram& d, std::uint64_t& nodes, std::uint64_t budget);
  std::optional<LaurentPoly> lookup(const CanonicalCode& key) const;
  void store(const CanonicalCode& key, const LaurentPoly& value);

  mutable std::mutex mu_;
  std::unordered_map<CanonicalCode, LaurentPoly, CanonicalCodeHash> cache_;
  std::size_t bytes_ = 0;
  std::size_t limit_;
  std::size_t resets_ = 0;
};

ConwayEngine& default_conway_engine();

// First crossing met first from below when the components are walked in order
// from their lowest arc; -1 for a descending diagram.
int first_nondescending(const Diagram& d);

// Process-wide skein budget used when none is passed (default 10^6).
void set_node_budget(std::uint64_t nodes);
std::uint64_t node_budget();
// node_budget = 0 uses node_budget().
LaurentPoly conway(const Diagram& d, std::uint64_t node_budget = 0);
std::int64_t conway_coeff(const Diagram& d, int n);
// a2 of each component taken on its own.
std::vector<std::int64_t> component_a2(const Diagram& d);
// Knots: a2 mod 2. Proper 2-component links: a3 mod 2.
int arf(const Diagram& d);

using Value = std::variant<std::int64_t, LaurentPoly, std::vector<std::int64_t>>;
bool is_zero(const Value& v);
std::string to_string(const Value& v);

struct InvariantDescriptor {
  std::string name;
  enum class Type { Integer, Polynomial, Vector } type = Type::Integer;
  std::function<Value(const Diagram&)> evaluate;
  std::optional<int> vassiliev_order;
};

// Built-in descriptors: "writhe", "lk" (components 1,2), "lk-vector",
// "conway", "a2", "a3", "a2-components", "arf".
InvariantDescriptor invariant(const std::string& name);
std::vector<std::string> invariant_names();

Value evaluate_sum(const InvariantDescriptor& inv, const FormalSum& s);
Value evaluate_singular(const InvariantDescriptor& inv, const SingularDiagram& sd);

// Spatial graphs: a2 of every constituent knot (cycle) and lk of every pair of
// disjoint cycles. Cycles are named by their edge indices (0-based graph
// edges = open components in component order; closed components are skipped).
struct CycleReport {
  struct Knot {
    std::vector<int> edges;
    std::int64_t a2;
  };
  struct Pair {
    std::vector<int> first, second;
    int lk;
  };
  std::vector<Knot> knots;
  std::vector<Pair> pairs;
};
CycleReport cycle_invariants(const Diagram& g);

}  // namespace akmove
