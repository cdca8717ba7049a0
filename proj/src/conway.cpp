#include <atomic>
#include <cstdlib>
#include <string>

#include "akmove/edits.hpp"
#include "akmove/invariants.hpp"
#include "akmove/reidemeister.hpp"

namespace akmove {

namespace {

thread_local std::uint64_t g_last_nodes = 0;
std::atomic<std::uint64_t> g_budget{kDefaultNodeBudget};

std::size_t env_cache_bytes() {
  if (const char* s = std::getenv("AKMOVE_CACHE_BYTES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{64} << 20;
}

std::size_t entry_bytes(const CanonicalCode& k, const LaurentPoly& v) {
  return 64 + k.data.size() * sizeof(int) + v.terms().size() * 48;
}

}  // namespace

int first_nondescending(const Diagram& d) {
  std::vector<char> seen(static_cast<std::size_t>(d.num_crossings()), 0);
  for (const auto& comp : d.components()) {
    for (int a : comp.arcs) {
      Slot h = d.head(a);
      if (h.kind != NodeKind::Crossing || seen[static_cast<std::size_t>(h.node)]) continue;
      if (h.pos == 0) return h.node;
      seen[static_cast<std::size_t>(h.node)] = 1;
    }
  }
  return -1;
}

ConwayEngine::ConwayEngine(std::size_t cache_bytes) : limit_(cache_bytes ? cache_bytes : env_cache_bytes()) {}

std::uint64_t ConwayEngine::last_node_count() { return g_last_nodes; }

std::size_t ConwayEngine::cache_entries() const {
  std::lock_guard lock(mu_);
  return cache_.size();
}

std::size_t ConwayEngine::cache_resets() const {
  std::lock_guard lock(mu_);
  return resets_;
}

std::optional<LaurentPoly> ConwayEngine::lookup(const CanonicalCode& key) const {
  std::lock_guard lock(mu_);
  auto it = cache_.find(key);
  if (it == cache_.end()) return std::nullopt;
  return it->second;
}

void ConwayEngine::store(const CanonicalCode& key, const LaurentPoly& value) {
  std::lock_guard lock(mu_);
  std::size_t b = entry_bytes(key, value);
  if (bytes_ + b > limit_) {
    cache_.clear();
    bytes_ = 0;
    ++resets_;
  }
  if (cache_.emplace(key, value).second) bytes_ += b;
}

LaurentPoly ConwayEngine::evaluate(const Diagram& d, std::uint64_t node_budget) {
  if (!d.is_link()) throw Error(ErrorKind::Argument, "the Conway polynomial needs a link diagram (graph vertices present)");
  std::uint64_t nodes = 0;
  LaurentPoly r = eval(d, nodes, node_budget);
  g_last_nodes = nodes;
  return r;
}

LaurentPoly ConwayEngine::eval(const Diagram& input, std::uint64_t& nodes, std::uint64_t budget) {
  Diagram d = simplify(input);
  if (d.num_crossings() == 0) return LaurentPoly::constant(d.num_components() == 1 ? 1 : 0);
  CanonicalCode key = canonical_code(d);
  if (auto hit = lookup(key)) return *hit;
  if (++nodes > budget)
    throw Error(ErrorKind::Budget, "skein budget of " + std::to_string(budget) + " nodes exceeded");
  LaurentPoly result;
  int c = first_nondescending(d);
  if (c < 0) {
    result = LaurentPoly::constant(d.num_components() == 1 ? 1 : 0);
  } else {
    LaurentPoly sw = eval(switch_crossing(d, c), nodes, budget);
    LaurentPoly sm = eval(smooth(d, c), nodes, budget).times_z();
    // L+ - L- = z L0
    result = d.sign(c) > 0 ? sw + sm : sw - sm;
  }
  store(key, result);
  return result;
}

ConwayEngine& default_conway_engine() {
  static ConwayEngine engine;
  return engine;
}

void set_node_budget(std::uint64_t nodes) {
  if (nodes == 0) throw Error(ErrorKind::Argument, "the skein budget must be positive");
  g_budget = nodes;
}

std::uint64_t node_budget() { return g_budget; }

LaurentPoly conway(const Diagram& d, std::uint64_t node_budget) {
  return default_conway_engine().evaluate(d, node_budget ? node_budget : g_budget.load());
}

}  // namespace akmove
