#include <doctest.h>

#include <optional>
#include <set>
#include <thread>

#include "akmove/canonical.hpp"
#include "akmove/catalog.hpp"
#include "akmove/edits.hpp"
#include "akmove/invariants.hpp"
#include "akmove/lab.hpp"
#include "akmove/moves.hpp"
#include "akmove/random.hpp"
#include "akmove/reidemeister.hpp"
#include "akmove/rules.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace akmove;

namespace {

std::vector<std::int64_t> lks(const Diagram& d) {
  std::vector<std::int64_t> out;
  for (int i = 0; i < d.num_components(); ++i)
    for (int j = i + 1; j < d.num_components(); ++j) out.push_back(oracle::linking_number(d, i, j));
  return out;
}

// Crossings where two of the three arcs meet.
std::vector<int> corners(const Diagram& d, const std::array<int, 3>& arcs) {
  std::multiset<int> ends;
  for (int a : arcs) {
    ends.insert(d.head(a).node);
    ends.insert(d.tail(a).node);
  }
  std::vector<int> out;
  for (int c : std::set<int>(ends.begin(), ends.end()))
    if (ends.count(c) >= 2) out.push_back(c);
  return out;
}

// Walks random Reidemeister moves from `start` until `want` holds.
template <class Pred>
Diagram walk_until(const Diagram& start, Rng& rng, Pred want, int max_crossings = 10) {
  for (int attempt = 0; attempt < 5000; ++attempt) {
    Diagram d = start;
    for (int s = 0; s < 6; ++s) {
      d = reidemeister(d, random_reidemeister_site(d, rng));
      if (d.num_crossings() > max_crossings) break;
      if (want(d)) return d;
    }
  }
  FAIL("no fixture found");
  return start;
}

std::vector<Diagram> fixtures() {
  std::vector<Diagram> out;
  for (const auto& e : diagram_catalog()) out.push_back(e.diagram);
  return out;
}

}  // namespace

TEST_SUITE("moves") {

TEST_CASE("crossing change") {
  for (const auto& d : fixtures())
    for (int c = 0; c < d.num_crossings(); ++c)
      CHECK(canonical_code(crossing_change(crossing_change(d, c), c)) == canonical_code(d));
  const Diagram& h = catalog_diagram("hopf+");
  for (int c = 0; c < 2; ++c) {
    CHECK(oracle::conway(crossing_change(h, c)).empty());
    CHECK(conway(crossing_change(h, c)).is_zero());
  }
  CHECK(oracle::conway(crossing_change(catalog_diagram("trefoil"), 0)) == oracle::Poly{1});
  CHECK(conway(crossing_change(catalog_diagram("trefoil"), 0)) == LaurentPoly::constant(1));
  CHECK_THROWS_AS(crossing_change(h, 5), Error);
}

TEST_CASE("delta on a three-component unlink") {
  // A delta move at a three-component triangle of the Borromean rings gives
  // the unlink drawn around the same triangle.
  const Diagram& b = catalog_diagram("borromean");
  std::optional<Diagram> d;
  for (const auto& t : triangle_sites(b, true)) {
    std::set<int> comps;
    for (int a : t) comps.insert(b.component_of(a));
    if (comps.size() == 3) {
      d = delta_move(b, t);
      break;
    }
  }
  REQUIRE(d.has_value());
  CHECK(lks(*d) == std::vector<std::int64_t>{0, 0, 0});
  int sites = 0;
  for (const auto& t : triangle_sites(*d, true)) {
    Diagram e = delta_move(*d, t);
    CHECK(lks(e) == std::vector<std::int64_t>{0, 0, 0});
    CHECK(canonical_code(delta_move(e, t)) == canonical_code(*d));
    ++sites;
  }
  CHECK(sites > 0);
}

TEST_CASE("delta on an unknot changes a2 by one") {
  Rng rng(43);
  Diagram d = walk_until(unknot(), rng, [](const Diagram& x) { return !triangle_sites(x, true).empty(); });
  CHECK(conway(d) == LaurentPoly::constant(1));
  Diagram e = delta_move(d, triangle_sites(d, true)[0]);
  std::int64_t a2 = oracle::conway(e).size() > 2 ? oracle::conway(e)[2] : 0;
  CHECK((a2 == 1 || a2 == -1));
  CHECK(conway_coeff(e, 2) == a2);
}

TEST_CASE("delta is self-inverse and keeps linking numbers") {
  gen::Rng rng(47);
  int sites = 0;
  for (int i = 0; i < 200; ++i) {
    Diagram d = gen::braid(rng, 4, 9);
    for (const auto& t : triangle_sites(d, true)) {
      Diagram e = delta_move(d, t);
      CHECK(e.num_crossings() == d.num_crossings());
      CHECK(canonical_code(delta_move(e, t)) == canonical_code(d));
      CHECK(lks(e) == lks(d));
      ++sites;
    }
  }
  CHECK(sites > 20);
  CHECK_THROWS_AS(delta_move(catalog_diagram("trefoil"), {0, 1, 2}), Error);
}

TEST_CASE("clasp pass on an unknot keeps a2") {
  Rng rng(53);
  int found = 0;
  for (int attempt = 0; attempt < 3000 && found < 5; ++attempt) {
    Diagram k = unknot();
    for (int s = 0; s < 5; ++s) {
      k = reidemeister(k, random_reidemeister_site(k, rng));
      if (k.num_crossings() > 10) k = simplify(k);
    }
    auto prepared = prepare_clasp_site(k, rng);
    if (!prepared || oracle::conway(prepared->first) != oracle::Poly{1}) continue;
    auto& [d, site] = *prepared;
    ClaspResult r = clasp_pass(d, site);
    CHECK(conway_coeff(r.diagram, 2) == 0);
    CHECK(canonical_code(clasp_pass(r.diagram, r.image).diagram) == canonical_code(d));
    ++found;
  }
  CHECK(found == 5);
}

TEST_CASE("clasp pass on the trefoil") {
  Rng rng(59);
  auto prepared = prepare_clasp_site(catalog_diagram("trefoil"), rng);
  REQUIRE(prepared.has_value());
  auto& [d, site] = *prepared;
  ClaspResult r = clasp_pass(d, site);
  CHECK(conway_coeff(r.diagram, 2) == conway_coeff(d, 2));
  // Odd coefficients vanish on knots, so a3 cannot move here.
  CHECK(conway_coeff(r.diagram, 3) == 0);
  CHECK(conway_coeff(d, 3) == 0);
  CHECK(canonical_code(clasp_pass(r.diagram, r.image).diagram) == canonical_code(d));
}

TEST_CASE("clasp pass keeps lk and component a2 on random sites") {
  auto battery = [] {
    Rng rng(61);
    return clasp_battery(rng, 30);
  }();
  for (const auto& p : battery) {
    CHECK(lks(p.after) == lks(p.before));
    CHECK(component_a2(p.after) == component_a2(p.before));
  }
}

TEST_CASE("clasp sites are validated") {
  const Diagram& t = catalog_diagram("trefoil");
  CHECK_THROWS_AS(clasp_pass(t, {{0, 1}, {2, 3}}), Error);
}

TEST_CASE("rule registry") {
  auto names = rule_names();
  REQUIRE(names.size() >= 2);
  CHECK(names[0] == "crossing-change");
  CHECK(names[1] == "delta");
  CHECK_THROWS_AS(rule_id("nope"), Error);
  CHECK_THROWS_AS(register_move(delta_rule()), Error);

  LocalMoveRule flip{"flip-test", {{{0, 1, 2, 3}}, {0, 1, 2, 3}}, {{{1, 2, 3, 0}}, {0, 1, 2, 3}}, false};
  int id = register_move(flip);
  CHECK(rule_id("flip-test") == id);
  for (const auto& d : fixtures())
    for (int c = 0; c < d.num_crossings(); ++c)
      CHECK(canonical_code(apply_rule(d, id, {c}).diagram) == canonical_code(crossing_change(d, c)));

  LocalMoveRule bad{"bad-boundary", {{{0, 1, 2, 3}}, {0, 1, 2, 3}}, {{{0, 1, 2, 3}}, {0, 1, 2, 4}}, false};
  CHECK_THROWS_AS(validate_rule(bad), Error);
  CHECK_THROWS_AS(register_move(bad), Error);
  LocalMoveRule loop{"loop", {{{0, 1, 2, 3}}, {0, 1, 2, 3}}, {{{1, 2, 3, 0}, {4, 5, 5, 4}}, {0, 1, 2, 3}}, false};
  CHECK_THROWS_AS(validate_rule(loop), Error);
}

TEST_CASE("registered delta rule matches delta_move") {
  int id = rule_id("delta");
  gen::Rng rng(67);
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    Diagram d = gen::braid(rng, 4, 9);
    auto tris = triangle_sites(d, true);
    for (const auto& t : tris) {
      std::vector<int> cs = corners(d, t);
      REQUIRE(cs.size() == 3);
      int same = 0;
      for (const auto& u : tris) same += corners(d, u) == cs;
      RuleResult r = apply_rule(d, id, cs);
      if (same == 1) {
        CHECK(canonical_code(r.diagram) == canonical_code(delta_move(d, t)));
        ++compared;
      }
      CHECK(canonical_code(apply_rule(r.diagram, id, r.image).diagram) == canonical_code(d));
    }
  }
  CHECK(compared > 20);
  CHECK_THROWS_AS(apply_rule(catalog_diagram("hopf+"), id, {0, 1}), Error);
}

TEST_CASE("registry is shared across threads") {
  std::vector<std::thread> ts;
  std::vector<int> ids(4);
  for (int t = 0; t < 4; ++t)
    ts.emplace_back([&ids, t] {
      LocalMoveRule r = crossing_change_rule();
      r.name = "cc-thread-" + std::to_string(t);
      ids[static_cast<std::size_t>(t)] = register_move(r);
    });
  for (auto& t : ts) t.join();
  CHECK(std::set<int>(ids.begin(), ids.end()).size() == 4);
  for (int t = 0; t < 4; ++t) CHECK(registered_rule(ids[static_cast<std::size_t>(t)]).name == "cc-thread-" + std::to_string(t));
}

}  // TEST_SUITE
