#include <doctest.h>

#include <thread>

#include "akmove/catalog.hpp"
#include "akmove/edits.hpp"
#include "akmove/invariants.hpp"
#include "akmove/lab.hpp"
#include "akmove/pd_io.hpp"
#include "akmove/random.hpp"
#include "akmove/reidemeister.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace akmove;

namespace {

std::vector<std::int64_t> coeffs(const Diagram& d) { return conway(d).coefficients(); }

std::int64_t at(const oracle::Poly& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

// A handcuff graph: two loops at the ends of an edge.
Diagram handcuff() { return parse_pd("V(1,1,3) V(3,2,2)"); }

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("writhe") {
  CHECK(writhe(unknot()) == 0);
  const Diagram& t = catalog_diagram("trefoil");
  CHECK(writhe(t) == 3);
  CHECK(oracle::writhe(t) == 3);
  CHECK(writhe(mirror(t)) == -3);
  CHECK(writhe(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")) == oracle::writhe(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")));
}

TEST_CASE("linking numbers") {
  CHECK(linking_number(unlink(2), 0, 1) == 0);
  CHECK(linking_number(catalog_diagram("hopf+"), 0, 1) == 1);
  CHECK(oracle::linking_number(catalog_diagram("hopf+"), 0, 1) == 1);
  CHECK(linking_number(catalog_diagram("hopf-"), 0, 1) == -1);
  CHECK(linking_number(catalog_diagram("whitehead"), 0, 1) == 0);
  CHECK(oracle::linking_number(catalog_diagram("whitehead"), 0, 1) == 0);
  CHECK_THROWS_AS(linking_number(catalog_diagram("hopf+"), 0, 0), Error);
  CHECK_THROWS_AS(linking_number(catalog_diagram("hopf+"), 0, 2), Error);
  for (const auto& [i, j, v] : linking_numbers(catalog_diagram("borromean"))) CHECK(v == 0);
}

TEST_CASE("conway on fixtures") {
  CHECK(conway(unknot()) == LaurentPoly::constant(1));
  CHECK(conway(disjoint_union(catalog_diagram("trefoil"), catalog_diagram("hopf+"))).is_zero());
  CHECK(coeffs(catalog_diagram("trefoil")) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(oracle::conway(catalog_diagram("trefoil")) == oracle::Poly{1, 0, 1});
  CHECK(coeffs(catalog_diagram("hopf+")) == std::vector<std::int64_t>{0, 1});
  CHECK(oracle::conway(catalog_diagram("hopf+")) == oracle::Poly{0, 1});
  oracle::Poly w = oracle::conway(catalog_diagram("whitehead"));
  CHECK(at(w, 2) == 0);
  CHECK(at(w, 3) != 0);
  CHECK(coeffs(catalog_diagram("whitehead")) == w);
  CHECK(coeffs(catalog_diagram("figure-eight")) == std::vector<std::int64_t>{1, 0, -1});
}

TEST_CASE("conway agrees with the brute-force skein tree") {
  for (const auto& e : diagram_catalog()) {
    CAPTURE(e.name);
    CHECK(coeffs(e.diagram) == oracle::conway(e.diagram));
  }
  gen::Rng rng(101);
  for (int i = 0; i < 25; ++i) {
    Diagram d = gen::braid(rng, 4, 10);
    CHECK(coeffs(d) == oracle::conway(d));
  }
}

TEST_CASE("coefficients and Arf") {
  CHECK(conway_coeff(catalog_diagram("trefoil"), 2) == 1);
  CHECK(conway_coeff(unknot(), 2) == 0);
  CHECK(conway_coeff(catalog_diagram("granny"), 2) == 2);
  CHECK(at(oracle::conway(catalog_diagram("granny")), 2) == 2);
  CHECK(arf(unknot()) == 0);
  CHECK(arf(catalog_diagram("trefoil")) == 1);
  CHECK(arf(catalog_diagram("whitehead")) == 1);
  CHECK(arf(unlink(2)) == 0);
  CHECK_THROWS_AS(arf(catalog_diagram("hopf+")), Error);
}

TEST_CASE("mirror negates odd coefficients") {
  for (const auto& e : diagram_catalog()) {
    CAPTURE(e.name);
    LaurentPoly p = conway(e.diagram);
    LaurentPoly m = conway(mirror(e.diagram));
    CHECK(m == p.negate_variable());
    CHECK(m.coeff(2) == p.coeff(2));
    CHECK(m.coeff(3) == -p.coeff(3));
  }
}

TEST_CASE("additivity under connected sum") {
  auto knots = catalog_knots();
  for (const auto& a : knots)
    for (const auto& b : knots) {
      Diagram s = connected_sum(a, 0, b, 0);
      CHECK(conway_coeff(s, 2) == conway_coeff(a, 2) + conway_coeff(b, 2));
      CHECK(arf(s) == (arf(a) ^ arf(b)));
    }
}

TEST_CASE("split diagrams have zero Conway polynomial") {
  gen::Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    Diagram d = disjoint_union(gen::braid(rng, 3, 6), gen::braid(rng, 3, 6));
    CHECK(conway(d).is_zero());
  }
}

TEST_CASE("component reordering keeps Conway") {
  const Diagram& w = catalog_diagram("whitehead");
  Diagram swapped = disjoint_union(sublink(w, {1}), sublink(w, {0}));
  CHECK(swapped.num_components() == 2);
  CHECK(conway(reverse(reverse(w, 0), 0)) == conway(w));
}

TEST_CASE("formal sums and singular evaluation") {
  const Diagram& t = catalog_diagram("trefoil");
  const Diagram& h = catalog_diagram("hopf+");
  FormalSum a;
  a.add(1, t);
  a.add(-1, t);
  CHECK(std::get<std::int64_t>(evaluate_sum(invariant("a2"), a)) == 0);
  FormalSum b;
  b.add(2, h);
  CHECK(std::get<std::int64_t>(evaluate_sum(invariant("lk"), b)) == 2 * oracle::linking_number(h, 0, 1));
  CHECK(std::get<std::int64_t>(evaluate_sum(invariant("a2"), FormalSum{})) == 0);
  Value shadow = evaluate_singular(invariant("lk"), {h, {0}});
  CHECK(std::get<std::int64_t>(shadow) == oracle::linking_number(h, 0, 1) - oracle::linking_number(switch_crossing(h, 0), 0, 1));
  CHECK(std::get<std::int64_t>(shadow) == 1);
  CHECK_THROWS_AS(evaluate_sum(invariant("arf"), b), Error);
  CHECK_THROWS_AS(invariant("nope"), Error);
}

TEST_CASE("vassiliev orders on small batteries") {
  Rng rng(31);
  for (const auto& sd : singular_battery(rng, 10, 2, 8, 2))
    CHECK(std::get<std::int64_t>(evaluate_singular(invariant("lk"), sd)) == 0);
  for (const auto& sd : singular_battery(rng, 10, 3, 8, 1))
    CHECK(std::get<std::int64_t>(evaluate_singular(invariant("a2"), sd)) == 0);
  CHECK(std::get<std::int64_t>(evaluate_singular(invariant("a2"), a2_singular_witness())) != 0);
}

TEST_CASE("graph diagrams") {
  Diagram theta = parse_pd("V(1,2,3) V(3,2,1)");
  CHECK_THROWS_AS(conway(theta), Error);
  CycleReport r = cycle_invariants(theta);
  CHECK(r.knots.size() == 3);
  for (const auto& k : r.knots) CHECK(k.a2 == 0);
  CHECK(r.pairs.empty());

  CycleReport h = cycle_invariants(handcuff());
  REQUIRE(h.pairs.size() == 1);
  CHECK(h.pairs[0].lk == 0);

  Diagram g = handcuff();
  Diagram clasped;
  bool found = false;
  for (int a = 0; a < g.num_arcs() && !found; ++a)
    for (int b = 0; b < g.num_arcs() && !found; ++b)
      for (Side sa : {Side::Left, Side::Right})
        for (Side sb : {Side::Left, Side::Right}) {
          if (found || a == b) continue;
          try {
            clasped = r2_add(g, a, sa, b, sb, true);
            clasped = switch_crossing(clasped, clasped.num_crossings() - 1);
            auto rep = cycle_invariants(clasped);
            if (rep.pairs.size() == 1 && rep.pairs[0].lk != 0) found = true;
          } catch (const Error&) {
          }
        }
  REQUIRE(found);
  int lk = cycle_invariants(clasped).pairs[0].lk;
  CHECK((lk == 1 || lk == -1));
}

TEST_CASE("budget and cache") {
  const Diagram& b = catalog_diagram("borromean");
  try {
    ConwayEngine fresh;
    fresh.evaluate(b, 1);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Budget);
  }
  ConwayEngine tiny(1);
  CHECK(tiny.evaluate(b) == conway(b));
  CHECK(tiny.cache_resets() > 0);
  CHECK_THROWS_AS(set_node_budget(0), Error);
  set_node_budget(kDefaultNodeBudget);
  CHECK(node_budget() == kDefaultNodeBudget);
}

TEST_CASE("concurrent evaluation") {
  ConwayEngine shared;
  std::vector<Diagram> ds;
  for (const auto& e : diagram_catalog()) ds.push_back(e.diagram);
  std::vector<std::vector<std::int64_t>> out(4 * ds.size());
  std::vector<std::thread> ts;
  for (int t = 0; t < 4; ++t)
    ts.emplace_back([&, t] {
      for (std::size_t i = 0; i < ds.size(); ++i) out[static_cast<std::size_t>(t) * ds.size() + i] = shared.evaluate(ds[i]).coefficients();
    });
  for (auto& t : ts) t.join();
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == oracle::conway(ds[i % ds.size()]));
}

}  // TEST_SUITE
