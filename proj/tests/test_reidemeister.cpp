#include <doctest.h>

#include "akmove/canonical.hpp"
#include "akmove/catalog.hpp"
#include "akmove/invariants.hpp"
#include "akmove/pd_io.hpp"
#include "akmove/random.hpp"
#include "akmove/reidemeister.hpp"
#include "oracles.hpp"

using namespace akmove;

namespace {

std::vector<std::int64_t> lks(const Diagram& d) {
  std::vector<std::int64_t> out;
  for (int i = 0; i < d.num_components(); ++i)
    for (int j = i + 1; j < d.num_components(); ++j) out.push_back(oracle::linking_number(d, i, j));
  return out;
}

}  // namespace

TEST_SUITE("reidemeister") {

TEST_CASE("R1 on the unknot") {
  for (int sign : {1, -1}) {
    for (Side s : {Side::Left, Side::Right}) {
      Diagram d = r1_add(unknot(), 0, s, sign);
      CHECK(d.num_crossings() == 1);
      CHECK(d.num_components() == 1);
      CHECK(d.sign(0) == sign);
      CHECK(conway(d) == LaurentPoly::constant(1));
      CHECK(oracle::conway(d) == oracle::Poly{1});
      Diagram back = r1_remove(d, 0);
      CHECK(back.num_crossings() == 0);
    }
  }
}

TEST_CASE("R2- on a reducible 2-crossing unknot") {
  Diagram d = parse_pd("X(1,3,2,1) X(2,3,4,4)");
  CHECK(d.num_components() == 1);
  auto sites = r2_remove_sites(d);
  REQUIRE(!sites.empty());
  Diagram u = r2_remove(d, sites[0].first, sites[0].second);
  CHECK(u.num_crossings() == 0);
  CHECK(canonical_code(u).empty());
}

TEST_CASE("R3 keeps the Conway polynomial") {
  Rng rng(5);
  int done = 0;
  for (int attempt = 0; attempt < 200 && done < 10; ++attempt) {
    Diagram d = r1_add(catalog_diagram("trefoil"), 0, Side::Left, 1);
    for (int s = 0; s < 4; ++s) d = reidemeister(d, random_reidemeister_site(d, rng));
    auto tri = triangle_sites(d, false);
    if (tri.empty() || d.num_crossings() > 9) continue;
    Diagram e = r3(d, tri[0]);
    CHECK(e.num_crossings() == d.num_crossings());
    CHECK(oracle::conway(e) == oracle::conway(d));
    CHECK(conway(e) == conway(d));
    ++done;
  }
  CHECK(done == 10);
}

TEST_CASE("site mismatch errors name the pattern") {
  const Diagram& t = catalog_diagram("trefoil");
  try {
    r1_remove(t, 0);
    FAIL("expected a site error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Site);
    CHECK(std::string(e.what()).find("R1") != std::string::npos);
  }
  CHECK_THROWS_AS(r2_remove(t, 0, 1), Error);
  CHECK_THROWS_AS(r3(t, {0, 1, 2}), Error);
  CHECK_THROWS_AS(r1_add(t, 42, Side::Left, 1), Error);
}

TEST_CASE("crossing counts per move kind") {
  Rng rng(17);
  Diagram d = catalog_diagram("figure-eight");
  for (int i = 0; i < 150; ++i) {
    ReidemeisterSite s = random_reidemeister_site(d, rng);
    Diagram e = reidemeister(d, s);
    int delta = e.num_crossings() - d.num_crossings();
    switch (s.kind) {
      case RKind::R1Plus: CHECK(delta == 1); break;
      case RKind::R1Minus: CHECK(delta == -1); break;
      case RKind::R2Plus: CHECK(delta == 2); break;
      case RKind::R2Minus: CHECK(delta == -2); break;
      case RKind::R3: CHECK(delta == 0); break;
    }
    d = e.num_crossings() > 14 ? simplify(e) : e;
  }
}

TEST_CASE("random moves keep linking numbers and Conway") {
  Rng rng(23);
  for (const char* name : {"hopf+", "whitehead", "borromean", "trefoil", "unlink2"}) {
    Diagram d = catalog_diagram(name);
    auto lk0 = lks(d);
    auto c0 = conway(d);
    for (int i = 0; i < 30; ++i) {
      d = reidemeister(d, random_reidemeister_site(d, rng));
      if (d.num_crossings() > 16) d = simplify(d);
      CAPTURE(name);
      CHECK(lks(d) == lk0);
      CHECK(conway(d) == c0);
    }
  }
}

TEST_CASE("simplify is greedy R1/R2 reduction") {
  Diagram d = r1_add(r1_add(unknot(), 0, Side::Left, 1), 0, Side::Right, -1);
  CHECK(simplify(d).num_crossings() == 0);
  CHECK(simplify(catalog_diagram("trefoil")).num_crossings() == 3);
}

}  // TEST_SUITE
