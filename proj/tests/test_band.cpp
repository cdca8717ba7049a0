#include <doctest.h>

#include "akmove/band.hpp"
#include "akmove/canonical.hpp"
#include "akmove/catalog.hpp"
#include "akmove/edits.hpp"
#include "akmove/invariants.hpp"
#include "akmove/moves.hpp"
#include "akmove/pd_io.hpp"
#include "akmove/reidemeister.hpp"
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

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Argument;
}

}  // namespace

TEST_SUITE("band") {

TEST_CASE("empty band sum") {
  for (const auto& e : diagram_catalog()) CHECK(band_sum(e.diagram, {}) == e.diagram);
}

TEST_CASE("model catalog") {
  LinkModel h = model("hopf");
  CHECK(h.type_index == 1);
  CHECK(h.feet.size() == 2);
  LinkModel b = model("borromean");
  CHECK(b.type_index == 2);
  CHECK(b.feet.size() == 3);
  for (int c = 0; c < 3; ++c) {
    Diagram rest = simplify(delete_component(b.diagram, c));
    CHECK(rest.num_crossings() == 0);
    CHECK(rest.num_components() == 2);
  }
  CHECK_THROWS_AS(model("nope"), Error);
}

TEST_CASE("model validation") {
  LinkModel h = model("hopf");
  LinkModel few = h;
  few.feet.pop_back();
  CHECK_THROWS_AS(validate_model(few), Error);
  LinkModel wrong_type = h;
  wrong_type.type_index = 2;
  CHECK_THROWS_AS(validate_model(wrong_type), Error);
  LinkModel split{"split", 2, disjoint_union(catalog_diagram("hopf+"), unknot()), {0, 2, 4}};
  CHECK_THROWS_AS(validate_model(split), Error);
  LinkModel mirrored{"hopf-mirror-test", 1, mirror(h.diagram), h.feet};
  register_model(mirrored);
  CHECK(model("hopf-mirror-test").diagram == mirrored.diagram);
  CHECK_THROWS_AS(register_model(mirrored), Error);
}

TEST_CASE("trivial Hopf bands on one arc of the unknot") {
  Attachment a{model("hopf"), {{0, Side::Left, 0.3, {}}, {0, Side::Left, 0.7, {}}}};
  Diagram d = band_sum(unknot(), {a});
  CHECK(d.num_components() == 1);
  CHECK(oracle::conway(d) == oracle::Poly{1});
  CHECK(conway(d) == LaurentPoly::constant(1));
}

TEST_CASE("Hopf recipe equals the crossing change") {
  gen::Rng rng(71);
  int checked = 0;
  std::vector<Diagram> pool;
  for (const auto& e : diagram_catalog())
    if (e.diagram.num_crossings() > 0 && e.diagram.num_crossings() <= 8) pool.push_back(e.diagram);
  for (int i = 0; i < 10; ++i) pool.push_back(gen::braid(rng, 3, 7));
  for (const auto& d : pool)
    for (int c = 0; c < d.num_crossings(); ++c) {
      Diagram g = band_sum(d, {hopf_recipe(d, c)});
      Diagram cc = crossing_change(d, c);
      CHECK(oracle::conway(g) == oracle::conway(cc));
      CHECK(lks(g) == lks(cc));
      ++checked;
    }
  CHECK(checked >= 10);
}

TEST_CASE("Borromean bands on the three-component unlink") {
  Diagram u = unlink(3);
  std::vector<BandRoute> routes;
  for (int a = 0; a < 3; ++a) routes.push_back({a, u.region({a, true}) == -1 ? Side::Left : Side::Right, 0.5, {}});
  Diagram d = band_sum(u, {{model("borromean"), routes}});
  CHECK(d.num_components() == 3);
  CHECK(lks(d) == std::vector<std::int64_t>{0, 0, 0});
  oracle::Poly p = oracle::conway(d);
  CHECK(!p.empty());
  CHECK(conway(d).coefficients() == p);
}

TEST_CASE("passes add two crossings each") {
  const Diagram& t = catalog_diagram("trefoil");
  LinkModel m = model("hopf");
  int built = 0;
  for (int f = 0; f < t.num_arcs(); ++f)
    for (Side sf : {Side::Left, Side::Right})
      for (int p = 0; p < t.num_arcs(); ++p)
        for (Side sp : {Side::Left, Side::Right}) {
          if (p == f || t.face_on(p, sp) != t.face_on(f, sf)) continue;
          int beyond = t.face_on(p, opposite(sp));
          for (int g = 0; g < t.num_arcs(); ++g)
            for (Side sg : {Side::Left, Side::Right}) {
              if (g == p || t.face_on(g, sg) != beyond) continue;
              for (bool over : {true, false}) {
                Attachment a{m, {{f, sf, 0.5, {{p, over, sp}}}, {g, sg, g == f ? 0.8 : 0.5, {}}}};
                try {
                  Diagram d = band_sum(t, {a});
                  CHECK(d.num_crossings() == t.num_crossings() + m.diagram.num_crossings() + 2);
                  CHECK(d.num_components() == 1);
                  ++built;
                } catch (const Error& e) {
                  CHECK(e.kind() == ErrorKind::Site);
                }
              }
            }
        }
  CHECK(built > 0);
}

TEST_CASE("band sum errors") {
  LinkModel h = model("hopf");
  CHECK(kind_of([&] { band_sum(unknot(), {{h, {{0, Side::Left, 0.5, {}}}}}); }) == ErrorKind::Argument);
  CHECK(kind_of([&] { band_sum(unknot(), {{h, {{0, Side::Left, 0.3, {}}, {9, Side::Left, 0.5, {}}}}}); }) ==
        ErrorKind::Argument);
  Diagram theta = parse_pd("V(1,2,3) V(3,2,1)");
  CHECK(kind_of([&] { band_sum(theta, {{h, {{0, Side::Left, 0.3, {}}, {0, Side::Left, 0.6, {}}}}}); }) ==
        ErrorKind::Argument);
}

TEST_CASE("band sums leave graph vertices alone") {
  Diagram g = r1_add(parse_pd("V(1,2,3) V(3,2,1)"), 0, Side::Left, 1);
  int free_arc = -1;
  for (int a = 0; a < g.num_arcs(); ++a)
    if (!g.touches_vertex(a)) free_arc = a;
  REQUIRE(free_arc >= 0);
  Diagram d = band_sum(g, {{model("hopf"), {{free_arc, Side::Left, 0.3, {}}, {free_arc, Side::Left, 0.7, {}}}}});
  REQUIRE(d.num_vertices() == g.num_vertices());
  for (int v = 0; v < d.num_vertices(); ++v) CHECK(d.vertex(v).arcs.size() == g.vertex(v).arcs.size());
  CHECK(cycle_invariants(d).knots.size() == 3);
}

}  // TEST_SUITE
