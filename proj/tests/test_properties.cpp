#include <doctest.h>

#include <set>

#include "akmove/band.hpp"
#include "akmove/canonical.hpp"
#include "akmove/catalog.hpp"
#include "akmove/edits.hpp"
#include "akmove/invariants.hpp"
#include "akmove/lab.hpp"
#include "akmove/moves.hpp"
#include "akmove/pd_io.hpp"
#include "akmove/random.hpp"
#include "akmove/reidemeister.hpp"
#include "akmove/singular.hpp"
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

std::set<int> random_subset(gen::Rng& rng, int n, int size) {
  std::set<int> s;
  while (static_cast<int>(s.size()) < size) s.insert(gen::uniform(rng, 0, n - 1));
  return s;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("serialization round trip") {
  gen::Rng rng(1001);
  for (int i = 0; i < 100; ++i) {
    Diagram d = gen::braid(rng, 5, 12);
    Diagram back = parse_pd(serialize_pd(d));
    CHECK(canonical_code(back) == canonical_code(d));
    CHECK(serialize_pd(back) == serialize_pd(d));
  }
}

TEST_CASE("canonical code ignores arc and crossing names") {
  gen::Rng rng(1002);
  for (int i = 0; i < 100; ++i) {
    Diagram d = gen::braid(rng, 5, 12);
    if (d.num_loops() > 0) continue;
    Diagram e = gen::relabel(d, rng);
    CHECK(canonical_code(e) == canonical_code(d));
    CHECK(oracle::conway(e) == oracle::conway(d));
  }
}

TEST_CASE("resolution has 2^i terms") {
  gen::Rng rng(1003);
  for (int i = 0; i < 60; ++i) {
    Diagram d = gen::braid(rng, 4, 8);
    int order = gen::uniform(rng, 0, std::min(4, d.num_crossings()));
    FormalSum s = resolve({d, random_subset(rng, d.num_crossings(), order)});
    CHECK(s.size() == (std::size_t{1} << order));
    CHECK(s.coefficient_sum() == (order == 0 ? 1 : 0));
  }
}

TEST_CASE("reidemeister walks keep lk and Conway") {
  gen::Rng grng(1004);
  Rng rng(1004);
  for (int i = 0; i < 20; ++i) {
    Diagram d = gen::braid(grng, 4, 8);
    auto lk0 = lks(d);
    auto c0 = oracle::conway(d);
    for (int s = 0; s < 8; ++s) {
      d = reidemeister(d, random_reidemeister_site(d, rng));
      if (d.num_crossings() > 12) d = simplify(d);
    }
    CHECK(lks(d) == lk0);
    CHECK(conway(d).coefficients() == c0);
  }
}

TEST_CASE("crossing change is an involution") {
  gen::Rng rng(1005);
  for (int i = 0; i < 100; ++i) {
    Diagram d = gen::braid(rng, 4, 10);
    if (d.num_crossings() == 0) continue;
    int c = gen::uniform(rng, 0, d.num_crossings() - 1);
    CHECK(canonical_code(crossing_change(crossing_change(d, c), c)) == canonical_code(d));
  }
}

TEST_CASE("split unions have zero Conway polynomial") {
  gen::Rng rng(1006);
  for (int i = 0; i < 40; ++i) CHECK(conway(disjoint_union(gen::braid(rng, 3, 7), gen::braid(rng, 3, 7))).is_zero());
}

TEST_CASE("mirror keeps a2 and negates a3") {
  gen::Rng rng(1007);
  for (int i = 0; i < 40; ++i) {
    Diagram d = gen::braid(rng, 4, 9);
    CHECK(conway_coeff(mirror(d), 2) == conway_coeff(d, 2));
    CHECK(conway_coeff(mirror(d), 3) == -conway_coeff(d, 3));
  }
}

TEST_CASE("lk kills every random Hopf scheme with two attachments") {
  gen::Rng grng(1008);
  Rng rng(1008);
  int run = 0;
  while (run < 100) {
    Diagram base = gen::link(grng, 2, 7);
    if (base.num_crossings() < 3) continue;
    try {
      BandSumScheme s = random_scheme(rng, base, model("hopf"), 2, 2);
      CHECK(order_nk_test(invariant("lk"), s).pass);
      ++run;
    } catch (const Error&) {
    }
  }
}

TEST_CASE("delta keeps linking numbers on random links") {
  gen::Rng rng(1009);
  for (int i = 0; i < 60; ++i) {
    Diagram d = gen::link(rng, 3, 10);
    for (const auto& t : triangle_sites(d, true)) CHECK(lks(delta_move(d, t)) == lks(d));
  }
}

}  // TEST_SUITE
