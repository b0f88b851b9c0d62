#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "reflekt/error.hpp"
#include "reflekt/symbolic.hpp"

using namespace reflekt;
using namespace reflekt::sym;

TEST_CASE("tags round-trip") {
  for (auto s : kAllSpaces) CHECK(parse_space(tag(s)) == s);
  CHECK(!parse_space("reals"));
}

TEST_CASE("Johnstone order") {
  const auto s = SpaceId::Johnstone;
  CHECK(leq(s, Point::pair(1, 3), Point::pair(1, 4)));
  CHECK(leq(s, Point::pair(1, 3), Point::omega(1)));
  CHECK(leq(s, Point::pair(1, 3), Point::omega(5)));
  CHECK(!leq(s, Point::pair(1, 6), Point::omega(5)));
  CHECK(!leq(s, Point::pair(2, 0), Point::pair(1, 7)));
  CHECK(!leq(s, Point::omega(2), Point::omega(3)));
  CHECK_THROWS_AS(leq(s, Point::a(), Point::pair(0, 0)), Error);
}

TEST_CASE("closed sets and normal forms") {
  const auto d = principal(SpaceId::Johnstone, Point::omega(1));
  CHECK(contains(d, Point::pair(0, 1)));
  CHECK(!contains(d, Point::pair(0, 2)));
  CHECK(contains(d, Point::pair(1, 100)));
  CHECK(is_closed(d));

  ClosedSetRep column = empty_set(SpaceId::Johnstone);
  column.heights[0] = kAll;
  CHECK(!is_closed(normalize(column)));

  CHECK(is_closed(finite_set(SpaceId::CofiniteNat, {1, 4})));
  ClosedSetRep cof = empty_set(SpaceId::CofiniteNat);
  cof.cofinite = true;
  cof.points = {0};
  CHECK(!is_closed(cof));

  const auto u = unite(principal(SpaceId::NatAB, Point::a()), principal(SpaceId::NatAB, Point::b()));
  CHECK(u == whole(SpaceId::NatAB));
  CHECK_THROWS_AS(unite(d, whole(SpaceId::NatChain)), Error);
}

TEST_CASE("irreducibility decisions") {
  CHECK(irreducible(whole(SpaceId::Johnstone)).irreducible);
  CHECK(irreducible(principal(SpaceId::Johnstone, Point::pair(2, 2))).irreducible);
  const auto two = down_closure(SpaceId::Johnstone, {Point::omega(1), Point::omega(3)});
  const auto v = irreducible(two);
  CHECK(!v.irreducible);
  REQUIRE(v.split);
  CHECK(unite(v.split->first, v.split->second) == two);
  CHECK(search_split(two).has_value());
  CHECK(irreducible(whole(SpaceId::NatChain)).irreducible);
  // ℕ misses its sup ⊤, so it is not closed in ℕ_⊤.
  CHECK(!is_closed(without_top(SpaceId::NatTop)));
  CHECK(irreducible(whole(SpaceId::CofiniteNat)).irreducible);
  CHECK(!irreducible(finite_set(SpaceId::CofiniteNat, {1, 2})).irreducible);
}

TEST_CASE("ir_c of the Johnstone space is the principal ideals and the whole space") {
  for (auto s : {SpaceId::Johnstone, SpaceId::JohnstoneTop}) {
    const auto e = johnstone_irc(s, 5);
    CHECK(e.ok());
    CHECK(e.disagreements.empty());
    // In 𝕁_⊤ the whole space is ↓⊤; 𝕁 is the one extra set either way.
    CHECK(e.irreducible_count == e.principal_count + 1);
  }
}

TEST_CASE("directed sups") {
  CHECK(sup_directed(SpaceId::NatTop, DirectedDesc::full_chain()).sup == Point::top());
  const auto ab = sup_directed(SpaceId::NatAB, DirectedDesc::full_chain());
  CHECK(!ab.sup);
  CHECK(ab.minimal_upper_bounds.size() == 2);
  const auto n = sup_directed(SpaceId::NatChain, DirectedDesc::full_chain());
  CHECK(!n.sup);
  CHECK(n.minimal_upper_bounds.empty());
  CHECK(sup_directed(SpaceId::Johnstone, DirectedDesc::column_cofinal(3)).sup == Point::omega(3));
  CHECK_THROWS_AS(sup_directed(SpaceId::Johnstone, DirectedDesc::finite({Point::omega(1), Point::omega(2)})), Error);
}

TEST_CASE("property verdicts of the catalog") {
  struct Row {
    SpaceId s;
    bool sober, wf, d;
  };
  const Row rows[] = {
      {SpaceId::NatChain, false, false, false},     {SpaceId::NatTop, true, true, true},
      {SpaceId::NatAB, false, false, false},        {SpaceId::NatABC_Q, true, true, true},
      {SpaceId::Johnstone, false, false, true},     {SpaceId::JohnstoneTop, false, false, true},
      {SpaceId::CofiniteNat, false, false, true},   {SpaceId::CofiniteNatTop, false, false, true},
  };
  for (const auto& r : rows) {
    INFO(tag(r.s));
    CHECK(check(r.s, Property::Sober).holds == r.sober);
    CHECK(check(r.s, Property::WellFiltered).holds == r.wf);
    CHECK(check(r.s, Property::DSpace).holds == r.d);
  }
}

TEST_CASE("well-filtered witnesses verify") {
  for (auto s : {SpaceId::Johnstone, SpaceId::JohnstoneTop, SpaceId::CofiniteNat, SpaceId::CofiniteNatTop}) {
    const auto w = wf_witness(s, 5);
    CHECK(w.members.size() == 32);
    CHECK(w.verified());
  }
  CHECK_THROWS_AS(wf_witness(SpaceId::NatTop), Error);
}

TEST_CASE("compactness of saturated sets") {
  CompactSatRep k;
  k.space = SpaceId::CofiniteNat;
  k.cofinite = true;
  k.points = {2};
  CHECK(is_compact(normalize(k)).compact);
  CompactSatRep band;
  band.space = SpaceId::Johnstone;
  band.band = CompactSatRep::Band{0, {}};
  const auto v = is_compact(normalize(band));
  CHECK(!v.compact);
  REQUIRE(v.cover);
  CHECK(v.cover->verified);
}

TEST_CASE("truncations and the oracle") {
  const auto t = truncate(SpaceId::Johnstone, 3);
  CHECK(t.poset.size() == 12);
  CHECK(truncate(SpaceId::NatABC_Q, 4).poset.size() == 7);
  CHECK_THROWS_AS(truncate(SpaceId::NatChain, 0), Error);
  for (auto s : kAllSpaces) CHECK(oracle_probe(s, 8, 300, 7).ok());
}

TEST_CASE("continuity of the unit into the Scott space of ir_c") {
  CHECK(eta_sigma_continuity(SpaceId::Johnstone).continuous);
  CHECK(!eta_sigma_continuity(SpaceId::CofiniteNat).continuous);
  CHECK_THROWS_AS(eta_sigma_continuity(SpaceId::JohnstoneTop), Error);
}
