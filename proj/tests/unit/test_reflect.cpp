#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "reflekt/error.hpp"
#include "reflekt/reflect.hpp"

using namespace reflekt;
using sym::SpaceId;

namespace {

FinitePoset vee() { return FinitePoset::from_pairs({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}); }

}  // namespace

TEST_CASE("kind names") {
  for (auto k : kAllKinds) CHECK(parse_kfamily(to_string(k)) == k);
  CHECK(parse_kfamily("well-filtered") == KFamily::WF);
  CHECK(!parse_kfamily("t2"));
}

TEST_CASE("finite K-sets collapse to point closures") {
  for (const auto& x : all_t0_spaces(3))
    for (auto k : kAllKinds) {
      const auto iv = kset_interval(x, k);
      REQUIRE(iv.resolved);
      CHECK(iv.sandwich_holds);
      CHECK(iv.resolved->size() == x.size());
    }
}

TEST_CASE("reflections of finite spaces are homeomorphic to the source") {
  for (const auto& x : all_t0_spaces(3)) {
    const auto r = sobrify(x);
    CHECK(r.verified());
    CHECK(find_homeomorphism(x, r.target.space).has_value());
  }
}

TEST_CASE("the sober reflection factors maps uniquely") {
  const auto x = alexandroff(vee());
  const auto u = universal_property_check(sobrify(x), 3);
  CHECK(u.ok());
  CHECK(u.maps > 0);
}

TEST_CASE("completions of a finite poset are its ideals") {
  const auto p = vee();
  for (auto k : kAllKinds) {
    const auto c = d_completion_alexandroff(p, k);
    CHECK(c.verified());
    CHECK(find_isomorphism(c.target, ideals(p).as_poset(p)).has_value());
    CHECK(ks_completion(p, k).verified());
  }
}

TEST_CASE("ideal extension") {
  const auto p = vee();
  const auto two = FinitePoset::from_pairs({"0", "1"}, {{"0", "1"}});
  for (const auto& g : monotone_maps(p, two)) {
    const auto e = ideal_extension(MonotoneMap{p, two, g});
    CHECK(e.factors);
    CHECK(e.scott_continuous);
  }
  CHECK_THROWS_AS(ideal_extension(MonotoneMap{two, two, {1, 0}}), Error);
}

TEST_CASE("symbolic K-sets") {
  const auto iv = kset_interval(SpaceId::NatChain, KFamily::Sob);
  REQUIRE(iv.resolved);
  CHECK(iv.resolved->extra.size() == 1);
  CHECK(iv.resolved->extra.front() == sym::whole(SpaceId::NatChain));
  const auto top = kset_interval(SpaceId::NatTop, KFamily::Sob);
  REQUIRE(top.resolved);
  CHECK(top.resolved->extra.empty());
}

TEST_CASE("symbolic reflections") {
  for (auto k : kAllKinds) {
    const auto n = scott_kreflection(SpaceId::NatChain, k);
    CHECK(n.target == SpaceId::NatTop);
    CHECK(n.verified());
    const auto ab = scott_kreflection(SpaceId::NatAB, k);
    CHECK(ab.target == SpaceId::NatABC_Q);
    CHECK(ab.verified());
  }
  CHECK(scott_kreflection(SpaceId::Johnstone, KFamily::D).target == SpaceId::Johnstone);
  for (auto k : {KFamily::Sob, KFamily::WF}) {
    const auto j = scott_kreflection(SpaceId::Johnstone, k, 5);
    CHECK(!j.target);
    REQUIRE(j.not_scott);
    CHECK(j.not_scott->verified());
  }
  CHECK_THROWS_AS(scott_kreflection(SpaceId::CofiniteNat, KFamily::Sob), Error);
  CHECK(psi_isomorphism(SpaceId::NatAB, 8));
  CHECK(psi_isomorphism(SpaceId::NatChain, 8));
}

TEST_CASE("symbolic completions") {
  CHECK(d_completion_alexandroff(SpaceId::NatChain).target == SpaceId::NatTop);
  CHECK(ks_completion(SpaceId::NatAB, KFamily::WF).target == SpaceId::NatABC_Q);
  CHECK_THROWS_AS(d_completion_alexandroff(SpaceId::CofiniteNat), Error);
}

TEST_CASE("step-map universal property, small bounds") {
  CHECK(universal_property_check(SpaceId::NatChain, 3, 3).ok());
  CHECK(universal_property_check(SpaceId::NatAB, 3, 3).ok());
  CHECK(universal_property_alexandroff(vee(), 3).ok());
}
