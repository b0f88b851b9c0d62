#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "reflekt/error.hpp"
#include "reflekt/space.hpp"

using namespace reflekt;

namespace {

// Sierpiński space: 0 is the closed point.
FiniteSpace sierpinski() { return FiniteSpace::from_closed_sets({"0", "1"}, {{}, {0}, {0, 1}}); }

}  // namespace

TEST_CASE("topology axioms are enforced") {
  CHECK_THROWS_AS(FiniteSpace::from_closed_sets({"0", "1"}, {{0}, {0, 1}}), Error);
  CHECK_THROWS_AS(FiniteSpace::from_closed_sets({"0", "1", "2"}, {{}, {0}, {1}, {0, 1, 2}}), Error);
  const auto s = sierpinski();
  CHECK(s.is_t0());
  CHECK(s.closure(Subset{1}) == s.all());
  CHECK(s.open_sets().size() == 3);
}

TEST_CASE("T0 space counts match labeled posets") {
  const std::size_t known[] = {1, 1, 3, 19, 219};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(all_t0_spaces(n).size() == known[n]);
}

TEST_CASE("finite T0 spaces are sober, well-filtered and d-spaces") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& x : all_t0_spaces(n))
      for (auto p : {Property::Sober, Property::WellFiltered, Property::DSpace}) CHECK(check(x, p).holds);
}

TEST_CASE("non-T0 input is rejected") {
  const auto indiscrete = FiniteSpace::from_closed_sets({"a", "b"}, {{}, {0, 1}});
  CHECK(!indiscrete.is_t0());
  CHECK_THROWS_AS(check(indiscrete, Property::Sober), Error);
  CHECK_THROWS_AS(specialization(indiscrete), Error);
}

TEST_CASE("Scott and Alexandroff topologies agree on finite posets") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& p : all_posets(n)) {
      CHECK(scott_space(p) == alexandroff(p));
      CHECK(specialization(alexandroff(p)) == p);
    }
}

TEST_CASE("upper topology of a 2-antichain with bottom is coarser than Alexandroff") {
  const auto v = FinitePoset::from_pairs({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  CHECK(upper_space(v).closed_sets().size() <= alexandroff(v).closed_sets().size());
  CHECK(specialization(upper_space(v)) == v);
}

TEST_CASE("closure families on Sierpiński space") {
  const auto s = sierpinski();
  CHECK(point_closures(s).size() == 2);
  CHECK(irreducibles(s).size() == 2);
  CHECK(directed_closures(s).size() == 2);
  CHECK(compact_saturated(s).members.size() == 2);
}

TEST_CASE("Hoare spaces") {
  const auto s = sierpinski();
  CHECK_THROWS_AS(hoare_space(s, {Subset{}}), Error);
  CHECK_THROWS_AS(hoare_space(s, {Subset{1}}), Error);
  const auto h = hoare_space(s, {Subset{0}, Subset{0, 1}});
  CHECK(check(h.space, Property::Sober).holds);
  const auto eta = canonical_map(s, h);
  REQUIRE(eta);
  CHECK(is_embedding(s, h.space, *eta));
}

TEST_CASE("maps, equalizers and subspaces") {
  const auto s = sierpinski();
  const auto maps = continuous_maps(s, s);
  CHECK(maps.size() == 3);
  const auto e = equalizer(ContinuousMap{s, s, maps[0]}, ContinuousMap{s, s, maps[0]});
  CHECK(e.points == s.all());
  CHECK_THROWS_AS(subspace(s, Subset{1}, SubspaceKind::Closed), Error);
  CHECK(subspace(s, Subset{1}, SubspaceKind::Saturated).space.size() == 1);
}

TEST_CASE("X_top adds a fresh top point") {
  const auto x = FiniteSpace::from_closed_sets({"⊤"}, {{}, {0}});
  const auto t = x_top(x);
  CHECK(t.space.size() == 2);
  CHECK(t.space.label(t.top) != "⊤");
  CHECK(t.space.point_closure(t.top) == t.space.all());
}

TEST_CASE("homeomorphism search") {
  const auto a = FiniteSpace::from_closed_sets({"x", "y"}, {{}, {1}, {0, 1}});
  CHECK(find_homeomorphism(sierpinski(), a).has_value());
  CHECK(!find_homeomorphism(sierpinski(), FiniteSpace::from_closed_sets({"x", "y"}, {{}, {0}, {1}, {0, 1}})));
}
