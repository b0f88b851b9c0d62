#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "reflekt/error.hpp"
#include "reflekt/poset.hpp"

using namespace reflekt;

namespace {

FinitePoset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<FinitePoset::LabelPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i) pairs.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return FinitePoset::from_pairs(labels, pairs);
}

FinitePoset antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, char('a' + i)));
  return FinitePoset::from_pairs(labels, {});
}

}  // namespace

TEST_CASE("ingestion closes the relation and rejects cycles") {
  const auto p = FinitePoset::from_pairs({"c", "a", "b"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(p.leq(p.index("a"), p.index("c")));
  CHECK(p.covers().size() == 2);
  CHECK(p.relation().size() == 6);
  CHECK_THROWS_AS(FinitePoset::from_pairs({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  CHECK_THROWS_AS(FinitePoset::from_pairs({"a"}, {{"a", "z"}}), Error);
  CHECK_THROWS_AS(FinitePoset::from_pairs({"a", "a"}, {}), Error);
}

TEST_CASE("labeled poset counts") {
  const std::size_t known[] = {1, 1, 3, 19, 219, 4231};
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(all_posets(n).size() == known[n]);
    if (n <= 4) CHECK(count_posets_brute_force(n) == known[n]);
  }
}

TEST_CASE("ideals of a chain are its principal ideals") {
  const auto p = chain(3);
  const auto f = ideals(p);
  REQUIRE(f.members.size() == 3);
  for (std::size_t x = 0; x < 3; ++x) CHECK(std::find(f.members.begin(), f.members.end(), p.down(x)) != f.members.end());
  CHECK(ideals(antichain(2)).members.size() == 2);
  CHECK(find_isomorphism(f.as_poset(p), p).has_value());
}

TEST_CASE("finite posets: way-below is the order and every point is compact") {
  for (const auto& p : all_posets(4)) {
    const auto w = way_below(p);
    CHECK(w.compact == p.carrier());
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y) CHECK(w.holds(x, y) == p.leq(x, y));
  }
}

TEST_CASE("sups, dcpos and lattices") {
  const auto a = antichain(2);
  CHECK(!supremum(a, a.carrier()));
  CHECK(!is_complete_lattice(a));
  CHECK(is_dcpo(a));
  CHECK(is_noetherian(a));
  CHECK(is_complete_lattice(chain(3)));
  CHECK(!is_complete_lattice(FinitePoset{}));
  CHECK(is_directed(chain(3), chain(3).carrier()));
  CHECK(!is_directed(a, a.carrier()));
  CHECK(!is_directed(a, Subset{}));
}

TEST_CASE("add_top always adjoins a fresh point") {
  const auto t = add_top(chain(2));
  CHECK(t.poset.size() == 3);
  CHECK(t.poset.label(t.top) == "⊤");
  const auto tt = add_top(t.poset);
  CHECK(tt.poset.size() == 4);
  CHECK(tt.poset.label(tt.top) != "⊤");
  for (std::size_t x = 0; x < tt.poset.size(); ++x) CHECK(tt.poset.leq(x, tt.top));
}

TEST_CASE("monotone maps between finite posets are Scott continuous") {
  const auto p = chain(2);
  const auto q = antichain(2);
  std::size_t n = 0;
  for (const auto& g : monotone_maps(q, p)) {
    CHECK(scott_continuity_check(MonotoneMap{q, p, g}).continuous);
    ++n;
  }
  CHECK(n == 4);
  CHECK(monotone_maps(p, p).size() == 3);
  CHECK_THROWS_AS(scott_continuity_check(MonotoneMap{p, p, {1, 0}}), Error);
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(chain(3), chain(3)).has_value());
  CHECK(!find_isomorphism(chain(3), antichain(3)).has_value());
  CHECK_THROWS_AS(find_isomorphism(antichain(9), antichain(9)), Error);
}
