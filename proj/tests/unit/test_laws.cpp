#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "reflekt/error.hpp"
#include "reflekt/laws.hpp"

using namespace reflekt;

TEST_CASE("catalog") {
  const auto& c = law_catalog();
  CHECK(c.size() == 18);
  std::set<std::string_view> ids, slugs;
  for (const auto& l : c) {
    ids.insert(l.id);
    slugs.insert(l.slug);
    CHECK(!l.anchor.empty());
  }
  CHECK(ids.size() == 18);
  CHECK(slugs.size() == 18);
}

TEST_CASE("scale overrides") {
  Scale sc;
  sc.apply("spaces=2");
  sc.apply("seed=9");
  CHECK(sc.spaces == 2);
  CHECK(sc.as_map().at("seed") == 9);
  CHECK_THROWS_AS(sc.apply("spaces"), Error);
  CHECK_THROWS_AS(sc.apply("colour=3"), Error);
  CHECK_THROWS_AS(sc.apply("spaces=x"), Error);
}

TEST_CASE("lookup by id or slug") {
  Scale sc;
  sc.spaces = 2;
  CHECK(run_law("L1", sc).slug == run_law("finite-collapse", sc).slug);
  CHECK_THROWS_AS(run_law("L99"), Error);
}

TEST_CASE("every law passes at a reduced scale") {
  Scale sc;
  for (const char* kv : {"spaces=3", "posets=3", "maps=3", "alex=2", "bound=4", "trunc=6", "cap=4", "steps=3", "targets=3"})
    sc.apply(kv);
  for (const auto& c : run_all(sc)) {
    INFO(c.id << " " << c.witness.value_or(""));
    CHECK(c.status == Status::Pass);
    CHECK(!c.counts.empty());
  }
}

TEST_CASE("a too-small cap is reported as capped, not passed") {
  Scale sc;
  sc.posets = 5;
  sc.wf_cap = 4;
  const auto c = run_law("L18", sc);
  CHECK(c.status == Status::Capped);
  CHECK(c.witness.has_value());
}
