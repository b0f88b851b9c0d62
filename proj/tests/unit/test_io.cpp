#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "reflekt/error.hpp"
#include "reflekt/io.hpp"

using namespace reflekt;
using io::json;

TEST_CASE("poset JSON round trip emits the Hasse diagram") {
  const auto j = json::parse(R"({"elements":["a","b","c"],"leq":[["a","b"],["b","c"],["a","c"]]})");
  const auto p = io::poset_from_json(j);
  const auto out = io::to_json(p);
  CHECK(out["leq"].size() == 2);
  CHECK(!out.contains("closed"));
  CHECK(io::poset_from_json(out) == p);
  const auto closed = io::to_json(p, true);
  CHECK(closed["closed"] == true);
  CHECK(closed["leq"].size() == 6);
  CHECK(io::poset_from_json(closed) == p);
}

TEST_CASE("every finite poset round-trips") {
  for (const auto& p : all_posets(4)) CHECK(io::poset_from_json(io::to_json(p)) == p);
}

TEST_CASE("malformed posets") {
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"leq":[]})")), Error);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"elements":"a"})")), Error);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"elements":["a"],"leq":[["a"]]})")), Error);
  CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"elements":["a","b"],"leq":[["a","b"],["b","a"]]})")), Error);
}

TEST_CASE("space JSON round trip") {
  const auto j = json::parse(R"({"carrier":["y","x"],"closed":[[],["x"],["x","y"]]})");
  const auto x = io::space_from_json(j);
  CHECK(x.closed_sets().size() == 3);
  CHECK(io::space_from_json(io::to_json(x)) == x);
  for (const auto& s : all_t0_spaces(3)) CHECK(io::space_from_json(io::to_json(s)) == s);
  CHECK_THROWS_AS(io::space_from_json(json::parse(R"({"carrier":["x"],"closed":[["z"]]})")), Error);
  CHECK_THROWS_AS(io::space_from_json(json::parse(R"({"carrier":["x","y"],"closed":[["x"]]})")), Error);
}

TEST_CASE("closed-set reps round-trip for every space") {
  for (auto s : sym::kAllSpaces)
    for (const auto& r : sym::closed_normal_forms(s, 3)) {
      const auto j = io::to_json(r);
      CHECK(j["space"] == sym::tag(s));
      CHECK(io::closed_rep_from_json(j) == r);
    }
}

TEST_CASE("non-closed reps are refused") {
  CHECK_THROWS_AS(io::closed_rep_from_json(json::parse(R"({"space":"cofinite","cofinite":true,"points":[1]})")), Error);
  CHECK_THROWS_AS(io::closed_rep_from_json(json::parse(R"({"space":"nat","height":2,"a":true})")), Error);
  CHECK_THROWS_AS(io::closed_rep_from_json(json::parse(R"({"space":"plane"})")), Error);
}

TEST_CASE("DOT draws covering edges only") {
  const auto p = io::poset_from_json(json::parse(R"({"elements":["a","b","c"],"leq":[["a","b"],["b","c"]]})"));
  const auto dot = io::hasse_dot(p);
  CHECK(dot.rfind("digraph", 0) == 0);
  std::size_t edges = 0;
  for (auto pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) ++edges;
  CHECK(edges == 2);
  const auto lattice = io::closed_lattice_dot(alexandroff(p));
  CHECK(lattice.find("->") != std::string::npos);
}

TEST_CASE("reports carry the common fields") {
  const auto p = io::poset_from_json(json::parse(R"({"elements":["a","b"],"leq":[]})"));
  const auto r = io::report(kreflection(alexandroff(p), KFamily::WF));
  for (const char* k : {"source", "kind", "target", "eta", "certificates"}) CHECK(r.contains(k));
  const auto s = io::report(scott_kreflection(sym::SpaceId::Johnstone, KFamily::Sob, 4));
  CHECK(s["target"].is_null());
  CHECK(s["not_scott"]["verified"] == true);
}
