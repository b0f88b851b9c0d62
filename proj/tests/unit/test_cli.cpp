#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "reflekt/cli.hpp"
#include "reflekt/io.hpp"

using reflekt::io::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run reflekt_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = reflekt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("reflekt_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const std::string kChain3 = R"({"elements":["0","1","2"],"leq":[["0","1"],["1","2"]]})";

}  // namespace

TEST_CASE("check on the Johnstone space reports failure with a witness") {
  const auto r = reflekt_run({"check", "--space", "builtin:johnstone", "--property", "well-filtered"});
  CHECK(r.code == 0);
  CHECK(r.report()["verdict"] == false);
  CHECK(r.report().contains("witness"));
  CHECK(reflekt_run({"check", "--space", "builtin:johnstone", "--property", "wf", "--expect", "true"}).code == 1);
  CHECK(reflekt_run({"check", "--space", "builtin:johnstone", "--property", "d-space", "--expect", "true"}).code == 0);
}

TEST_CASE("ideals of a 3-chain") {
  const auto r = reflekt_run({"ideals", temp_file("chain3.json", kChain3)});
  REQUIRE(r.code == 0);
  CHECK(r.report()["count"] == 3);
  CHECK(r.report()["principal"] == 3);
}

TEST_CASE("constructions on a file input") {
  const auto f = temp_file("chain3b.json", kChain3);
  for (const auto& verb : {"topology", "irreducibles", "sobrify", "dcomplete", "reflect", "complete"}) {
    const auto r = reflekt_run({verb, f});
    INFO(verb << ": " << r.err);
    CHECK(r.code == 0);
    CHECK(reflekt_run({verb, f, "--dot"}).out.rfind("digraph", 0) == 0);
  }
  const auto rep = reflekt_run({"reflect", f, "--kind", "wf"}).report();
  for (const char* k : {"source", "kind", "target", "eta", "certificates"}) CHECK(rep.contains(k));
}

TEST_CASE("constructions on builtin spaces") {
  CHECK(reflekt_run({"reflect", "builtin:nat", "--kind", "sob"}).report()["target"] == "nat-top");
  CHECK(reflekt_run({"complete", "builtin:nat-ab", "--kind", "d"}).report()["target"] == "q");
  CHECK(reflekt_run({"witness", "--space", "builtin:cofinite"}).report()["verified"] == true);
  CHECK(reflekt_run({"irreducibles", "builtin:johnstone", "--scale", "bound=4"}).report()["irc"]["ok"] == true);
  const auto jt = reflekt_run({"reflect", "builtin:johnstone-top"});
  CHECK(jt.code == 1);
  CHECK(!jt.err.empty());
}

TEST_CASE("every builtin truncates to a valid poset") {
  for (auto s : reflekt::sym::kAllSpaces) {
    const auto r = reflekt_run({"truncate", "--space", "builtin:" + std::string(reflekt::sym::tag(s)), "--trunc", "4"});
    REQUIRE(r.code == 0);
    const auto p = reflekt::io::poset_from_json(r.report());
    CHECK(p.size() > 0);
    CHECK(reflekt::io::to_json(p) == r.report());
  }
}

TEST_CASE("laws") {
  const auto one = reflekt_run({"laws", "--law", "L10", "--law", "cofinite-eta"});
  CHECK(one.code == 0);
  CHECK(one.report().size() == 2);
  const auto all = reflekt_run({"laws"});
  CHECK(all.code == 0);
  REQUIRE(all.report().size() == 18);
  for (const auto& c : all.report()) CHECK(c["status"] == "pass");
  CHECK(reflekt_run({"laws", "--law", "L18", "--scale", "wf_cap=4"}).code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(reflekt_run({}).code == 2);
  CHECK(reflekt_run({"frobnicate"}).code == 2);
  CHECK(reflekt_run({"laws", "--law", "L99"}).code == 2);
  CHECK(reflekt_run({"laws", "--scale", "colour=1"}).code == 2);
  CHECK(reflekt_run({"check", "builtin:hilbert"}).code == 2);
  CHECK(reflekt_run({"check", "builtin:nat", "--property", "compact"}).code == 2);
  CHECK(reflekt_run({"ideals", "/nonexistent/p.json"}).code == 2);
  CHECK(reflekt_run({"ideals", temp_file("bad.json", "{not json")}).code == 2);
  CHECK(reflekt_run({"ideals", temp_file("cyc.json", R"({"elements":["a","b"],"leq":[["a","b"],["b","a"]]})")}).code == 2);
  CHECK(reflekt_run({"check", "builtin:nat", "--dot"}).code == 2);
  const auto r = reflekt_run({"frobnicate"});
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("the binary honours REFLEKT_MAX_CARRIER") {
  const char* bin = std::getenv("REFLEKT_CLI");
  if (!bin) return;
  const auto f = temp_file("chain3c.json", kChain3);
  const std::string base = std::string("\"") + bin + "\" ideals \"" + f + "\" > /dev/null 2>&1";
  auto status = [](const std::string& cmd) {
    const int s = std::system(cmd.c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  CHECK(status(base) == 0);
  CHECK(status("REFLEKT_MAX_CARRIER=2 " + base) == 2);
}
