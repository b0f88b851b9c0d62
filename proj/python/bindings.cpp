#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reflekt/cli.hpp"
#include "reflekt/error.hpp"
#include "reflekt/io.hpp"
#include "reflekt/laws.hpp"

namespace py = pybind11;
using namespace reflekt;
using io::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

FinitePoset poset(const std::string& text) { return io::poset_from_json(parse(text)); }

FiniteSpace space(const std::string& text) {
  const json j = parse(text);
  if (j.contains("elements")) return scott_space(io::poset_from_json(j));
  return io::space_from_json(j);
}

sym::SpaceId builtin(const std::string& tag) {
  const auto s = sym::parse_space(tag);
  if (!s) throw Error(ErrorKind::ParseError, "unknown builtin space: " + tag);
  return *s;
}

KFamily kind(const std::string& name) {
  const auto k = parse_kfamily(name);
  if (!k) throw Error(ErrorKind::ParseError, "unknown kind: " + name);
  return *k;
}

Property property(const std::string& name) {
  const auto p = parse_property(name);
  if (!p) throw Error(ErrorKind::ParseError, "unknown property: " + name);
  return *p;
}

Scale scale(const std::map<std::string, std::uint64_t>& overrides) {
  Scale sc;
  for (const auto& [k, v] : overrides) sc.apply(k + "=" + std::to_string(v));
  return sc;
}

}  // namespace

PYBIND11_MODULE(_reflekt, m) {
  m.doc() = "K-reflections of finite and symbolic spaces";

  py::register_exception<Error>(m, "ReflektError", PyExc_ValueError);

  m.def("normalize_poset", [](const std::string& p, bool closed) { return io::to_json(poset(p), closed).dump(); },
        py::arg("poset"), py::arg("closed") = false);
  m.def("topology", [](const std::string& p, const std::string& which) {
    const FinitePoset q = poset(p);
    if (which == "scott") return io::to_json(scott_space(q)).dump();
    if (which == "alexandroff") return io::to_json(alexandroff(q)).dump();
    if (which == "upper") return io::to_json(upper_space(q)).dump();
    throw Error(ErrorKind::ParseError, "unknown topology: " + which);
  });
  m.def("ideals", [](const std::string& p) {
    const FinitePoset q = poset(p);
    return io::to_json(ideals(q).as_poset(q)).dump();
  });
  m.def("check_finite", [](const std::string& x, const std::string& prop) {
    const auto c = check(space(x), property(prop));
    return json{{"verdict", c.holds}, {"instances", c.instances}, {"reason", c.detail}}.dump();
  });
  m.def("check_builtin", [](const std::string& tag, const std::string& prop) {
    const auto c = sym::check(builtin(tag), property(prop));
    return json{{"verdict", c.holds}, {"reason", c.reason}}.dump();
  });
  m.def("reflect_finite", [](const std::string& x, const std::string& k) {
    return io::report(kreflection(space(x), kind(k))).dump();
  });
  m.def("reflect_builtin", [](const std::string& tag, const std::string& k, std::size_t bound) {
    return io::report(scott_kreflection(builtin(tag), kind(k), bound)).dump();
  }, py::arg("tag"), py::arg("kind"), py::arg("bound") = 6);
  m.def("complete_finite", [](const std::string& p, const std::string& k, bool ds) {
    const FinitePoset q = poset(p);
    return io::report(ds ? d_completion_alexandroff(q, kind(k)) : ks_completion(q, kind(k))).dump();
  });
  m.def("complete_builtin", [](const std::string& tag, const std::string& k, bool ds) {
    const auto s = builtin(tag);
    return io::report(ds ? d_completion_alexandroff(s, kind(k)) : ks_completion(s, kind(k))).dump();
  });
  m.def("wf_witness", [](const std::string& tag, std::size_t cap) {
    return io::to_json(sym::wf_witness(builtin(tag), cap)).dump();
  }, py::arg("tag"), py::arg("cap") = 8);
  m.def("johnstone_irc", [](const std::string& tag, std::size_t bound) {
    return io::to_json(sym::johnstone_irc(builtin(tag), bound), false).dump();
  }, py::arg("tag"), py::arg("bound") = 6);
  m.def("truncate", [](const std::string& tag, std::size_t n, bool closed) {
    return io::to_json(sym::truncate(builtin(tag), n).poset, closed).dump();
  }, py::arg("tag"), py::arg("n"), py::arg("closed") = false);
  m.def("oracle", [](const std::string& tag, std::size_t level, std::size_t probes, std::uint64_t seed) {
    const auto r = sym::oracle_probe(builtin(tag), level, probes, seed);
    return json{{"probes", r.probes}, {"comparisons", r.comparisons}, {"mismatches", r.mismatches}}.dump();
  });
  m.def("laws", [](const std::vector<std::string>& ids, const std::map<std::string, std::uint64_t>& overrides) {
    const Scale sc = scale(overrides);
    json out = json::array();
    if (ids.empty()) {
      for (const auto& c : run_all(sc)) out.push_back(io::to_json(c));
    } else {
      for (const auto& id : ids) out.push_back(io::to_json(run_law(id, sc)));
    }
    return out.dump();
  });
  m.def("law_ids", [] {
    std::vector<std::string> out;
    for (const auto& l : law_catalog()) out.emplace_back(l.id);
    return out;
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
