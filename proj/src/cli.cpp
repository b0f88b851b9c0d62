#include "reflekt/cli.hpp"

#include <optional>
#include <variant>

#include "CLI11.hpp"
#include "reflekt/error.hpp"
#include "reflekt/io.hpp"
#include "reflekt/laws.hpp"

namespace reflekt::cli {

namespace {

using io::json;
using sym::SpaceId;

struct Options {
  std::string input;
  std::string space;
  bool dot = false;
  bool json_out = false;
  bool closed = false;
  std::optional<std::size_t> trunc;
  std::vector<std::string> scale;
  std::optional<std::uint64_t> seed;
  std::string expect;
  std::vector<std::string> laws;
  std::string property = "sober";
  std::string kind = "sob";
  std::string variant = "ks";
  std::string topology = "scott";
};

/// Exit 2 with a one-line diagnostic.
struct Usage {
  std::string message;
};

using Input = std::variant<FinitePoset, FiniteSpace, SpaceId>;

Input load(const Options& o) {
  const std::string& src = o.space.empty() ? o.input : o.space;
  if (src.empty()) throw Usage{"an input file or --space builtin:<tag> is required"};
  if (src.rfind("builtin:", 0) == 0) {
    const auto s = sym::parse_space(src.substr(8));
    if (!s) throw Usage{"unknown builtin space: " + src.substr(8)};
    return *s;
  }
  const json j = io::read_json_file(src);
  if (j.is_object() && j.contains("elements")) return io::poset_from_json(j);
  if (j.is_object() && j.contains("carrier")) return io::space_from_json(j);
  throw Error(ErrorKind::ParseError, src + ": neither a poset nor a space");
}

FiniteSpace as_space(const Input& in, const Options& o) {
  if (const auto* x = std::get_if<FiniteSpace>(&in)) return *x;
  const auto& p = std::get<FinitePoset>(in);
  if (o.topology == "scott") return scott_space(p);
  if (o.topology == "alexandroff") return alexandroff(p);
  return upper_space(p);
}

FinitePoset as_poset(const Input& in) {
  if (const auto* p = std::get_if<FinitePoset>(&in)) return *p;
  return specialization(std::get<FiniteSpace>(in));
}

KFamily kind_of(const Options& o) { return *parse_kfamily(o.kind); }

Scale scale_of(const Options& o) {
  Scale sc;
  for (const auto& kv : o.scale) sc.apply(kv);
  if (o.trunc) sc.trunc = *o.trunc;
  if (o.seed) sc.seed = *o.seed;
  return sc;
}

json labels_of(const std::vector<std::string>& labels, const std::vector<Subset>& family) {
  json out = json::array();
  for (const auto& s : family) {
    json set = json::array();
    s.for_each([&](std::size_t i) { set.push_back(labels[i]); });
    out.push_back(set);
  }
  return out;
}

json reps(const std::vector<sym::ClosedSetRep>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(io::to_json(r));
  return out;
}

void no_dot(const Options& o, std::string_view verb) {
  if (o.dot) throw Usage{"--dot is not available for " + std::string(verb) + " on this input"};
}

struct Result {
  json report;
  std::optional<std::string> dot;
  int code = 0;
};

Result topology(const Input& in, const Options& o, const Scale& sc) {
  if (const auto* s = std::get_if<SpaceId>(&in)) {
    no_dot(o, "topology");
    return {{{"space", sym::tag(*s)}, {"bound", sc.trunc}, {"closed", reps(sym::closed_normal_forms(*s, sc.trunc))}},
            std::nullopt};
  }
  const FiniteSpace x = as_space(in, o);
  json r = {{"space", io::to_json(x)}, {"t0", x.is_t0()}};
  if (std::holds_alternative<FinitePoset>(in)) r["topology"] = o.topology;
  if (x.is_t0()) r["specialization"] = io::to_json(specialization(x));
  return {r, io::closed_lattice_dot(x)};
}

Result irreducibles_verb(const Input& in, const Options& o, const Scale& sc) {
  if (const auto* s = std::get_if<SpaceId>(&in)) {
    no_dot(o, "irreducibles");
    if (sym::is_johnstone(*s))
      return {{{"space", sym::tag(*s)}, {"bound", sc.bound}, {"irc", io::to_json(sym::johnstone_irc(*s, sc.bound))}},
              std::nullopt};
    json found = json::array();
    for (const auto& r : sym::closed_normal_forms(*s, sc.trunc)) {
      if (sym::is_empty(r)) continue;
      const auto v = sym::irreducible(r);
      if (v.irreducible) found.push_back({{"set", io::to_json(r)}, {"reason", v.reason}});
    }
    return {{{"space", sym::tag(*s)}, {"bound", sc.trunc}, {"irreducibles", found}}, std::nullopt};
  }
  const FiniteSpace x = as_space(in, o);
  const auto& l = x.carrier();
  json r = {{"space", io::to_json(x)},
            {"point_closures", labels_of(l, point_closures(x))},
            {"directed_closures", labels_of(l, directed_closures(x))},
            {"irreducibles", labels_of(l, irreducibles(x))}};
  return {r, io::closed_lattice_dot(x)};
}

Result reflect_verb(const Input& in, const Options& o, const Scale& sc, KFamily kind) {
  if (const auto* s = std::get_if<SpaceId>(&in)) {
    no_dot(o, "reflect");
    const auto r = scott_kreflection(*s, kind, sc.bound);
    return {io::report(r), std::nullopt, r.verified() ? 0 : 1};
  }
  const FiniteReflection r = std::holds_alternative<FinitePoset>(in) && o.topology == "scott"
                                 ? scott_kreflection(std::get<FinitePoset>(in), kind)
                                 : kreflection(as_space(in, o), kind);
  return {io::report(r), io::hasse_dot(specialization(r.target.space), "target"), r.verified() ? 0 : 1};
}

Result complete_verb(const Input& in, const Options& o, KFamily kind, bool ds) {
  if (const auto* s = std::get_if<SpaceId>(&in)) {
    no_dot(o, "complete");
    const auto c = ds ? d_completion_alexandroff(*s, kind) : ks_completion(*s, kind);
    return {io::report(c), std::nullopt, c.verified() ? 0 : 1};
  }
  const FinitePoset p = as_poset(in);
  const Completion c = ds ? d_completion_alexandroff(p, kind) : ks_completion(p, kind);
  return {io::report(c), io::hasse_dot(c.target, "target"), c.verified() ? 0 : 1};
}

Result ideals_verb(const Input& in, const Scale& sc) {
  FinitePoset p;
  if (const auto* s = std::get_if<SpaceId>(&in))
    p = sym::truncate(*s, sc.trunc).poset;
  else
    p = as_poset(in);
  const IdealFamily f = ideals(p);
  std::size_t principal = 0;
  for (const auto& i : f.members)
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p.down(x) == i) ++principal;
  const FinitePoset order = f.as_poset(p);
  json r = {{"source", io::to_json(p)},
            {"count", f.members.size()},
            {"principal", principal},
            {"ideals", labels_of(p.labels(), f.members)},
            {"order", io::to_json(order)}};
  return {r, io::hasse_dot(order, "ideals")};
}

Result check_verb(const Input& in, const Options& o, const Scale& sc, Property prop) {
  no_dot(o, "check");
  json r;
  bool verdict = false;
  if (const auto* s = std::get_if<SpaceId>(&in)) {
    const auto c = sym::check(*s, prop);
    verdict = c.holds;
    r = {{"space", sym::tag(*s)}, {"property", to_string(prop)}, {"verdict", c.holds}, {"reason", c.reason}};
    json w = json::object();
    if (c.witness_set) w["set"] = io::to_json(*c.witness_set);
    if (c.wf) w["family"] = io::to_json(*c.wf);
    if (c.sup) {
      w["directed_sup"] = c.sup->sup ? json(sym::to_string(*c.sup->sup)) : json(nullptr);
      w["sup_reason"] = c.sup->reason;
    }
    if (!w.empty()) r["witness"] = w;
  } else {
    const FiniteSpace x = as_space(in, o);
    const auto c = check(x, prop, sc.wf_cap);
    verdict = c.holds;
    r = {{"space", io::to_json(x)},
         {"property", to_string(prop)},
         {"verdict", c.holds},
         {"instances", c.instances},
         {"reason", c.detail}};
    if (!c.holds) {
      json w = json::object();
      const auto& l = x.carrier();
      if (c.witness_set) w["set"] = labels_of(l, {*c.witness_set}).front();
      if (!c.witness_family.empty()) w["family"] = labels_of(l, c.witness_family);
      if (c.witness_open) w["open"] = labels_of(l, {*c.witness_open}).front();
      r["witness"] = w;
    }
  }
  int code = 0;
  if (!o.expect.empty() && verdict != (o.expect == "true")) code = 1;
  return {r, std::nullopt, code};
}

Result witness_verb(const Input& in, const Options& o, const Scale& sc) {
  no_dot(o, "witness");
  if (const auto* s = std::get_if<SpaceId>(&in)) {
    const auto w = sym::wf_witness(*s, sc.cap);
    return {io::to_json(w), std::nullopt, w.verified() ? 0 : 1};
  }
  Options copy = o;
  copy.expect.clear();
  return check_verb(in, copy, sc, Property::WellFiltered);
}

Result laws_verb(const Options& o, const Scale& sc) {
  no_dot(o, "laws");
  std::vector<Certificate> certs;
  if (o.laws.empty()) {
    certs = run_all(sc);
  } else {
    for (const auto& id : o.laws) certs.push_back(run_law(id, sc));
  }
  json out = json::array();
  bool all = true;
  for (const auto& c : certs) {
    out.push_back(io::to_json(c));
    all = all && c.status == Status::Pass;
  }
  return {out, std::nullopt, all ? 0 : 1};
}

Result truncate_verb(const Input& in, const Options& o, const Scale& sc) {
  const auto* s = std::get_if<SpaceId>(&in);
  if (!s) throw Usage{"truncate needs --space builtin:<tag>"};
  const auto t = sym::truncate(*s, sc.trunc);
  return {io::to_json(t.poset, o.closed), io::hasse_dot(t.poset, sym::tag(*s))};
}

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownLaw:
    case ErrorKind::UnknownLabel:
    case ErrorKind::DuplicateLabel:
    case ErrorKind::CycleDetected:
    case ErrorKind::InvalidTopology:
    case ErrorKind::NotT0:
    case ErrorKind::BadPoint:
    case ErrorKind::CapExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite and symbolic K-reflections of posets and spaces", "reflekt"};
  app.require_subcommand(1, 1);
  Options o;

  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"topology", "closed sets of a space, or the Scott/Alexandroff/upper topology of a poset"},
      {"irreducibles", "point closures, directed closures and irreducible closed sets"},
      {"sobrify", "the sober reflection"},
      {"dcomplete", "the D-completion of a poset via its Alexandroff space"},
      {"ideals", "the ideals of a poset"},
      {"reflect", "the K-reflection (--kind sob|d|wf)"},
      {"complete", "a K-completion (--variant ds|ks)"},
      {"check", "decide sober, well-filtered or d-space"},
      {"witness", "a family witnessing failure of well-filteredness"},
      {"laws", "run the law catalog"},
      {"truncate", "the level-n fragment of a builtin space as a poset"},
  };
  for (const auto& [name, desc] : verbs) {
    auto* c = app.add_subcommand(name, desc);
    if (name != "laws") {
      c->add_option("input", o.input, "poset/space JSON file or builtin:<tag>");
      c->add_option("--space", o.space, "builtin:<tag> or a JSON file");
    }
    c->add_flag("--dot", o.dot, "emit DOT instead of JSON");
    c->add_flag("--json", o.json_out, "emit JSON (default)");
    c->add_option("--trunc", o.trunc, "truncation level")->check(CLI::PositiveNumber);
    c->add_option("--scale", o.scale, "key=value scale override (repeatable)");
    c->add_option("--seed", o.seed, "seed for sampled generation");
    if (name == "check")
      c->add_option("--expect", o.expect, "exit 1 unless the verdict matches")->check(CLI::IsMember({"true", "false"}));
    if (name == "check") c->add_option("--property", o.property, "sober | well-filtered | d-space");
    if (name == "reflect" || name == "complete") c->add_option("--kind", o.kind, "sob | d | wf");
    if (name == "complete") c->add_option("--variant", o.variant, "ds | ks")->check(CLI::IsMember({"ds", "ks"}));
    if (name == "laws") c->add_option("--law", o.laws, "law id or slug (repeatable)");
    if (name == "truncate") c->add_flag("--closed", o.closed, "emit every pair instead of the Hasse diagram");
    if (name != "laws" && name != "truncate")
      c->add_option("--topology", o.topology, "topology put on a poset input")
          ->check(CLI::IsMember({"scott", "alexandroff", "upper"}));
  }

  std::vector<const char*> argv{"reflekt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "reflekt: " << e.what() << "\n";
    return 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    if (o.dot && o.json_out) throw Usage{"--dot and --json are exclusive"};
    const auto prop = parse_property(o.property);
    if (!prop) throw Usage{"unknown property: " + o.property};
    if (!parse_kfamily(o.kind)) throw Usage{"unknown kind: " + o.kind};
    const Scale sc = scale_of(o);

    Result r;
    if (verb == "laws") {
      r = laws_verb(o, sc);
    } else {
      const Input in = load(o);
      if (verb == "topology") r = topology(in, o, sc);
      else if (verb == "irreducibles") r = irreducibles_verb(in, o, sc);
      else if (verb == "sobrify") r = reflect_verb(in, o, sc, KFamily::Sob);
      else if (verb == "reflect") r = reflect_verb(in, o, sc, kind_of(o));
      else if (verb == "dcomplete") r = complete_verb(in, o, KFamily::D, true);
      else if (verb == "complete") r = complete_verb(in, o, kind_of(o), o.variant == "ds");
      else if (verb == "ideals") r = ideals_verb(in, sc);
      else if (verb == "check") r = check_verb(in, o, sc, *prop);
      else if (verb == "witness") r = witness_verb(in, o, sc);
      else r = truncate_verb(in, o, sc);
    }
    if (o.dot) {
      if (!r.dot) throw Usage{"no DOT output for " + verb};
      out << *r.dot;
    } else {
      out << r.report.dump(2) << "\n";
    }
    return r.code;
  } catch (const Usage& u) {
    err << "reflekt " << verb << ": " << u.message << "\n";
    return 2;
  } catch (const Error& e) {
    err << "reflekt " << verb << ": " << e.what() << "\n";
    return is_input_error(e.kind()) ? 2 : 1;
  }
}

}  // namespace reflekt::cli
