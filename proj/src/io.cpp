#include "reflekt/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

#include "reflekt/error.hpp"

namespace reflekt::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (e.is_string())
      out.push_back(e.get<std::string>());
    else if (e.is_number_integer())
      out.push_back(std::to_string(e.get<long long>()));
    else
      bad(std::string(what) + " entries must be strings");
  }
  return out;
}

json subset_json(const std::vector<std::string>& labels, const Subset& s) {
  json out = json::array();
  s.for_each([&](std::size_t i) { out.push_back(labels[i]); });
  return out;
}

json height_json(std::int64_t h) {
  if (h == sym::kAll) return "all";
  if (h < 0) return nullptr;
  return h;
}

std::int64_t height_from(const json& j) {
  if (j.is_null()) return -1;
  if (j.is_string() && j.get<std::string>() == "all") return sym::kAll;
  if (j.is_number_integer() && j.get<long long>() >= -1) return j.get<std::int64_t>();
  bad("height must be a natural, \"all\" or null");
}

std::set<std::uint64_t> index_set(const json& j) {
  if (!j.is_array()) bad("index sets must be arrays");
  std::set<std::uint64_t> out;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) bad("indices must be naturals");
    out.insert(e.get<std::uint64_t>());
  }
  return out;
}

bool flag(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) return false;
  if (!it->is_boolean()) bad(std::string("\"") + key + "\" must be a boolean");
  return it->get<bool>();
}

std::string node_id(std::size_t i) { return "n" + std::to_string(i); }

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

json certificates(const std::vector<Evidence>& ev) {
  json out = json::array();
  for (const auto& e : ev) out.push_back(to_json(e));
  return out;
}

json eta_json(const FiniteSpace& source, const HoareSpace& target, const std::vector<std::size_t>& eta) {
  json out = json::object();
  for (std::size_t i = 0; i < eta.size(); ++i) out[source.label(i)] = target.space.label(eta[i]);
  return out;
}

}  // namespace

json to_json(const FinitePoset& p, bool closed) {
  json leq = json::array();
  if (closed) {
    for (auto [x, y] : p.relation()) leq.push_back({p.label(x), p.label(y)});
  } else {
    for (auto [x, y] : p.covers()) leq.push_back({p.label(x), p.label(y)});
  }
  json out = {{"elements", p.labels()}, {"leq", leq}};
  if (closed) out["closed"] = true;
  return out;
}

FinitePoset poset_from_json(const json& j) {
  auto labels = string_list(field(j, "elements"), "elements");
  std::vector<FinitePoset::LabelPair> pairs;
  const auto it = j.find("leq");
  if (it != j.end()) {
    if (!it->is_array()) bad("leq must be an array");
    for (const auto& e : *it) {
      const auto pr = string_list(e, "leq pair");
      if (pr.size() != 2) bad("leq entries must be pairs");
      pairs.emplace_back(pr[0], pr[1]);
    }
  }
  return FinitePoset::from_pairs(std::move(labels), pairs);
}

json to_json(const FiniteSpace& x) {
  json closed = json::array();
  for (const auto& c : x.closed_sets()) closed.push_back(subset_json(x.carrier(), c));
  return {{"carrier", x.carrier()}, {"closed", closed}};
}

FiniteSpace space_from_json(const json& j) {
  auto carrier = string_list(field(j, "carrier"), "carrier");
  const auto& cl = field(j, "closed");
  if (!cl.is_array()) bad("closed must be an array");
  std::vector<std::vector<std::string>> raw;
  for (const auto& c : cl) raw.push_back(string_list(c, "closed set"));
  // Subsets refer to sorted positions; sort a copy to resolve labels.
  auto sorted = carrier;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Subset> closed;
  for (const auto& c : raw) {
    Subset s;
    for (const auto& name : c) {
      const auto pos = std::lower_bound(sorted.begin(), sorted.end(), name);
      if (pos == sorted.end() || *pos != name) throw Error(ErrorKind::UnknownLabel, name);
      s.insert(static_cast<std::size_t>(pos - sorted.begin()));
    }
    closed.push_back(s);
  }
  return FiniteSpace::from_closed_sets(std::move(carrier), std::move(closed));
}

json to_json(const sym::ClosedSetRep& r) {
  using namespace sym;
  json out = {{"space", tag(r.space)}};
  if (is_nat_like(r.space)) {
    out["height"] = height_json(r.height);
    for (auto [name, pt, on] : {std::tuple{"a", Point::a(), r.a}, std::tuple{"b", Point::b(), r.b},
                                std::tuple{"c", Point::c(), r.c}, std::tuple{"top", Point::top(), r.top}})
      if (valid_point(r.space, pt)) out[name] = on;
  } else if (is_johnstone(r.space)) {
    out["whole"] = r.whole;
    if (!r.whole) {
      out["omega"] = r.omega;
      out["floor"] = r.floor;
      json h = json::object();
      for (const auto& [col, height] : r.heights) h[std::to_string(col)] = height_json(height);
      out["heights"] = h;
    }
    if (has_top(r.space)) out["top"] = r.top;
  } else {
    out["cofinite"] = r.cofinite;
    out["points"] = r.points;
    if (has_top(r.space)) out["top"] = r.top;
  }
  out["text"] = to_string(r);
  return out;
}

sym::ClosedSetRep closed_rep_from_json(const json& j) {
  using namespace sym;
  const auto name = field(j, "space");
  if (!name.is_string()) bad("space must be a tag");
  const auto s = parse_space(name.get<std::string>());
  if (!s) bad("unknown space tag: " + name.get<std::string>());
  ClosedSetRep r = empty_set(*s);
  if (is_nat_like(*s)) {
    r.height = height_from(field(j, "height"));
    r.a = flag(j, "a");
    r.b = flag(j, "b");
    r.c = flag(j, "c");
    r.top = flag(j, "top");
  } else if (is_johnstone(*s)) {
    r.whole = flag(j, "whole");
    r.top = flag(j, "top");
    if (!r.whole) {
      if (j.contains("omega")) r.omega = index_set(j["omega"]);
      if (j.contains("floor")) r.floor = height_from(j["floor"]);
      if (j.contains("heights")) {
        if (!j["heights"].is_object()) bad("heights must be an object");
        for (const auto& [col, h] : j["heights"].items()) {
          std::uint64_t c = 0;
          const auto [ptr, ec] = std::from_chars(col.data(), col.data() + col.size(), c);
          if (ec != std::errc{} || ptr != col.data() + col.size()) bad("height keys must be column numbers");
          r.heights[c] = height_from(h);
        }
      }
    }
  } else {
    r.cofinite = flag(j, "cofinite");
    r.top = flag(j, "top");
    if (j.contains("points")) r.points = index_set(j["points"]);
  }
  for (auto [on, pt] : {std::pair{r.a, Point::a()}, std::pair{r.b, Point::b()}, std::pair{r.c, Point::c()},
                        std::pair{r.top, Point::top()}})
    if (on && !valid_point(*s, pt)) throw Error(ErrorKind::BadPoint, to_string(pt) + " is not in " + std::string(tag(*s)));
  const ClosedSetRep n = normalize(r);
  if (!is_closed(n)) throw Error(ErrorKind::NotClosed, to_string(n));
  return n;
}

json to_json(const sym::CompactSatRep& k) { return {{"space", sym::tag(k.space)}, {"text", sym::to_string(k)}}; }

json to_json(const sym::WfWitness& w) {
  json out = {{"space", sym::tag(w.space)},
              {"cap", w.cap},
              {"family", w.family},
              {"members", w.members.size()},
              {"intersection", to_json(w.intersection)},
              {"open", w.open_description},
              {"open_complement", to_json(w.open_complement)},
              {"pairs_checked", w.pairs_checked}};
  out["clauses"] = {{"compact_members", w.compact_members},
                    {"filtered", w.filtered},
                    {"intersection_inside", w.intersection_inside},
                    {"no_member_inside", w.no_member_inside}};
  out["verified"] = w.verified();
  return out;
}

json to_json(const sym::IrcEnumeration& e, bool list_irreducibles) {
  auto reps = [](const std::vector<sym::ClosedSetRep>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(to_json(r));
    return a;
  };
  json out = {{"enumerated", e.enumerated},
              {"irreducible", e.irreducible_count},
              {"principal", e.principal_count},
              {"search_checked", e.search_checked},
              {"unexpected", reps(e.unexpected)},
              {"missing", reps(e.missing)},
              {"disagreements", reps(e.disagreements)},
              {"bad_splits", reps(e.bad_splits)},
              {"ok", e.ok()}};
  if (list_irreducibles) out["irreducibles"] = reps(e.irreducibles);
  return out;
}

json to_json(const Certificate& c) {
  json out = {{"law", c.id}, {"slug", c.slug}, {"anchor", c.anchor}, {"status", to_string(c.status)}};
  out["counts"] = c.counts;
  if (c.witness) out["witness"] = *c.witness;
  if (!c.notes.empty()) out["notes"] = c.notes;
  return out;
}

json to_json(const Evidence& e) {
  json out = {{"law", e.name}, {"status", e.passed ? "pass" : "fail"}, {"counts", json::object()}};
  if (!e.detail.empty()) out[e.passed ? "detail" : "witness"] = e.detail;
  return out;
}

json report(const FiniteReflection& r) {
  json target = to_json(r.target.space);
  target["stands_for"] = json::array();
  for (const auto& a : r.target.family) target["stands_for"].push_back(subset_json(r.source.carrier(), a));
  return {{"source", to_json(r.source)},
          {"kind", to_string(r.kind)},
          {"target", target},
          {"eta", eta_json(r.source, r.target, r.eta)},
          {"certificates", certificates(r.evidence)}};
}

json report(const Completion& c) {
  json eta = json::object();
  for (std::size_t i = 0; i < c.map.size(); ++i) eta[c.source.label(i)] = c.target.label(c.map[i]);
  return {{"source", to_json(c.source)},
          {"kind", to_string(c.kind)},
          {"variant", to_string(c.variant)},
          {"target", to_json(c.target)},
          {"eta", eta},
          {"certificates", certificates(c.evidence)}};
}

json report(const SymbolicReflection& r) {
  json out = {{"source", sym::tag(r.source)},
              {"kind", to_string(r.kind)},
              {"target", r.target ? json(sym::tag(*r.target)) : json(nullptr)},
              {"eta", r.eta},
              {"certificates", certificates(r.evidence)}};
  if (r.not_scott) {
    const auto& n = *r.not_scott;
    out["not_scott"] = {{"failing_hypothesis", n.failing_hypothesis},
                        {"shape_bound", n.shape_bound},
                        {"shape", to_json(n.shape, false)},
                        {"witness", to_json(n.witness)},
                        {"source_not_kspace", n.source_not_kspace},
                        {"verified", n.verified()}};
  }
  return out;
}

json report(const SymbolicCompletion& c) {
  return {{"source", sym::tag(c.source)}, {"kind", to_string(c.kind)}, {"target", sym::tag(c.target)},
          {"eta", c.map},                 {"route", c.route},          {"certificates", certificates(c.evidence)}};
}

std::string hasse_dot(const FinitePoset& p, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << "  " << node_id(i) << " [label=" << quoted(p.label(i)) << "];\n";
  for (auto [x, y] : p.covers()) out << "  " << node_id(x) << " -> " << node_id(y) << ";\n";
  out << "}\n";
  return out.str();
}

std::string closed_lattice_dot(const FiniteSpace& x, std::string_view name) {
  std::vector<std::string> labels;
  std::vector<Subset> up;
  const auto& cs = x.closed_sets();
  for (const auto& c : cs) {
    labels.push_back(render_subset(x.carrier(), c));
    Subset u;
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (c.is_subset_of(cs[j])) u.insert(j);
    up.push_back(u);
  }
  return hasse_dot(FinitePoset::from_up_sets(std::move(labels), std::move(up)), name);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace reflekt::io
