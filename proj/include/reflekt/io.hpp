#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "reflekt/laws.hpp"
#include "reflekt/poset.hpp"
#include "reflekt/reflect.hpp"
#include "reflekt/space.hpp"
#include "reflekt/symbolic.hpp"

namespace reflekt::io {

using json = nlohmann::json;

/// {"elements": [...], "leq": [[x,y],...]}. `leq` is the Hasse diagram, or
/// every pair (with "closed": true) when `closed` is set.
json to_json(const FinitePoset& p, bool closed = false);
/// Accepts any generating set for "leq". Throws ParseError on bad shape;
/// the poset constructor's own errors pass through.
FinitePoset poset_from_json(const json& j);

/// {"carrier": [...], "closed": [[...],...]} in canonical order.
json to_json(const FiniteSpace& x);
FiniteSpace space_from_json(const json& j);

/// Per-tag schema:
///   nat-like:  {"space","height": n | "all" | null, "a","b","c","top"}
///              (only the flags the space has)
///   johnstone: {"space","whole"} or {"space","omega":[j..],"floor":r,
///              "heights":{"j": h | "all"},"top"}
///   cofinite:  {"space","cofinite","points":[..],"top"}
/// plus "text", the printed form. Reading ignores "text".
json to_json(const sym::ClosedSetRep& r);
/// Normalizes and rejects sets that are not closed (NotClosed).
sym::ClosedSetRep closed_rep_from_json(const json& j);

json to_json(const sym::CompactSatRep& k);
json to_json(const sym::WfWitness& w);
json to_json(const sym::IrcEnumeration& e, bool list_irreducibles = true);

json to_json(const Certificate& c);
json to_json(const Evidence& e);

/// {source, kind, target, eta, certificates:[...]}; the evidence items
/// become certificates.
json report(const FiniteReflection& r);
json report(const Completion& c);
json report(const SymbolicReflection& r);
json report(const SymbolicCompletion& c);

/// Hasse diagram: one edge per covering pair.
std::string hasse_dot(const FinitePoset& p, std::string_view name = "P");
/// The closed sets ordered by inclusion, drawn as a Hasse diagram.
std::string closed_lattice_dot(const FiniteSpace& x, std::string_view name = "C");

/// Reads and parses a JSON file. Throws ParseError.
json read_json_file(const std::string& path);

}  // namespace reflekt::io
