#include "reflekt/reflect.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "reflekt/error.hpp"

namespace reflekt {

namespace {

using sym::SpaceId;

std::vector<Subset> sorted(std::vector<Subset> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool family_includes(const std::vector<Subset>& small, const std::vector<Subset>& big) {
  return std::all_of(small.begin(), small.end(),
                     [&](const Subset& s) { return std::find(big.begin(), big.end(), s) != big.end(); });
}

Evidence ev(std::string name, bool passed, std::string detail = {}) {
  return Evidence{std::move(name), passed, std::move(detail)};
}

/// A family of subsets of `labels` ordered by inclusion. index[i] is the
/// poset index of family[i].
struct FamilyPoset {
  FinitePoset poset;
  std::vector<std::size_t> index;
  std::vector<Subset> by_index;  ///< member carried by each poset index
};

FamilyPoset family_poset(const std::vector<std::string>& labels, const std::vector<Subset>& family) {
  std::vector<std::string> names;
  std::vector<Subset> up(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    names.push_back(render_subset(labels, family[i]));
    for (std::size_t j = 0; j < family.size(); ++j)
      if (family[i].is_subset_of(family[j])) up[i].insert(j);
  }
  FamilyPoset out;
  out.poset = FinitePoset::from_up_sets(names, std::move(up));
  out.by_index.resize(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    out.index.push_back(out.poset.index(names[i]));
    out.by_index[out.index.back()] = family[i];
  }
  return out;
}

std::string points_text(const std::vector<std::string>& labels, const std::vector<Subset>& family) {
  std::string out = "{";
  for (std::size_t i = 0; i < family.size(); ++i) out += (i ? "," : "") + render_subset(labels, family[i]);
  return out + "}";
}

}  // namespace

std::string_view to_string(KFamily k) {
  switch (k) {
    case KFamily::Sob: return "Sob";
    case KFamily::D: return "D";
    case KFamily::WF: return "WF";
  }
  return "?";
}

std::optional<KFamily> parse_kfamily(std::string_view n) {
  if (n == "sob" || n == "Sob" || n == "sober") return KFamily::Sob;
  if (n == "d" || n == "D" || n == "d-space" || n == "d_space") return KFamily::D;
  if (n == "wf" || n == "WF" || n == "well-filtered" || n == "well_filtered") return KFamily::WF;
  return std::nullopt;
}

Property property_of(KFamily k) {
  switch (k) {
    case KFamily::Sob: return Property::Sober;
    case KFamily::D: return Property::DSpace;
    case KFamily::WF: return Property::WellFiltered;
  }
  return Property::Sober;
}

bool all_passed(const std::vector<Evidence>& e) {
  return std::all_of(e.begin(), e.end(), [](const Evidence& x) { return x.passed; });
}

// ---------------------------------------------------------------------------

KSetInterval kset_interval(const FiniteSpace& x, KFamily kind) {
  if (!x.is_t0()) throw Error(ErrorKind::NotT0, "two points share a closure");
  KSetInterval iv;
  iv.point_closures = sorted(point_closures(x));
  iv.lower = sorted(directed_closures(x));
  iv.upper = sorted(irreducibles(x));
  iv.sandwich_holds = family_includes(iv.point_closures, iv.lower) && family_includes(iv.lower, iv.upper);
  if (iv.lower == iv.upper) {
    iv.resolved = iv.upper;
    iv.justification = iv.upper == iv.point_closures ? "finite-collapse" : "sandwich-collapse";
  } else if (check(x, property_of(kind)).holds) {
    iv.resolved = iv.point_closures;
    iv.justification = "K-space";
  } else if (iv.upper.size() == iv.point_closures.size() + 1) {
    iv.resolved = iv.upper;
    iv.justification = "one-step-sandwich";
  }
  return iv;
}

std::string SymbolicFamily::describe(SpaceId s) const {
  std::string out = point_closures ? "{cl{x} : x ∈ " + std::string(sym::display_name(s)) + "}" : "";
  for (const auto& e : extra) out += (out.empty() ? "" : " ∪ ") + std::string("{") + sym::to_string(e) + "}";
  return out.empty() ? "∅" : out;
}

SymbolicKSetInterval kset_interval(SpaceId s, KFamily kind) {
  SymbolicKSetInterval iv;
  iv.space = s;
  iv.kind = kind;
  // The one closed set beyond the point closures that is irreducible: the
  // carrier without ⊤ (for ℕ∪{a,b} that is ℕ).
  sym::ClosedSetRep carrier = sym::without_top(s);
  if (s == SpaceId::NatAB) {
    carrier = sym::empty_set(s);
    carrier.height = sym::kAll;
  }
  const bool carrier_principal = s == SpaceId::NatTop || s == SpaceId::NatABC_Q;
  if (!carrier_principal) {
    const auto v = sym::irreducible(carrier);
    iv.evidence.push_back(ev("extra irreducible", v.irreducible && v.generators.empty(),
                             sym::to_string(carrier) + ": " + v.reason));
    iv.upper.extra.push_back(carrier);
  }
  // Point closures exhaust ir_c among the enumerated normal forms otherwise.
  std::size_t forms = 0, stray = 0;
  for (const auto& r : sym::closed_normal_forms(s, 6)) {
    if (sym::is_empty(r)) continue;
    ++forms;
    const auto v = sym::irreducible(r);
    const bool listed = !v.generators.empty() || r == carrier;
    if (v.irreducible && !listed) ++stray;
    if (v.irreducible && v.generators.size() == 1 && !(sym::principal(s, v.generators[0]) == r)) ++stray;
  }
  iv.evidence.push_back(ev("ir_c shape", stray == 0,
                           std::to_string(forms) + " closed normal forms decided, " + std::to_string(stray) + " unlisted"));

  // D_c: closures of directed sets. Only the chain ℕ lacks a largest member
  // and a supremum, in ℕ and ℕ∪{a,b}.
  if (s == SpaceId::NatChain || s == SpaceId::NatAB) {
    const auto sup = sym::sup_directed(s, sym::DirectedDesc::full_chain());
    iv.evidence.push_back(ev("ℕ directed without supremum", !sup.sup.has_value(), sup.reason));
    iv.lower.extra.push_back(carrier);
  }

  const bool kspace = sym::check(s, property_of(kind)).holds;
  if (iv.lower == iv.upper) {
    iv.resolved = iv.upper;
    iv.justification = iv.upper.extra.empty() ? "sober" : "sandwich-collapse";
  } else if (kspace) {
    iv.resolved = iv.lower;
    iv.justification = "K-space";
  } else if (iv.upper.extra.size() == 1) {
    iv.resolved = iv.upper;
    iv.justification = "one-step-sandwich";
  }
  return iv;
}

// ---------------------------------------------------------------------------

FiniteReflection kreflection(const FiniteSpace& x, KFamily kind) {
  const KSetInterval iv = kset_interval(x, kind);
  if (!iv.resolved) throw Error(ErrorKind::Unresolved, "K(X) is not pinned down");
  FiniteReflection r;
  r.source = x;
  r.kind = kind;
  r.evidence.push_back(ev("sandwich", iv.sandwich_holds, iv.justification));
  if (iv.resolved->empty()) {
    r.target = HoareSpace{FiniteSpace::from_closed_sets({}, {Subset{}}), {}};
  } else {
    r.target = hoare_space(x, *iv.resolved);
  }
  const auto eta = canonical_map(x, r.target);
  if (!eta) throw Error(ErrorKind::Unresolved, "a point closure is missing from K(X)");
  r.eta = *eta;
  r.evidence.push_back(ev("eta continuous", is_continuous(x, r.target.space, r.eta)));
  r.evidence.push_back(ev("eta embedding", is_embedding(x, r.target.space, r.eta)));
  const auto target_check = check(r.target.space, property_of(kind));
  r.evidence.push_back(ev("target is a K-space", target_check.holds, target_check.detail));
  r.evidence.push_back(ev("target sober", check(r.target.space, Property::Sober).holds));
  return r;
}

FiniteReflection sobrify(const FiniteSpace& x) { return kreflection(x, KFamily::Sob); }

Extension extend_map(const FiniteReflection& r, const FiniteSpace& y, const std::vector<std::size_t>& f) {
  if (f.size() != r.source.size()) throw Error(ErrorKind::SignatureMismatch, "map does not fit the source");
  for (auto v : f)
    if (v >= y.size()) throw Error(ErrorKind::SignatureMismatch, "map leaves the target");
  if (!check(y, Property::Sober).holds) throw Error(ErrorKind::TargetNotSober, "target is not sober");
  if (!is_continuous(r.source, y, f)) throw Error(ErrorKind::SignatureMismatch, "map is not continuous");
  Extension e;
  for (const auto& a : r.target.family) {
    Subset image;
    a.for_each([&](std::size_t p) { image.insert(f[p]); });
    const Subset cl = y.closure(image);
    std::optional<std::size_t> point;
    for (std::size_t q = 0; q < y.size(); ++q)
      if (y.point_closure(q) == cl) {
        if (point) throw Error(ErrorKind::NoUniquePoint, "two points with one closure");
        point = q;
      }
    if (!point) throw Error(ErrorKind::NoUniquePoint, "cl f(A) is not a point closure");
    e.graph.push_back(*point);
  }
  e.factors = true;
  for (std::size_t p = 0; p < f.size(); ++p) e.factors = e.factors && e.graph[r.eta[p]] == f[p];
  e.continuous = is_continuous(r.target.space, y, e.graph);
  for (const auto& g : continuous_maps(r.target.space, y)) {
    bool agrees = true;
    for (std::size_t p = 0; p < f.size() && agrees; ++p) agrees = g[r.eta[p]] == f[p];
    if (agrees) ++e.agreeing_maps;
  }
  return e;
}

Subset box(const FiniteReflection& r, const Subset& closed) {
  Subset out;
  for (std::size_t i = 0; i < r.target.family.size(); ++i)
    if (r.target.family[i].is_subset_of(closed)) out.insert(i);
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(CompletionVariant v) {
  switch (v) {
    case CompletionVariant::Ds: return "D_s";
    case CompletionVariant::Ks: return "K_s";
    case CompletionVariant::K: return "K";
  }
  return "?";
}

namespace {

Completion completion_from(const FinitePoset& p, const FiniteSpace& x, KFamily kind, CompletionVariant variant) {
  const KSetInterval iv = kset_interval(x, kind);
  if (!iv.resolved) throw Error(ErrorKind::Unresolved, "K(X) is not pinned down");
  Completion c;
  c.source = p;
  c.kind = kind;
  c.variant = variant;
  const FamilyPoset fp = family_poset(p.labels(), *iv.resolved);
  c.target = fp.poset;
  c.family = fp.by_index;
  for (std::size_t v = 0; v < p.size(); ++v) {
    const auto it = std::find(c.family.begin(), c.family.end(), p.down(v));
    if (it == c.family.end()) throw Error(ErrorKind::Unresolved, "↓x is missing from K(X)");
    c.map.push_back(static_cast<std::size_t>(it - c.family.begin()));
  }
  c.evidence.push_back(ev("sandwich", iv.sandwich_holds, iv.justification));
  c.evidence.push_back(ev("target is a dcpo", is_dcpo(c.target)));
  MonotoneMap m{p, c.target, c.map};
  c.evidence.push_back(ev("map monotone", is_monotone(m)));
  if (variant != CompletionVariant::K) c.evidence.push_back(ev("map Scott-continuous", scott_continuity_check(m).continuous));
  const auto sc = check(scott_space(c.target), property_of(kind));
  c.evidence.push_back(ev("Σ target is a K-space", sc.holds, sc.detail));
  return c;
}

}  // namespace

Completion d_completion_alexandroff(const FinitePoset& p, KFamily kind) {
  Completion c = completion_from(p, alexandroff(p), kind, CompletionVariant::K);
  const IdealFamily id = ideals(p);
  c.evidence.push_back(ev("K(Γ P) = Id P", sorted(c.family) == sorted(id.members),
                          std::to_string(id.members.size()) + " ideals"));
  c.evidence.push_back(ev("≅ Id P", find_isomorphism(c.target, id.as_poset(p), 16).has_value()));
  return c;
}

Completion ks_completion(const FinitePoset& p, KFamily kind) {
  return completion_from(p, scott_space(p), kind, kind == KFamily::D ? CompletionVariant::Ds : CompletionVariant::Ks);
}

IdealExtension ideal_extension(const MonotoneMap& f) {
  if (!is_monotone(f)) throw Error(ErrorKind::NotMonotone, "f is not monotone");
  if (!is_dcpo(f.target)) throw Error(ErrorKind::TargetNotDcpo, "target is not a dcpo");
  IdealExtension e;
  e.ideals = ideals(f.source);
  const FamilyPoset fp = family_poset(f.source.labels(), e.ideals.members);
  e.graph.assign(e.ideals.members.size(), 0);
  std::vector<std::size_t> by_index(e.ideals.members.size());
  for (std::size_t i = 0; i < e.ideals.members.size(); ++i) {
    Subset image;
    e.ideals.members[i].for_each([&](std::size_t x) { image.insert(f.graph[x]); });
    const auto s = supremum(f.target, image);
    if (!s) throw Error(ErrorKind::TargetNotDcpo, "directed image without supremum");
    e.graph[i] = *s;
    by_index[fp.index[i]] = *s;
  }
  e.factors = true;
  for (std::size_t x = 0; x < f.source.size(); ++x) {
    const auto it = std::find(e.ideals.members.begin(), e.ideals.members.end(), f.source.down(x));
    e.factors = e.factors && it != e.ideals.members.end() &&
                e.graph[static_cast<std::size_t>(it - e.ideals.members.begin())] == f.graph[x];
  }
  e.scott_continuous = scott_continuity_check(MonotoneMap{fp.poset, f.target, by_index}).continuous;
  return e;
}

// ---------------------------------------------------------------------------

bool psi_isomorphism(SpaceId source, std::size_t level) {
  SpaceId target;
  if (source == SpaceId::NatChain)
    target = SpaceId::NatTop;
  else if (source == SpaceId::NatAB)
    target = SpaceId::NatABC_Q;
  else
    throw Error(ErrorKind::HypothesisFailed, "ψ is defined for ℕ and ℕ∪{a,b}");
  std::vector<sym::ClosedSetRep> fam;
  std::vector<sym::Point> img;
  for (std::uint64_t n = 0; n < level; ++n) {
    fam.push_back(sym::principal(source, sym::Point::nat(n)));
    img.push_back(sym::Point::nat(n));
  }
  sym::ClosedSetRep nat = sym::empty_set(source);
  nat.height = sym::kAll;
  fam.push_back(nat);
  img.push_back(target == SpaceId::NatTop ? sym::Point::top() : sym::Point::c());
  if (source == SpaceId::NatAB) {
    fam.push_back(sym::principal(source, sym::Point::a()));
    img.push_back(sym::Point::a());
    fam.push_back(sym::principal(source, sym::Point::b()));
    img.push_back(sym::Point::b());
  }
  const sym::Truncation t = sym::truncate(target, level);
  if (t.points.size() != img.size()) return false;
  for (const auto& p : img)
    if (!t.index_of(p)) return false;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (sym::includes(fam[i], fam[j]) != sym::leq(target, img[i], img[j])) return false;
  return true;
}

SymbolicCompletion d_completion_alexandroff(SpaceId s, KFamily kind) {
  if (s != SpaceId::NatChain && s != SpaceId::NatAB)
    throw Error(ErrorKind::HypothesisFailed, "the Alexandroff completion is built for ℕ and ℕ∪{a,b}");
  SymbolicCompletion c;
  c.source = s;
  c.kind = kind;
  c.target = s == SpaceId::NatChain ? SpaceId::NatTop : SpaceId::NatABC_Q;
  c.route = "K(Γ P) = Id P";
  c.map = s == SpaceId::NatChain ? "n ↦ n" : "n ↦ n, a ↦ a, b ↦ b";
  const auto sup = sym::sup_directed(s, sym::DirectedDesc::full_chain());
  c.evidence.push_back(ev("Γ P = Σ P", !sup.sup.has_value(),
                          "the only directed sets without a largest member are cofinal in ℕ, which has no supremum"));
  const auto iv = kset_interval(s, kind);
  SymbolicFamily ideals_family;
  sym::ClosedSetRep nat = sym::empty_set(s);
  nat.height = sym::kAll;
  ideals_family.extra.push_back(nat);
  c.evidence.push_back(ev("K(Γ P) resolved", iv.resolved.has_value(), iv.justification));
  c.evidence.push_back(ev("K(Γ P) = Id P", iv.resolved && *iv.resolved == ideals_family, ideals_family.describe(s)));
  c.evidence.push_back(ev("Id P ≅ target", psi_isomorphism(s, 8), "checked on the level-8 truncation"));
  const auto tc = sym::check(c.target, property_of(kind));
  c.evidence.push_back(ev("target is a K-space", tc.holds, tc.reason));
  return c;
}

SymbolicCompletion ks_completion(SpaceId s, KFamily kind) {
  SymbolicCompletion c;
  c.source = s;
  c.kind = kind;
  if (sym::is_cofinite(s))
    throw Error(ErrorKind::HypothesisFailed, std::string(sym::display_name(s)) + " is not the Scott space of a poset");
  if (s == SpaceId::NatChain || s == SpaceId::NatAB) {
    c = d_completion_alexandroff(s, kind);
    c.route = s == SpaceId::NatChain ? "P_⊤ route: ir_c(Σℕ) = {↓n} ∪ {ℕ} and Σℕ_⊤ is a K-space"
                                     : "K(Σ P) ≅ Q via ψ";
    const auto eta = sym::eta_sigma_continuity(s);
    c.evidence.push_back(ev("η^σ continuous", eta.continuous, eta.reason));
    return c;
  }
  const auto own = sym::check(s, property_of(kind));
  if (own.holds) {
    c.target = s;
    c.map = "identity";
    c.route = "already a K-dcpo";
    c.evidence.push_back(ev("source is a K-space", true, own.reason));
    return c;
  }
  throw Error(ErrorKind::HypothesisFailed,
              "Σ" + std::string(sym::display_name(s)) + " is not a " + std::string(to_string(kind)) +
                  "-space and the reflection is not a Scott space: " + own.reason);
}

SymbolicReflection scott_kreflection(SpaceId s, KFamily kind, std::size_t bound) {
  if (sym::is_cofinite(s))
    throw Error(ErrorKind::Unresolved, std::string(sym::display_name(s)) + " is not a Scott space");
  SymbolicReflection r;
  r.source = s;
  r.kind = kind;
  const auto iv = kset_interval(s, kind);
  for (const auto& e : iv.evidence) r.evidence.push_back(e);
  if (s == SpaceId::Johnstone && kind != KFamily::D) {
    NotScottCertificate cert;
    cert.failing_hypothesis = "Σ𝕁_⊤ is a " + std::string(to_string(kind)) + "-space";
    cert.shape_bound = bound;
    cert.shape = sym::johnstone_irc(SpaceId::Johnstone, bound);
    cert.witness = sym::wf_witness(SpaceId::JohnstoneTop, 8);
    cert.source_not_kspace = !sym::check(s, property_of(kind)).holds;
    r.not_scott = cert;
    r.eta = "x ↦ ↓x into P_H(ir_c(Σ𝕁))";
    r.evidence.push_back(ev("K(Σ𝕁) = ir_c", iv.resolved && iv.justification == "one-step-sandwich", iv.justification));
    return r;
  }
  if (!iv.resolved) throw Error(ErrorKind::Unresolved, "K(X) is not pinned down");
  if (iv.resolved->extra.empty()) {
    const auto own = sym::check(s, property_of(kind));
    r.target = s;
    r.eta = "identity";
    r.evidence.push_back(ev("source is a K-space", own.holds, own.reason));
    return r;
  }
  if (s == SpaceId::NatChain || s == SpaceId::NatAB) {
    const auto c = ks_completion(s, kind);
    r.target = c.target;
    r.eta = s == SpaceId::NatChain ? "n ↦ n" : "ψ: ↓n ↦ n, ℕ ↦ c, ↓a ↦ a, ↓b ↦ b";
    for (const auto& e : c.evidence) r.evidence.push_back(e);
    return r;
  }
  throw Error(ErrorKind::Unresolved,
              "ir_c(" + std::string(sym::display_name(s)) + ") is not of the shape {cl{x}} ∪ {X}");
}

FiniteReflection scott_kreflection(const FinitePoset& p, KFamily kind) {
  FiniteReflection r = kreflection(scott_space(p), kind);
  const FiniteSpace& t = r.target.space;
  r.evidence.push_back(ev("target is a Scott space", t == scott_space(specialization(t))));
  return r;
}

// ---------------------------------------------------------------------------

const std::vector<FiniteSpace>& sober_targets(std::size_t max_points) {
  static std::map<std::size_t, std::vector<FiniteSpace>> cache;
  auto it = cache.find(max_points);
  if (it != cache.end()) return it->second;
  std::vector<FiniteSpace> out;
  for (std::size_t n = 1; n <= max_points; ++n)
    for (auto& y : all_t0_spaces(n))
      if (check(y, Property::Sober).holds) out.push_back(std::move(y));
  return cache.emplace(max_points, std::move(out)).first->second;
}

UniversalReport universal_property_check(
    const FiniteSpace& source, const FiniteSpace& target, const std::vector<std::size_t>& eta, std::size_t max_target,
    const std::function<std::vector<std::size_t>(const FiniteSpace&, const std::vector<std::size_t>&)>& predicted) {
  UniversalReport rep;
  for (const auto& y : sober_targets(max_target)) {
    ++rep.targets;
    std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> by_restriction;
    for (auto& g : continuous_maps(target, y)) {
      ++rep.candidates;
      std::vector<std::size_t> f(source.size());
      for (std::size_t x = 0; x < source.size(); ++x) f[x] = g[eta[x]];
      by_restriction[f].push_back(std::move(g));
    }
    for (const auto& f : continuous_maps(source, y)) {
      ++rep.maps;
      const auto it = by_restriction.find(f);
      const std::size_t count = it == by_restriction.end() ? 0 : it->second.size();
      bool ok = count == 1;
      if (ok && predicted) ok = predicted(y, f) == it->second.front();
      if (!ok) {
        ++rep.failures;
        if (rep.witnesses.size() < 5) {
          std::string w = "target " + points_text(y.carrier(), y.closed_sets()) + ", f =";
          for (auto v : f) w += " " + y.label(v);
          rep.witnesses.push_back(w + ": " + std::to_string(count) + " factorings");
        }
      }
    }
  }
  return rep;
}

UniversalReport universal_property_check(const FiniteReflection& r, std::size_t max_target) {
  UniversalReport rep = universal_property_check(
      r.source, r.target.space, r.eta, max_target,
      [&](const FiniteSpace& y, const std::vector<std::size_t>& f) { return extend_map(r, y, f).graph; });
  rep.source = points_text(r.source.carrier(), r.source.closed_sets());
  rep.target = "P_H(K(X))";
  return rep;
}

UniversalReport universal_property_alexandroff(const FinitePoset& p, std::size_t max_target) {
  const Completion c = d_completion_alexandroff(p, KFamily::D);
  const FiniteSpace t = scott_space(c.target);
  UniversalReport rep = universal_property_check(
      alexandroff(p), t, c.map, max_target, [&](const FiniteSpace& y, const std::vector<std::size_t>& f) {
        const FinitePoset order = specialization(y);
        std::vector<std::size_t> g(c.family.size());
        for (std::size_t i = 0; i < c.family.size(); ++i) {
          Subset image;
          c.family[i].for_each([&](std::size_t x) { image.insert(f[x]); });
          const auto s = supremum(order, image);
          g[i] = s ? *s : y.size();
        }
        return g;
      });
  rep.source = "Γ " + points_text(p.labels(), {p.carrier()});
  rep.target = "Σ Id P";
  return rep;
}

namespace {

struct StepMap {
  std::vector<std::size_t> head;
  std::size_t eventual = 0;
  std::size_t a = 0, b = 0;
};

/// The preimage of a closed set of Y as a rep of `s`, with `extra` the value
/// at the target's added point (⊤ or c). nullopt when it is not even a lower
/// set.
std::optional<sym::ClosedSetRep> preimage(SpaceId s, const StepMap& f, std::optional<std::size_t> extra,
                                          const Subset& closed) {
  sym::ClosedSetRep r = sym::empty_set(s);
  if (closed.contains(f.eventual)) {
    if (!std::all_of(f.head.begin(), f.head.end(), [&](std::size_t v) { return closed.contains(v); }))
      return std::nullopt;
    r.height = sym::kAll;
  } else {
    std::size_t h = 0;
    while (h < f.head.size() && closed.contains(f.head[h])) ++h;
    for (std::size_t i = h; i < f.head.size(); ++i)
      if (closed.contains(f.head[i])) return std::nullopt;
    r.height = static_cast<std::int64_t>(h) - 1;
  }
  if (s == SpaceId::NatAB || s == SpaceId::NatABC_Q) {
    r.a = closed.contains(f.a);
    r.b = closed.contains(f.b);
  }
  if (extra) {
    if (s == SpaceId::NatTop) r.top = closed.contains(*extra);
    if (s == SpaceId::NatABC_Q) r.c = closed.contains(*extra);
  }
  if (!(sym::normalize(r) == r)) return std::nullopt;
  return r;
}

bool continuous_step(SpaceId s, const StepMap& f, std::optional<std::size_t> extra, const FiniteSpace& y) {
  for (const auto& c : y.closed_sets()) {
    const auto r = preimage(s, f, extra, c);
    if (!r || !sym::is_closed(*r)) return false;
  }
  return true;
}

}  // namespace

UniversalReport universal_property_check(SpaceId source, std::size_t max_target, std::size_t steps) {
  if (source != SpaceId::NatChain && source != SpaceId::NatAB)
    throw Error(ErrorKind::HypothesisFailed, "step-map sweeps run from ℕ and ℕ∪{a,b}");
  const SpaceId target = source == SpaceId::NatChain ? SpaceId::NatTop : SpaceId::NatABC_Q;
  UniversalReport rep;
  rep.source = "Σ" + std::string(sym::display_name(source));
  rep.target = "Σ" + std::string(sym::display_name(target));
  for (const auto& y : sober_targets(max_target)) {
    ++rep.targets;
    const FinitePoset order = specialization(y);
    const std::size_t n = y.size();
    StepMap f;
    f.head.resize(steps);
    auto report = [&](const std::string& what) {
      ++rep.failures;
      if (rep.witnesses.size() < 5) {
        std::string w = what + " on " + points_text(y.carrier(), y.closed_sets()) + ": f =";
        for (auto v : f.head) w += " " + y.label(v);
        w += " then " + y.label(f.eventual);
        rep.witnesses.push_back(w);
      }
    };
    auto finish = [&] {
      ++rep.maps;
      if (!continuous_step(source, f, std::nullopt, y)) {
        report("monotone step map not continuous");
        return;
      }
      std::vector<std::size_t> good;
      for (std::size_t v = 0; v < n; ++v) {
        ++rep.candidates;
        if (continuous_step(target, f, v, y)) good.push_back(v);
      }
      // ⋁ f(ℕ) is the eventual value.
      if (good.size() != 1 || good[0] != f.eventual) report(std::to_string(good.size()) + " factorings");
    };
    auto fill = [&](auto&& self, std::size_t i) -> void {
      if (i < steps) {
        for (std::size_t v = 0; v < n; ++v)
          if (i == 0 || order.leq(f.head[i - 1], v)) {
            f.head[i] = v;
            self(self, i + 1);
          }
        return;
      }
      for (std::size_t e = 0; e < n; ++e) {
        if (steps > 0 && !order.leq(f.head[steps - 1], e)) continue;
        f.eventual = e;
        if (source == SpaceId::NatChain) {
          finish();
          continue;
        }
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (order.leq(e, a) && order.leq(e, b)) {
              f.a = a;
              f.b = b;
              finish();
            }
      }
    };
    fill(fill, 0);
  }
  return rep;
}

}  // namespace reflekt
