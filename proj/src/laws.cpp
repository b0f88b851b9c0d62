#include "reflekt/laws.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

#include "reflekt/error.hpp"
#include "reflekt/poset.hpp"
#include "reflekt/reflect.hpp"
#include "reflekt/space.hpp"
#include "reflekt/symbolic.hpp"

namespace reflekt {

namespace {

using sym::SpaceId;

constexpr Property kProps[] = {Property::Sober, Property::WellFiltered, Property::DSpace};

std::string describe(const FiniteSpace& x) {
  std::string out = "carrier " + render_subset(x.carrier(), x.all()) + ", closed {";
  for (std::size_t i = 0; i < x.closed_sets().size(); ++i)
    out += (i ? "," : "") + render_subset(x.carrier(), x.closed_sets()[i]);
  return out + "}";
}

std::string describe(const FinitePoset& p) {
  std::string out = "elements " + render_subset(p.labels(), p.carrier()) + ", covers {";
  bool first = true;
  for (auto [x, y] : p.covers()) {
    out += (first ? "" : ",") + p.label(x) + "<" + p.label(y);
    first = false;
  }
  return out + "}";
}

/// Collects counts and the first (smallest) failing instance.
struct Sweep {
  Certificate& cert;
  void count(const std::string& key, std::size_t n = 1) { cert.counts[key] += n; }
  void expect(bool ok, const std::function<std::string()>& witness) {
    if (ok) return;
    count("failures");
    if (cert.status != Status::Fail) {
      cert.status = Status::Fail;
      cert.witness = witness();
    }
  }
};

std::vector<FiniteSpace> spaces_upto(std::size_t n) {
  std::vector<FiniteSpace> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (auto& x : all_t0_spaces(k)) out.push_back(std::move(x));
  return out;
}

std::vector<FinitePoset> posets_upto(std::size_t n, std::size_t from = 0) {
  std::vector<FinitePoset> out;
  for (std::size_t k = from; k <= n; ++k)
    for (auto& p : all_posets(k)) out.push_back(std::move(p));
  return out;
}

bool all_hold(const FiniteSpace& x, std::size_t wf_cap = kMaxCompactFamily) {
  return std::all_of(std::begin(kProps), std::end(kProps), [&](Property p) { return check(x, p, wf_cap).holds; });
}

std::vector<Subset> sorted(std::vector<Subset> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// --- L1 ---------------------------------------------------------------------
void finite_collapse(const Scale& sc, Sweep& s) {
  for (std::size_t n = 0; n <= sc.spaces; ++n) {
    const auto spaces = all_t0_spaces(n);
    s.count("spaces_" + std::to_string(n), spaces.size());
    // Cross-check the enumerator: finite T0 spaces correspond to posets.
    s.expect(spaces.size() == all_posets(n).size() && spaces.size() == count_posets_brute_force(n),
             [&] { return "T0 space count on " + std::to_string(n) + " points disagrees with the poset count"; });
    for (const auto& x : spaces) {
      s.count("spaces");
      const auto sc_ = sorted(point_closures(x));
      const bool collapse = sorted(directed_closures(x)) == sc_ && sorted(irreducibles(x)) == sc_;
      s.expect(collapse && all_hold(x), [&] { return describe(x); });
      s.expect(alexandroff(specialization(x)) == x, [&] { return "Γ(Ω X) ≠ X for " + describe(x); });
    }
  }
}

// --- L2 ---------------------------------------------------------------------
void hoare_sober(const Scale& sc, Sweep& s) {
  for (const auto& x : spaces_upto(sc.spaces)) {
    std::vector<Subset> nonempty;
    for (const auto& c : x.closed_sets())
      if (!c.empty()) nonempty.push_back(c);
    if (nonempty.empty()) continue;
    std::vector<std::vector<Subset>> families{nonempty};
    if (x.size() <= 3) {
      families.clear();
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << nonempty.size()); ++m) {
        std::vector<Subset> g;
        for (std::size_t i = 0; i < nonempty.size(); ++i)
          if ((m >> i) & 1U) g.push_back(nonempty[i]);
        families.push_back(g);
      }
    }
    for (const auto& g : families) {
      s.count("families");
      const HoareSpace h = hoare_space(x, g);
      s.expect(check(h.space, Property::Sober).holds, [&] { return "P_H not sober over " + describe(x); });
      // The specialization order is inclusion.
      const FinitePoset order = specialization(h.space);
      bool inclusion = true;
      for (std::size_t i = 0; i < h.family.size(); ++i)
        for (std::size_t j = 0; j < h.family.size(); ++j)
          inclusion = inclusion && order.leq(i, j) == h.family[i].is_subset_of(h.family[j]);
      s.expect(inclusion, [&] { return "P_H order is not inclusion over " + describe(x); });
      if (const auto eta = canonical_map(x, h)) {
        s.count("embeddings");
        s.expect(is_embedding(x, h.space, *eta), [&] { return "x ↦ cl{x} not an embedding for " + describe(x); });
      }
    }
  }
}

// --- L3 ---------------------------------------------------------------------
void closure_lemma(const Scale& sc, Sweep& s) {
  for (const auto& x : spaces_upto(sc.spaces)) {
    for (auto kind : kAllKinds) {
      const FiniteReflection r = kreflection(x, kind);
      s.expect(r.verified(), [&] { return "reflection evidence fails for " + describe(x); });
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << x.size()); ++m) {
        const Subset a = Subset::from_mask(m);
        Subset image;
        a.for_each([&](std::size_t p) { image.insert(r.eta[p]); });
        s.count("subsets");
        s.expect(r.target.space.closure(image) == box(r, x.closure(a)),
                 [&] { return "cl η(A) ≠ □ cl A for A = " + render_subset(x.carrier(), a) + " in " + describe(x); });
      }
    }
  }
  // f* exists and is unique for the sobrification, against small targets.
  for (const auto& x : spaces_upto(std::min<std::size_t>(sc.spaces, 3))) {
    const auto u = universal_property_check(sobrify(x), std::min<std::size_t>(sc.targets, 3));
    s.count("factorings", u.maps);
    s.expect(u.failures == 0, [&] { return u.witnesses.empty() ? describe(x) : u.witnesses.front(); });
  }
}

// --- L4 ---------------------------------------------------------------------
void equalizers(const Scale& sc, Sweep& s) {
  auto sweep = [&](std::size_t nx, std::size_t ny) {
    const auto xs = spaces_upto(nx);
    const auto ys = spaces_upto(ny);
    for (const auto& x : xs) {
      const bool base = all_hold(x);
      for (const auto& y : ys) {
        const auto maps = continuous_maps(x, y);
        for (std::size_t i = 0; i < maps.size(); ++i)
          for (std::size_t j = i; j < maps.size(); ++j) {
            s.count("pairs");
            const Subspace e = equalizer(ContinuousMap{x, y, maps[i]}, ContinuousMap{x, y, maps[j]});
            s.expect(!base || all_hold(e.space), [&] { return "equalizer loses a property in " + describe(x); });
            if (i == j) s.expect(e.points == x.all(), [&] { return "E(f,f) ≠ X"; });
          }
      }
    }
  };
  sweep(sc.spaces, 2);
  sweep(std::min<std::size_t>(sc.spaces, 3), std::min<std::size_t>(sc.spaces, 3));
}

// --- L5 ---------------------------------------------------------------------
void hereditary(const Scale& sc, Sweep& s) {
  for (const auto& x : spaces_upto(sc.spaces)) {
    const bool base = all_hold(x);
    const FinitePoset order = x.size() ? specialization(x) : FinitePoset{};
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << x.size()); ++m) {
      const Subset a = Subset::from_mask(m);
      if (x.is_closed(a)) {
        s.count("closed");
        s.expect(!base || all_hold(subspace(x, a, SubspaceKind::Closed).space),
                 [&] { return "closed subspace " + render_subset(x.carrier(), a) + " of " + describe(x); });
      }
      if (x.saturation(a) == a) {
        s.count("saturated");
        s.expect(is_upper_set(order, a), [&] { return "saturated set not an upper set"; });
        s.expect(!base || all_hold(subspace(x, a, SubspaceKind::Saturated).space),
                 [&] { return "saturated subspace " + render_subset(x.carrier(), a) + " of " + describe(x); });
      }
    }
  }
}

// --- L6 ---------------------------------------------------------------------
void top_preservation(const Scale& sc, Sweep& s) {
  for (const auto& x : spaces_upto(sc.spaces)) {
    s.count("spaces");
    const SpaceWithTop t = x_top(x);
    for (auto p : kProps)
      s.expect(check(x, p).holds == check(t.space, p).holds,
               [&] { return std::string(to_string(p)) + " differs between X and X_⊤ for " + describe(x); });
    Subset old_points;
    for (auto e : t.embed) old_points.insert(e);
    s.expect(t.space.is_open(Subset::single(t.top)), [&] { return "{⊤} not open"; });
    s.expect(t.space.is_closed(old_points) && induced_subspace(t.space, old_points).space == x,
             [&] { return "X is not a closed subspace of X_⊤"; });
    s.expect(t.space.point_closure(t.top) == t.space.all(), [&] { return "cl{⊤} ≠ X_⊤"; });
    s.expect(t.space.is_t0(), [&] { return "X_⊤ not T0"; });
  }
  for (const auto& p : posets_upto(sc.posets)) {
    s.count("posets");
    s.expect(x_top(scott_space(p)).space == scott_space(add_top(p).poset),
             [&] { return "(Σ P)_⊤ ≠ Σ P_⊤ for " + describe(p); });
  }
}

// --- L7 ---------------------------------------------------------------------
void scott_continuity(const Scale& sc, Sweep& s) {
  const auto ps = posets_upto(sc.maps);
  std::vector<FiniteSpace> sigma;
  for (const auto& p : ps) sigma.push_back(scott_space(p));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) {
      s.count("poset_pairs");
      for (const auto& g : monotone_maps(ps[i], ps[j])) {
        s.count("maps");
        const bool topological = is_continuous(sigma[i], sigma[j], g);
        const bool sups = scott_continuity_check(MonotoneMap{ps[i], ps[j], g}).continuous;
        s.expect(topological == sups, [&] { return "discrepancy on " + describe(ps[i]) + " -> " + describe(ps[j]); });
        s.expect(sups, [&] { return "monotone map between finite posets fails to preserve sups"; });
      }
    }
  // ℕ_⊤ -> 2 with n ↦ 0, ⊤ ↦ 1: ⋁ℕ = ⊤ goes to 1, ⋁ f(ℕ) = 0.
  const auto sup = sym::sup_directed(SpaceId::NatTop, sym::DirectedDesc::full_chain());
  sym::ClosedSetRep pre = sym::empty_set(SpaceId::NatTop);
  pre.height = sym::kAll;  // the preimage of the closed set {0}
  s.count("symbolic_maps");
  s.expect(sup.sup == sym::Point::top() && !sym::is_closed(pre),
           [&] { return std::string("ℕ_⊤ -> 2 should fail both tests"); });
}

// --- L8 / L9 ----------------------------------------------------------------
void continuous_domain_sober(const Scale& sc, Sweep& s) {
  for (const auto& p : posets_upto(sc.posets)) {
    s.count("posets");
    const WayBelow w = way_below(p);
    s.expect(w.continuous_domain && w.algebraic_domain && w.compact == p.carrier(),
             [&] { return "not an algebraic domain: " + describe(p); });
    s.expect(check(scott_space(p), Property::Sober).holds, [&] { return "Σ P not sober: " + describe(p); });
  }
}

void complete_lattice_wf(const Scale& sc, Sweep& s) {
  for (const auto& p : posets_upto(sc.posets)) {
    if (!is_complete_lattice(p)) continue;
    s.count("lattices");
    s.expect(check(scott_space(p), Property::WellFiltered, sc.wf_cap).holds,
             [&] { return "Σ L not well-filtered: " + describe(p); });
  }
}

// --- L10 --------------------------------------------------------------------
void johnstone_irc(const Scale& sc, Sweep& s) {
  for (auto sp : {SpaceId::Johnstone, SpaceId::JohnstoneTop}) {
    const auto e = sym::johnstone_irc(sp, sc.bound);
    const std::string t(sym::tag(sp));
    s.count(t + "_forms", e.enumerated);
    s.count(t + "_irreducible", e.irreducible_count);
    s.count(t + "_principal", e.principal_count);
    s.count(t + "_search_checked", e.search_checked);
    s.count(t + "_disagreements", e.disagreements.size());
    s.expect(e.ok(), [&] {
      const auto& bad = !e.unexpected.empty() ? e.unexpected : !e.missing.empty() ? e.missing
                        : !e.disagreements.empty()               ? e.disagreements
                                                                 : e.bad_splits;
      return t + ": " + sym::to_string(bad.front());
    });
    if (sp == SpaceId::Johnstone && e.ok()) {
      std::string gens;
      for (const auto& r : e.irreducibles) {
        const auto v = sym::irreducible(r);
        gens += (gens.empty() ? "" : " ") + (v.generators.empty() ? std::string("𝕁") : "↓" + sym::to_string(v.generators[0]));
      }
      s.cert.notes.push_back("irreducibles: " + gens);
    }
  }
}

// --- L11 / L15 --------------------------------------------------------------
void wf_family(Sweep& s, SpaceId sp, std::size_t cap) {
  const auto w = sym::wf_witness(sp, cap);
  const std::string t(sym::tag(sp));
  s.count(t + "_members", w.members.size());
  s.count(t + "_pairs", w.pairs_checked);
  s.expect(w.verified(), [&] {
    return t + ": compact " + std::to_string(w.compact_members) + ", filtered " + std::to_string(w.filtered) +
           ", inside " + std::to_string(w.intersection_inside) + ", none inside " + std::to_string(w.no_member_inside);
  });
  s.cert.notes.push_back(t + ": " + w.family + ", ⋂ = " + sym::to_string(w.intersection) + " ⊆ " + w.open_description);
}

void johnstone_not_wf(const Scale& sc, Sweep& s) {
  wf_family(s, SpaceId::JohnstoneTop, sc.cap);
  wf_family(s, SpaceId::Johnstone, sc.cap);
  // Finite ↑F and subsets of 𝕁_max are compact; a band of one row is not.
  for (std::uint64_t j = 0; j < sc.cap; ++j)
    for (std::uint64_t k = 0; k < sc.cap; ++k) {
      sym::CompactSatRep up;
      up.space = SpaceId::Johnstone;
      up.gens = {sym::Point::pair(j, k)};
      up = sym::normalize(up);
      s.count("compact_checked");
      s.expect(sym::is_saturated(up) && sym::is_compact(up).compact, [&] { return sym::to_string(up) + " judged non-compact"; });
    }
  sym::CompactSatRep band;
  band.space = SpaceId::Johnstone;
  band.band = sym::CompactSatRep::Band{1, {}};
  const auto v = sym::is_compact(band);
  s.count("compact_checked");
  s.expect(!v.compact && v.cover && v.cover->verified, [&] { return sym::to_string(band) + " lacks a verified cover"; });
}

void cofinite_eta(const Scale& sc, Sweep& s) {
  wf_family(s, SpaceId::CofiniteNat, sc.cap);
  wf_family(s, SpaceId::CofiniteNatTop, sc.cap);
  const auto eta = sym::eta_sigma_continuity(SpaceId::CofiniteNat);
  s.count("eta_checks", eta.checks);
  s.expect(!eta.continuous && !eta.witness_set.empty(), [&] { return "η^σ judged continuous on X_cof"; });
  s.cert.notes.push_back("η^σ witness: " + eta.witness_set);
  // K(X_cof) = every nonempty subset: finite and cofinite descriptions.
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << sc.cap); ++m) {
    std::set<std::uint64_t> f;
    for (std::uint64_t i = 0; i < sc.cap; ++i)
      if ((m >> i) & 1U) f.insert(i);
    for (bool co : {false, true}) {
      sym::CompactSatRep k;
      k.space = SpaceId::CofiniteNat;
      k.cofinite = co;
      k.points = f;
      if (sym::is_empty(k)) continue;
      s.count("subsets");
      s.expect(sym::is_saturated(k) && sym::is_compact(k).compact, [&] { return sym::to_string(k) + " judged non-compact"; });
    }
  }
}

// --- L12 --------------------------------------------------------------------
void johnstone_not_scott(const Scale& sc, Sweep& s) {
  for (auto kind : {KFamily::Sob, KFamily::WF}) {
    const auto r = scott_kreflection(SpaceId::Johnstone, kind, sc.bound);
    const std::string k(to_string(kind));
    s.count(k + "_shape_forms", r.not_scott ? r.not_scott->shape.enumerated : 0);
    s.count(k + "_witness_members", r.not_scott ? r.not_scott->witness.members.size() : 0);
    s.expect(r.not_scott && !r.target && r.verified(), [&] {
      return k + ": " + (r.not_scott ? "certificate fails re-verification" : std::string("no certificate"));
    });
    if (r.not_scott) s.cert.notes.push_back(k + ": fails hypothesis \"" + r.not_scott->failing_hypothesis + "\"");
  }
  const auto d = scott_kreflection(SpaceId::Johnstone, KFamily::D, sc.bound);
  s.count("D_reflections");
  s.expect(d.target == SpaceId::Johnstone && d.verified(), [&] { return std::string("D-reflection of Σ𝕁 is not Σ𝕁"); });
}

// --- L13 / L14 --------------------------------------------------------------
void symbolic_reflection(const Scale& sc, Sweep& s, SpaceId source, SpaceId target) {
  for (auto kind : kAllKinds) {
    const auto r = scott_kreflection(source, kind, sc.bound);
    s.count("reflections");
    s.expect(r.target == target && r.verified(), [&] {
      std::string w = std::string(to_string(kind)) + "-reflection";
      for (const auto& e : r.evidence)
        if (!e.passed) w += "; " + e.name + ": " + e.detail;
      return w;
    });
  }
  s.expect(psi_isomorphism(source, sc.trunc), [&] { return "ψ is not an order isomorphism at level " + std::to_string(sc.trunc); });
  const auto eta = sym::eta_sigma_continuity(source);
  s.expect(eta.continuous, [&] { return "η^σ not continuous: " + eta.witness_set; });
  const auto u = universal_property_check(source, sc.targets, sc.steps);
  s.count("targets", u.targets);
  s.count("maps", u.maps);
  s.count("candidates", u.candidates);
  s.expect(u.ok(), [&] { return u.witnesses.empty() ? std::string("no maps generated") : u.witnesses.front(); });
}

// --- L16 --------------------------------------------------------------------
void alexandroff_reflection(const Scale& sc, Sweep& s) {
  for (const auto& p : posets_upto(sc.alex, 1)) {
    const auto u = universal_property_alexandroff(p, sc.targets);
    s.count("posets");
    s.count("maps", u.maps);
    s.expect(u.ok(), [&] { return describe(p) + ": " + (u.witnesses.empty() ? "no maps" : u.witnesses.front()); });
  }
  // f*(I) = ⋁ f(I) round trip on every monotone map between small posets.
  const auto ps = posets_upto(sc.alex, 1);
  for (const auto& p : ps)
    for (const auto& q : ps)
      for (const auto& g : monotone_maps(p, q)) {
        const auto e = ideal_extension(MonotoneMap{p, q, g});
        s.count("extensions");
        s.expect(e.factors && e.scott_continuous, [&] { return "ideal extension fails on " + describe(p); });
      }
  // ℕ: Γℕ = Σℕ, so the step-map sweep into Σℕ_⊤ covers it; f*(ℕ) = ⋁ℕ = ⊤.
  const auto u = universal_property_check(SpaceId::NatChain, sc.targets, sc.steps);
  s.count("nat_maps", u.maps);
  s.expect(u.ok(), [&] { return u.witnesses.empty() ? std::string("no maps") : u.witnesses.front(); });
  const auto top = sym::sup_directed(SpaceId::NatTop, sym::DirectedDesc::full_chain());
  s.expect(top.sup == sym::Point::top(), [&] { return std::string("⋁ℕ in ℕ_⊤ is not ⊤"); });
}

// --- L17 --------------------------------------------------------------------
void completions_agree(const Scale& sc, Sweep& s) {
  for (const auto& p : posets_upto(sc.posets)) {
    const FinitePoset id = ideals(p).as_poset(p);
    for (auto kind : kAllKinds) {
      s.count("completions");
      const Completion c = d_completion_alexandroff(p, kind);
      s.expect(c.verified(), [&] {
        std::string w = std::string(to_string(kind)) + "-completion of " + describe(p);
        for (const auto& e : c.evidence)
          if (!e.passed) w += "; " + e.name;
        return w;
      });
      const Completion k = ks_completion(p, kind);
      s.expect(k.verified() && find_isomorphism(k.target, id, 16).has_value(),
               [&] { return std::string(to_string(kind)) + "_s-completion differs from Id P for " + describe(p); });
    }
  }
  for (auto source : {SpaceId::NatChain, SpaceId::NatAB}) {
    for (auto kind : kAllKinds) {
      s.count("symbolic_completions");
      const auto c = d_completion_alexandroff(source, kind);
      const auto k = ks_completion(source, kind);
      s.expect(c.verified() && k.verified() && c.target == k.target, [&] {
        return std::string(sym::tag(source)) + " " + std::string(to_string(kind)) + "-completion disagrees";
      });
    }
  }
}

// --- L18 --------------------------------------------------------------------
void noetherian_equiv(const Scale& sc, Sweep& s) {
  for (const auto& p : posets_upto(sc.posets)) {
    s.count("posets");
    const FiniteSpace gamma = alexandroff(p);
    const WayBelow w = way_below(p);
    const bool c1 = check(gamma, Property::Sober).holds;
    const bool c2 = check(gamma, Property::WellFiltered, sc.wf_cap).holds;
    const bool c3 = check(gamma, Property::DSpace).holds;
    const bool c4 = is_noetherian(p);
    const bool c5 = is_dcpo(p) && w.compact == p.carrier();
    const bool c6 = is_dcpo(p) && gamma == scott_space(p);
    s.expect(c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5 && c5 == c6,
             [&] { return "conditions disagree on " + describe(p); });
    if (c1) s.count("all_true");
  }
  // ℕ: Γℕ = Σℕ is the symbolic ℕ; every condition fails.
  const auto sup = sym::sup_directed(SpaceId::NatChain, sym::DirectedDesc::full_chain());
  const bool n1 = sym::check(SpaceId::NatChain, Property::Sober).holds;
  const bool n2 = sym::check(SpaceId::NatChain, Property::WellFiltered).holds;
  const bool n3 = sym::check(SpaceId::NatChain, Property::DSpace).holds;
  const bool dcpo = sup.sup.has_value();
  // The chain 0<1<2<... is directed and has no largest member.
  const bool noetherian = false;
  s.count("nat_conditions", 6);
  s.expect(!n1 && !n2 && !n3 && !noetherian && !dcpo,
           [&] { return std::string("ℕ should fail all six conditions"); });
  s.cert.notes.push_back("ℕ: ascending chain 0<1<2<… has no greatest member; " + sup.reason);
}

using Checker = void (*)(const Scale&, Sweep&);

struct Entry {
  LawInfo info;
  Checker run;
};

void l13(const Scale& sc, Sweep& s) { symbolic_reflection(sc, s, SpaceId::NatChain, SpaceId::NatTop); }
void l14(const Scale& sc, Sweep& s) { symbolic_reflection(sc, s, SpaceId::NatAB, SpaceId::NatABC_Q); }

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {{"L1", "finite-collapse", "𝒮_c(X)⊆𝒟_c(X)⊆𝐝(X)⊆𝐖𝐅(X)⊆ir_c(X)",
        "finite T0 spaces are sober, well-filtered and d-spaces; ir_c = D_c = S_c"},
       finite_collapse},
      {{"L2", "hoare-sober", "hence it is always sober", "P_H of finite closed families is sober, ordered by inclusion"},
       hoare_sober},
      {{"L3", "closure-lemma", "□ cl_X A in X^k", "cl η(A) = □ cl A in every K-reflection"}, closure_lemma},
      {{"L4", "equalizer", "E(f, g)={x∈X : f(x)=g(x)}", "equalizers keep the three properties"}, equalizers},
      {{"L5", "hereditary", "closed-hereditary and saturated-hereditary", "closed and saturated subspaces keep them"},
       hereditary},
      {{"L6", "top-preservation", "X is sober if and only if X_⊤ is sober; (Σ P)_⊤=Σ P_⊤", "X_⊤ preserves and reflects; (Σ P)_⊤ = Σ P_⊤"},
       top_preservation},
      {{"L7", "scott-cont-equiv", "f is Scott continuous", "continuity into Σ Q iff directed sups are preserved"},
       scott_continuity},
      {{"L8", "continuous-domain-sober", "For a continuous domain P, Σ P is sober", "finite posets' Scott spaces are sober"},
       continuous_domain_sober},
      {{"L9", "complete-lattice-wf", "For a complete lattice L, Σ L is well-filtered",
        "finite lattices' Scott spaces are well-filtered"},
       complete_lattice_wf},
      {{"L10", "johnstone-irc", "{↓_𝕁 x : x∈𝕁}∪{𝕁}", "ir_c(Σ𝕁) is the principal ideals and 𝕁"}, johnstone_irc},
      {{"L11", "johnstone-not-wf", "Σ𝕁_⊤ is not well-filtered", "witness families on 𝕁_⊤ and 𝕁"}, johnstone_not_wf},
      {{"L12", "johnstone-not-scott", "is not a Scott space", "Sob and WF reflections of Σ𝕁 are not Scott spaces"},
       johnstone_not_scott},
      {{"L13", "nat-reflection", "Σ ℕ_⊤ with the embedding i_ℕ", "Σℕ reflects to Σℕ_⊤"}, l13},
      {{"L14", "natab-reflection", "ψ is a poset isomorphism", "Σ(ℕ∪{a,b}) reflects to ΣQ via ψ"}, l14},
      {{"L15", "cofinite-eta", "is not continuous; 𝖪(X_cof)=2^X∖{∅}", "η^σ fails on X_cof; K(X_cof) is every nonempty subset"},
       cofinite_eta},
      {{"L16", "alexandroff-reflection", "the Scott space Σ Id P; f*(I)=⋁f(I)", "Γ P reflects to Σ Id P with f*(I) = ⋁ f(I)"},
       alexandroff_reflection},
      {{"L17", "completions-agree", "the 𝐃-completion of P, the 𝐖𝐅-completion", "D-, WF- and Sob-completions are Id P"},
       completions_agree},
      {{"L18", "noetherian-equiv", "P is Noetherian; γ(P)=σ(P)", "the six Noetherian conditions coincide"}, noetherian_equiv},
  };
  return e;
}

}  // namespace

void Scale::apply(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw Error(ErrorKind::ParseError, "scale override needs key=value");
  const auto key = assignment.substr(0, eq);
  const auto text = assignment.substr(eq + 1);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(ErrorKind::ParseError, "scale value is not a number: " + std::string(text));
  std::size_t* slot = nullptr;
  if (key == "spaces") slot = &spaces;
  else if (key == "posets") slot = &posets;
  else if (key == "maps") slot = &maps;
  else if (key == "alex") slot = &alex;
  else if (key == "bound" || key == "B") slot = &bound;
  else if (key == "trunc") slot = &trunc;
  else if (key == "cap") slot = &cap;
  else if (key == "steps") slot = &steps;
  else if (key == "targets") slot = &targets;
  else if (key == "wf_cap") slot = &wf_cap;
  else if (key == "seed") {
    seed = v;
    return;
  } else {
    throw Error(ErrorKind::ParseError, "unknown scale key: " + std::string(key));
  }
  *slot = static_cast<std::size_t>(v);
}

std::map<std::string, std::uint64_t> Scale::as_map() const {
  return {{"spaces", spaces}, {"posets", posets}, {"maps", maps},       {"alex", alex},
          {"bound", bound},   {"trunc", trunc},   {"cap", cap},         {"steps", steps},
          {"targets", targets}, {"wf_cap", wf_cap}, {"seed", seed}};
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Capped: return "capped";
  }
  return "?";
}

const std::vector<LawInfo>& law_catalog() {
  static const std::vector<LawInfo> c = [] {
    std::vector<LawInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return c;
}

Certificate run_law(std::string_view id, const Scale& scale) {
  for (const auto& e : entries()) {
    if (e.info.id != id && e.info.slug != id) continue;
    Certificate cert;
    cert.id = e.info.id;
    cert.slug = e.info.slug;
    cert.anchor = e.info.anchor;
    Sweep s{cert};
    try {
      e.run(scale, s);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::CapExceeded) throw;
      cert.status = Status::Capped;
      cert.witness = err.what();
    }
    return cert;
  }
  throw Error(ErrorKind::UnknownLaw, std::string(id));
}

std::vector<Certificate> run_all(const Scale& scale) {
  std::vector<Certificate> out;
  for (const auto& e : entries()) out.push_back(run_law(e.info.id, scale));
  return out;
}

}  // namespace reflekt
