#include "reflekt/space.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "reflekt/error.hpp"

namespace reflekt {

namespace {

void sort_unique(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename F>
void for_each_subset(std::size_t n, F&& f) {
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < limit; ++m) f(Subset::from_mask(m));
}

Subset image_of(const std::vector<std::size_t>& graph, const Subset& s) {
  Subset out;
  s.for_each([&](std::size_t x) { out.insert(graph[x]); });
  return out;
}

Subset preimage_of(const std::vector<std::size_t>& graph, const Subset& s) {
  Subset out;
  for (std::size_t x = 0; x < graph.size(); ++x)
    if (s.contains(graph[x])) out.insert(x);
  return out;
}

bool is_scott_open(const FinitePoset& p, const std::vector<DirectedSup>& sups, const Subset& u) {
  if (!is_upper_set(p, u)) return false;
  for (const auto& [d, s] : sups)
    if (u.contains(s) && !d.intersects(u)) return false;
  return true;
}

}  // namespace

FiniteSpace::FiniteSpace() : closed_{Subset{}} {}

FiniteSpace FiniteSpace::from_closed_sets(std::vector<std::string> carrier, std::vector<Subset> closed) {
  const std::size_t n = carrier.size();
  if (n > kMaxCarrier) throw Error(ErrorKind::CapExceeded, "carrier larger than " + std::to_string(kMaxCarrier));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return carrier[a] < carrier[b]; });
  for (std::size_t r = 1; r < n; ++r)
    if (carrier[order[r]] == carrier[order[r - 1]])
      throw Error(ErrorKind::DuplicateLabel, "label '" + carrier[order[r]] + "' appears twice");
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  FiniteSpace x;
  x.carrier_.resize(n);
  for (std::size_t i = 0; i < n; ++i) x.carrier_[rank[i]] = carrier[i];
  const Subset full = Subset::full(n);
  x.closed_.clear();
  for (const auto& c : closed) {
    if (!c.is_subset_of(full)) throw Error(ErrorKind::InvalidTopology, "closed set mentions a point outside the carrier");
    Subset mapped;
    c.for_each([&](std::size_t i) { mapped.insert(rank[i]); });
    x.closed_.push_back(mapped);
  }
  sort_unique(x.closed_);
  if (!x.is_closed(Subset{}) || !x.is_closed(full))
    throw Error(ErrorKind::InvalidTopology, "closed family must contain the empty set and the carrier");
  for (std::size_t i = 0; i < x.closed_.size(); ++i)
    for (std::size_t j = i + 1; j < x.closed_.size(); ++j) {
      if (!x.is_closed(x.closed_[i] | x.closed_[j]))
        throw Error(ErrorKind::InvalidTopology, "closed family is not closed under union");
      if (!x.is_closed(x.closed_[i] & x.closed_[j]))
        throw Error(ErrorKind::InvalidTopology, "closed family is not closed under intersection");
    }
  x.finish();
  return x;
}

FiniteSpace FiniteSpace::from_open_subbase(std::vector<std::string> carrier, const std::vector<Subset>& subbase) {
  const Subset full = Subset::full(carrier.size());
  // Finite intersections first, then arbitrary unions.
  std::vector<Subset> base{full};
  std::unordered_set<Subset, SubsetHash> seen{full};
  for (const auto& s : subbase) {
    const std::size_t existing = base.size();
    for (std::size_t i = 0; i < existing; ++i) {
      const Subset meet = base[i] & s;
      if (seen.insert(meet).second) base.push_back(meet);
    }
  }
  std::vector<Subset> opens{Subset{}};
  std::unordered_set<Subset, SubsetHash> open_seen{Subset{}};
  for (const auto& b : base) {
    const std::size_t existing = opens.size();
    for (std::size_t i = 0; i < existing; ++i) {
      const Subset join = opens[i] | b;
      if (open_seen.insert(join).second) opens.push_back(join);
    }
  }
  std::vector<Subset> closed;
  closed.reserve(opens.size());
  for (const auto& u : opens) closed.push_back(full - u);
  return from_closed_sets(std::move(carrier), std::move(closed));
}

void FiniteSpace::finish() {
  point_closure_.assign(size(), all());
  for (const auto& c : closed_)
    c.for_each([&](std::size_t x) { point_closure_[x] &= c; });
}

std::optional<std::size_t> FiniteSpace::find(std::string_view label) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), label,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == carrier_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - carrier_.begin());
}

std::size_t FiniteSpace::index(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::UnknownLabel, "'" + std::string(label) + "' is not a point");
}

std::vector<Subset> FiniteSpace::open_sets() const {
  std::vector<Subset> out;
  out.reserve(closed_.size());
  for (const auto& c : closed_) out.push_back(all() - c);
  sort_unique(out);
  return out;
}

bool FiniteSpace::is_closed(const Subset& s) const { return std::binary_search(closed_.begin(), closed_.end(), s); }

Subset FiniteSpace::closure(const Subset& s) const {
  Subset out = all();
  for (const auto& c : closed_)
    if (s.is_subset_of(c)) out &= c;
  return out;
}

Subset FiniteSpace::saturation(const Subset& s) const {
  Subset out = all();
  for (const auto& c : closed_) {
    const Subset u = all() - c;
    if (s.is_subset_of(u)) out &= u;
  }
  return out;
}

bool FiniteSpace::is_t0() const {
  std::unordered_set<Subset, SubsetHash> seen;
  for (const auto& c : point_closure_)
    if (!seen.insert(c).second) return false;
  return true;
}

FiniteSpace alexandroff(const FinitePoset& p) {
  require_enumerable(p.size(), "Alexandroff topology");
  std::vector<Subset> closed;
  for_each_subset(p.size(), [&](const Subset& s) {
    if (is_lower_set(p, s)) closed.push_back(s);
  });
  return FiniteSpace::from_closed_sets(p.labels(), std::move(closed));
}

FiniteSpace scott_space(const FinitePoset& p) {
  const auto sups = directed_sups(p);
  std::vector<Subset> closed;
  const Subset full = p.carrier();
  for_each_subset(p.size(), [&](const Subset& u) {
    if (is_scott_open(p, sups, u)) closed.push_back(full - u);
  });
  return FiniteSpace::from_closed_sets(p.labels(), std::move(closed));
}

FiniteSpace upper_space(const FinitePoset& p) {
  std::vector<Subset> subbase;
  for (std::size_t x = 0; x < p.size(); ++x) subbase.push_back(p.carrier() - p.down(x));
  return FiniteSpace::from_open_subbase(p.labels(), subbase);
}

FinitePoset specialization(const FiniteSpace& x) {
  if (!x.is_t0()) throw Error(ErrorKind::NotT0, "two points share a closure");
  std::vector<Subset> up(x.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (x.point_closure(b).contains(a)) up[a].insert(b);
  return FinitePoset::from_up_sets(x.carrier(), std::move(up));
}

std::vector<Subset> point_closures(const FiniteSpace& x) {
  std::vector<Subset> out;
  for (std::size_t p = 0; p < x.size(); ++p) out.push_back(x.point_closure(p));
  sort_unique(out);
  return out;
}

std::vector<Subset> directed_closures(const FiniteSpace& x) {
  const FinitePoset p = specialization(x);
  std::vector<Subset> out;
  for (const auto& d : directed_subsets(p)) out.push_back(x.closure(d));
  sort_unique(out);
  return out;
}

std::vector<Subset> irreducibles(const FiniteSpace& x) {
  std::vector<Subset> out;
  for (const auto& a : x.closed_sets()) {
    if (a.empty()) continue;
    std::vector<Subset> inside;
    for (const auto& c : x.closed_sets())
      if (c.is_subset_of(a)) inside.push_back(c);
    bool irreducible = true;
    for (std::size_t i = 0; i < inside.size() && irreducible; ++i)
      for (std::size_t j = i; j < inside.size() && irreducible; ++j)
        if (a.is_subset_of(inside[i] | inside[j]) && !a.is_subset_of(inside[i]) && !a.is_subset_of(inside[j]))
          irreducible = false;
    if (irreducible) out.push_back(a);
  }
  return out;
}

std::string_view to_string(Property p) {
  switch (p) {
    case Property::Sober: return "sober";
    case Property::WellFiltered: return "well-filtered";
    case Property::DSpace: return "d-space";
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view name) {
  if (name == "sober") return Property::Sober;
  if (name == "well-filtered" || name == "well_filtered" || name == "wf") return Property::WellFiltered;
  if (name == "d-space" || name == "d_space" || name == "d") return Property::DSpace;
  return std::nullopt;
}

bool is_compact(const FiniteSpace& x, const Subset& k) {
  const auto opens = x.open_sets();
  Subset covered;
  std::size_t used = 0;
  for (const auto& u : opens) {
    if (k.is_subset_of(covered)) break;
    if (!(u & k).is_subset_of(covered)) {
      covered |= u;
      ++used;
    }
  }
  return k.is_subset_of(covered) && used <= opens.size();
}

std::optional<Subset> CompactSatFamily::smyth_maximum() const {
  for (const auto& k : members) {
    bool top = true;
    for (const auto& other : members)
      if (!smyth_leq(other, k)) top = false;
    if (top) return k;
  }
  return std::nullopt;
}

CompactSatFamily compact_saturated(const FiniteSpace& x) {
  require_enumerable(x.size(), "compact saturated sets");
  CompactSatFamily fam;
  for_each_subset(x.size(), [&](const Subset& k) {
    if (!k.empty() && x.saturation(k) == k && is_compact(x, k)) fam.members.push_back(k);
  });
  std::sort(fam.members.begin(), fam.members.end());
  return fam;
}

namespace {

PropertyCheck check_sober(const FiniteSpace& x) {
  PropertyCheck out;
  out.property = Property::Sober;
  for (const auto& a : irreducibles(x)) {
    ++out.instances;
    std::size_t generic = 0;
    for (std::size_t p = 0; p < x.size(); ++p)
      if (x.point_closure(p) == a) ++generic;
    if (generic != 1 && out.holds) {
      out.holds = false;
      out.witness_set = a;
      out.detail = "irreducible closed set with " + std::to_string(generic) + " generic points";
    }
  }
  if (out.holds) out.detail = "every irreducible closed set is a unique point closure";
  return out;
}

PropertyCheck check_d_space(const FiniteSpace& x) {
  PropertyCheck out;
  out.property = Property::DSpace;
  const FinitePoset p = specialization(x);
  const auto directed = directed_subsets(p);
  std::vector<DirectedSup> sups;
  for (const auto& d : directed) {
    ++out.instances;
    auto s = supremum(p, d);
    if (!s) {
      if (out.holds) {
        out.holds = false;
        out.witness_set = d;
        out.detail = "directed set without supremum";
      }
      continue;
    }
    sups.push_back({d, *s});
  }
  for (const auto& u : x.open_sets()) {
    ++out.instances;
    if (!is_scott_open(p, sups, u) && out.holds) {
      out.holds = false;
      out.witness_open = u;
      out.detail = "open set that is not Scott open";
    }
  }
  if (out.holds) out.detail = "specialization order is a dcpo and every open is Scott open";
  return out;
}

PropertyCheck check_well_filtered(const FiniteSpace& x, std::size_t cap) {
  PropertyCheck out;
  out.property = Property::WellFiltered;
  const auto k = compact_saturated(x).members;
  if (k.size() > cap)
    throw Error(ErrorKind::CapExceeded, "K(X) has " + std::to_string(k.size()) + " members; cap is " +
                                            std::to_string(cap));
  const auto opens = x.open_sets();
  const std::size_t m = k.size();

  // Each antichain of the Smyth order generates the down-closed family of all
  // members lying Smyth-below one of its elements.
  std::vector<std::size_t> chosen;
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (!out.holds) return;
    if (!chosen.empty()) {
      std::vector<Subset> family;
      for (std::size_t i = 0; i < m; ++i)
        for (auto a : chosen)
          if (CompactSatFamily::smyth_leq(k[i], k[a])) {
            family.push_back(k[i]);
            break;
          }
      // Any two members sit above two generators, so lower bounds for the
      // generator pairs are lower bounds for every pair.
      bool filtered = true;
      for (std::size_t i = 0; i < chosen.size() && filtered; ++i)
        for (std::size_t j = i + 1; j < chosen.size() && filtered; ++j) {
          const Subset meet = k[chosen[i]] & k[chosen[j]];
          filtered = std::any_of(family.begin(), family.end(), [&](const Subset& c) { return c.is_subset_of(meet); });
        }
      if (filtered) {
        Subset inter = x.all();
        for (const auto& f : family) inter &= f;
        for (const auto& u : opens) {
          ++out.instances;
          if (!inter.is_subset_of(u)) continue;
          const bool some_inside =
              std::any_of(family.begin(), family.end(), [&](const Subset& c) { return c.is_subset_of(u); });
          if (!some_inside) {
            out.holds = false;
            out.witness_family = family;
            out.witness_open = u;
            out.detail = "filtered family whose intersection lies in an open no member fits in";
            return;
          }
        }
      }
    }
    for (std::size_t i = start; i < m; ++i) {
      bool incomparable = true;
      for (auto a : chosen)
        if (CompactSatFamily::smyth_leq(k[a], k[i]) || CompactSatFamily::smyth_leq(k[i], k[a])) incomparable = false;
      if (!incomparable) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  visit(visit, 0);
  if (out.holds) out.detail = "every filtered family of compact saturated sets passes every open";
  return out;
}

}  // namespace

PropertyCheck check(const FiniteSpace& x, Property property, std::size_t wf_cap) {
  if (!x.is_t0()) throw Error(ErrorKind::NotT0, "two points share a closure");
  switch (property) {
    case Property::Sober: return check_sober(x);
    case Property::WellFiltered: return check_well_filtered(x, wf_cap);
    case Property::DSpace: return check_d_space(x);
  }
  return {};
}

std::optional<std::size_t> HoareSpace::member_index(const Subset& a) const {
  for (std::size_t i = 0; i < family.size(); ++i)
    if (family[i] == a) return i;
  return std::nullopt;
}

HoareSpace hoare_space(const FiniteSpace& x, std::vector<Subset> family) {
  if (family.empty()) throw Error(ErrorKind::EmptyMember, "the family must be nonempty");
  sort_unique(family);
  for (const auto& a : family) {
    if (a.empty()) throw Error(ErrorKind::EmptyMember, "the empty set cannot be a point of P_H");
    if (!x.is_closed(a)) throw Error(ErrorKind::NotClosed, render_subset(x.carrier(), a) + " is not closed");
  }
  std::vector<std::string> labels;
  for (const auto& a : family) labels.push_back(render_subset(x.carrier(), a));
  std::vector<Subset> subbase;
  for (const auto& u : x.open_sets()) {
    Subset diamond;
    for (std::size_t i = 0; i < family.size(); ++i)
      if (family[i].intersects(u)) diamond.insert(i);
    subbase.push_back(diamond);
  }
  HoareSpace h{FiniteSpace::from_open_subbase(labels, subbase), std::vector<Subset>(family.size())};
  for (std::size_t i = 0; i < family.size(); ++i) h.family[h.space.index(labels[i])] = family[i];
  return h;
}

std::optional<std::vector<std::size_t>> canonical_map(const FiniteSpace& x, const HoareSpace& h) {
  std::vector<std::size_t> graph;
  for (std::size_t p = 0; p < x.size(); ++p) {
    auto i = h.member_index(x.point_closure(p));
    if (!i) return std::nullopt;
    graph.push_back(*i);
  }
  return graph;
}

bool is_continuous(const FiniteSpace& source, const FiniteSpace& target, const std::vector<std::size_t>& graph) {
  if (graph.size() != source.size()) return false;
  for (const auto& c : target.closed_sets())
    if (!source.is_closed(preimage_of(graph, c))) return false;
  return true;
}

bool is_continuous(const ContinuousMap& f) { return is_continuous(f.source, f.target, f.graph); }

bool is_embedding(const FiniteSpace& source, const FiniteSpace& target, const std::vector<std::size_t>& graph) {
  if (!is_continuous(source, target, graph)) return false;
  const Subset img = image_of(graph, source.all());
  if (img.size() != source.size()) return false;
  const auto target_opens = target.open_sets();
  for (const auto& u : source.open_sets()) {
    const Subset fu = image_of(graph, u);
    const bool relatively_open =
        std::any_of(target_opens.begin(), target_opens.end(), [&](const Subset& v) { return (v & img) == fu; });
    if (!relatively_open) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> continuous_maps(const FiniteSpace& source, const FiniteSpace& target) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = source.size();
  if (target.size() == 0 && n > 0) return out;
  std::vector<std::size_t> g(n, 0);
  auto assign = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      if (is_continuous(source, target, g)) out.push_back(g);
      return;
    }
    for (std::size_t v = 0; v < target.size(); ++v) {
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z) {
        if (source.point_closure(x).contains(z) && !target.point_closure(v).contains(g[z])) ok = false;
        if (source.point_closure(z).contains(x) && !target.point_closure(g[z]).contains(v)) ok = false;
      }
      if (!ok) continue;
      g[x] = v;
      self(self, x + 1);
    }
  };
  assign(assign, 0);
  return out;
}

Subspace induced_subspace(const FiniteSpace& x, const Subset& a) {
  const auto pts = a.members();
  std::vector<std::string> labels;
  for (auto p : pts) labels.push_back(x.label(p));
  std::vector<Subset> closed;
  for (const auto& c : x.closed_sets()) {
    Subset rel;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (c.contains(pts[i])) rel.insert(i);
    closed.push_back(rel);
  }
  return {FiniteSpace::from_closed_sets(std::move(labels), std::move(closed)), a};
}

Subspace equalizer(const ContinuousMap& f, const ContinuousMap& g) {
  if (!(f.source == g.source) || !(f.target == g.target))
    throw Error(ErrorKind::SignatureMismatch, "equalizer needs maps with a shared source and target");
  if (f.graph.size() != f.source.size() || g.graph.size() != g.source.size())
    throw Error(ErrorKind::SignatureMismatch, "map graph size differs from source");
  Subset agree;
  for (std::size_t x = 0; x < f.source.size(); ++x)
    if (f.graph[x] == g.graph[x]) agree.insert(x);
  return induced_subspace(f.source, agree);
}

Subspace subspace(const FiniteSpace& x, const Subset& a, SubspaceKind kind) {
  if (kind == SubspaceKind::Closed && !x.is_closed(a))
    throw Error(ErrorKind::KindMismatch, render_subset(x.carrier(), a) + " is not closed");
  if (kind == SubspaceKind::Saturated && x.saturation(a) != a)
    throw Error(ErrorKind::KindMismatch, render_subset(x.carrier(), a) + " is not saturated");
  return induced_subspace(x, a);
}

SpaceWithTop x_top(const FiniteSpace& x) {
  std::vector<std::string> labels = x.carrier();
  const std::string top = fresh_label(labels, "⊤");
  labels.push_back(top);
  std::vector<Subset> closed = x.closed_sets();
  closed.push_back(Subset::full(labels.size()));
  SpaceWithTop out{FiniteSpace::from_closed_sets(labels, std::move(closed)), 0, {}};
  out.top = out.space.index(top);
  for (std::size_t p = 0; p < x.size(); ++p) out.embed.push_back(out.space.index(x.label(p)));
  return out;
}

std::optional<std::vector<std::size_t>> find_homeomorphism(const FiniteSpace& x, const FiniteSpace& y) {
  if (x.size() != y.size() || x.closed_sets().size() != y.closed_sets().size()) return std::nullopt;
  auto iso = find_isomorphism(specialization(x), specialization(y), 16);
  if (!iso) return std::nullopt;
  // Specialization posets share the carriers' label order, so indices agree.
  std::vector<std::size_t> inverse(iso->size());
  for (std::size_t i = 0; i < iso->size(); ++i) inverse[(*iso)[i]] = i;
  if (!is_continuous(x, y, *iso) || !is_continuous(y, x, inverse)) return std::nullopt;
  return iso;
}

std::vector<FiniteSpace> all_t0_spaces(std::size_t n) {
  if (n > 4) throw Error(ErrorKind::CapExceeded, "T0 space enumeration capped at 4 points");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> middle;
  for (std::uint64_t m = 1; m < full; ++m) middle.push_back(m);
  std::vector<FiniteSpace> out;
  const std::uint64_t families = std::uint64_t{1} << middle.size();
  for (std::uint64_t pick = 0; pick < families; ++pick) {
    std::vector<std::uint64_t> fam{0, full};
    for (std::size_t i = 0; i < middle.size(); ++i)
      if ((pick >> i) & 1U) fam.push_back(middle[i]);
    if (n == 0) fam = {0};
    auto member = [&](std::uint64_t s) { return std::find(fam.begin(), fam.end(), s) != fam.end(); };
    bool topology = true;
    for (std::size_t i = 0; i < fam.size() && topology; ++i)
      for (std::size_t j = i + 1; j < fam.size() && topology; ++j)
        topology = member(fam[i] | fam[j]) && member(fam[i] & fam[j]);
    if (!topology) continue;
    // T0: the closures of distinct points differ.
    std::vector<std::uint64_t> cl(n, full);
    for (auto c : fam)
      for (std::size_t p = 0; p < n; ++p)
        if ((c >> p) & 1U) cl[p] &= c;
    std::set<std::uint64_t> distinct(cl.begin(), cl.end());
    if (distinct.size() != n) continue;
    std::vector<Subset> closed;
    for (auto c : fam) closed.push_back(Subset::from_mask(c));
    out.push_back(FiniteSpace::from_closed_sets(labels, std::move(closed)));
    if (n == 0) break;
  }
  return out;
}

}  // namespace reflekt
