#include "reflekt/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <unordered_map>

#include "reflekt/error.hpp"

namespace reflekt {

std::size_t enumeration_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("REFLEKT_MAX_CARRIER")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{16};
  }();
  return cap;
}

void require_enumerable(std::size_t n, std::string_view what) {
  if (n > enumeration_cap() || n > 24) {
    throw Error(ErrorKind::CapExceeded, std::string(what) + " needs a sweep over 2^" + std::to_string(n) +
                                            " subsets; carrier cap is " + std::to_string(enumeration_cap()));
  }
}

FinitePoset FinitePoset::from_up_sets(std::vector<std::string> labels, std::vector<Subset> up) {
  const std::size_t n = labels.size();
  if (n > kMaxCarrier) throw Error(ErrorKind::CapExceeded, "carrier larger than " + std::to_string(kMaxCarrier));
  {
    std::set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "label '" + l + "' appears twice");
  }
  up.resize(n);
  for (std::size_t i = 0; i < n; ++i) up[i].insert(i);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (up[i].contains(j) && up[j].contains(i))
        throw Error(ErrorKind::CycleDetected, "'" + labels[i] + "' and '" + labels[j] + "' lie on a cycle");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return labels[a] < labels[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  FinitePoset p;
  p.labels_.resize(n);
  p.up_.assign(n, Subset{});
  p.down_.assign(n, Subset{});
  for (std::size_t i = 0; i < n; ++i) {
    p.labels_[rank[i]] = labels[i];
    up[i].for_each([&](std::size_t j) {
      p.up_[rank[i]].insert(rank[j]);
      p.down_[rank[j]].insert(rank[i]);
    });
  }
  return p;
}

FinitePoset FinitePoset::from_pairs(std::vector<std::string> labels, const std::vector<LabelPair>& pairs) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!idx.emplace(labels[i], i).second)
      throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' appears twice");
  std::vector<Subset> up(labels.size());
  for (const auto& [lo, hi] : pairs) {
    auto a = idx.find(lo);
    auto b = idx.find(hi);
    if (a == idx.end()) throw Error(ErrorKind::UnknownLabel, "'" + lo + "' is not a declared element");
    if (b == idx.end()) throw Error(ErrorKind::UnknownLabel, "'" + hi + "' is not a declared element");
    up[a->second].insert(b->second);
  }
  return from_up_sets(std::move(labels), std::move(up));
}

std::optional<std::size_t> FinitePoset::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t FinitePoset::index(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::UnknownLabel, "'" + std::string(label) + "' is not an element");
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x) {
    Subset strict_up = up_[x];
    strict_up.erase(x);
    strict_up.for_each([&](std::size_t y) {
      Subset between = strict_up & down_[y];
      between.erase(y);
      if (between.empty()) out.emplace_back(x, y);
    });
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::relation() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x) up_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
  return out;
}

Subset FinitePoset::labels_to_subset(const std::vector<std::string>& names) const {
  Subset s;
  for (const auto& n : names) s.insert(index(n));
  return s;
}

std::vector<std::string> FinitePoset::subset_labels(const Subset& s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(labels_[i]); });
  return out;
}

Subset closure(const FinitePoset& p, const Subset& a, Direction dir) {
  Subset out;
  a.for_each([&](std::size_t x) { out |= dir == Direction::Down ? p.down(x) : p.up(x); });
  return out;
}

bool is_lower_set(const FinitePoset& p, const Subset& a) { return closure(p, a, Direction::Down) == a; }
bool is_upper_set(const FinitePoset& p, const Subset& a) { return closure(p, a, Direction::Up) == a; }

bool is_directed(const FinitePoset& p, const Subset& a) {
  if (a.empty()) return false;
  const auto xs = a.members();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!(a & p.up(xs[i]) & p.up(xs[j])).intersects(a)) return false;
  return true;
}

Subset upper_bounds(const FinitePoset& p, const Subset& a) {
  Subset ub = p.carrier();
  a.for_each([&](std::size_t x) { ub &= p.up(x); });
  return ub;
}

std::optional<std::size_t> greatest(const FinitePoset& p, const Subset& a) {
  std::optional<std::size_t> out;
  a.for_each([&](std::size_t x) {
    if (!out && a.is_subset_of(p.down(x))) out = x;
  });
  return out;
}

std::optional<std::size_t> supremum(const FinitePoset& p, const Subset& a) {
  const Subset ub = upper_bounds(p, a);
  std::optional<std::size_t> out;
  ub.for_each([&](std::size_t x) {
    if (!out && ub.is_subset_of(p.up(x))) out = x;
  });
  return out;
}

Subset maximal_elements(const FinitePoset& p) {
  Subset out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.up(x).size() == 1) out.insert(x);
  return out;
}

namespace {

template <typename F>
void for_each_subset(std::size_t n, F&& f) {
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < limit; ++m) f(Subset::from_mask(m));
}

}  // namespace

std::vector<Subset> directed_subsets(const FinitePoset& p) {
  require_enumerable(p.size(), "directed-set enumeration");
  std::vector<Subset> out;
  for_each_subset(p.size(), [&](const Subset& s) {
    if (is_directed(p, s)) out.push_back(s);
  });
  return out;
}

std::vector<DirectedSup> directed_sups(const FinitePoset& p) {
  std::vector<DirectedSup> out;
  for (const auto& d : directed_subsets(p))
    if (auto s = supremum(p, d)) out.push_back({d, *s});
  return out;
}

bool is_dcpo(const FinitePoset& p) {
  for (const auto& d : directed_subsets(p))
    if (!supremum(p, d)) return false;
  return true;
}

bool is_noetherian(const FinitePoset& p) {
  for (const auto& d : directed_subsets(p))
    if (!greatest(p, d)) return false;
  return true;
}

bool is_complete_lattice(const FinitePoset& p) {
  require_enumerable(p.size(), "complete-lattice check");
  bool ok = true;
  for_each_subset(p.size(), [&](const Subset& s) {
    if (ok && !supremum(p, s)) ok = false;
  });
  return ok;
}

std::string render_subset(const std::vector<std::string>& labels, const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += labels[i];
    first = false;
  });
  return out + "}";
}

FinitePoset IdealFamily::as_poset(const FinitePoset& source) const {
  std::vector<std::string> labels;
  std::vector<Subset> up(members.size());
  for (const auto& m : members) labels.push_back(render_subset(source.labels(), m));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (members[i].is_subset_of(members[j])) up[i].insert(j);
  return FinitePoset::from_up_sets(std::move(labels), std::move(up));
}

IdealFamily ideals(const FinitePoset& p) {
  require_enumerable(p.size(), "ideal enumeration");
  IdealFamily fam;
  for_each_subset(p.size(), [&](const Subset& s) {
    if (is_lower_set(p, s) && is_directed(p, s)) fam.members.push_back(s);
  });
  std::sort(fam.members.begin(), fam.members.end());
  return fam;
}

WayBelow way_below(const FinitePoset& p) {
  const auto sups = directed_sups(p);
  const std::size_t n = p.size();
  WayBelow wb;
  wb.below.assign(n, Subset{});
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      bool way = true;
      for (const auto& [d, s] : sups) {
        if (p.leq(y, s) && !p.up(x).intersects(d)) {
          way = false;
          break;
        }
      }
      if (way) wb.below[y].insert(x);
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    if (wb.holds(k, k)) wb.compact.insert(k);

  wb.continuous_domain = true;
  wb.algebraic_domain = true;
  for (std::size_t x = 0; x < n; ++x) {
    const Subset approx = wb.below[x];
    if (!is_directed(p, approx) || supremum(p, approx) != x) wb.continuous_domain = false;
    const Subset compact_below = wb.compact & p.down(x);
    if (!is_directed(p, compact_below) || supremum(p, compact_below) != x) wb.algebraic_domain = false;
  }
  return wb;
}

std::string fresh_label(const std::vector<std::string>& taken, const std::string& base) {
  std::string candidate = base;
  while (std::find(taken.begin(), taken.end(), candidate) != taken.end()) candidate += '\'';
  return candidate;
}

WithTop add_top(const FinitePoset& p) {
  std::vector<std::string> labels = p.labels();
  const std::string top = fresh_label(labels, "⊤");
  labels.push_back(top);
  const std::size_t t = p.size();
  std::vector<Subset> up(p.size() + 1);
  for (std::size_t x = 0; x < p.size(); ++x) {
    up[x] = p.up(x);
    up[x].insert(t);
  }
  up[t].insert(t);
  WithTop out{FinitePoset::from_up_sets(labels, std::move(up)), 0, {}};
  out.top = out.poset.index(top);
  for (std::size_t x = 0; x < p.size(); ++x) out.embed.push_back(out.poset.index(p.label(x)));
  return out;
}

bool is_monotone(const MonotoneMap& f) {
  const auto& p = f.source;
  for (std::size_t x = 0; x < p.size(); ++x) {
    bool ok = true;
    p.up(x).for_each([&](std::size_t y) {
      if (!f.target.leq(f.graph[x], f.graph[y])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

ContinuityReport scott_continuity_check(const MonotoneMap& f) {
  if (f.graph.size() != f.source.size()) throw Error(ErrorKind::SignatureMismatch, "map graph size differs from source");
  if (!is_monotone(f)) throw Error(ErrorKind::NotMonotone, "map does not preserve order");
  ContinuityReport rep;
  for (const auto& [d, s] : directed_sups(f.source)) {
    ++rep.directed_sets_checked;
    Subset image;
    d.for_each([&](std::size_t x) { image.insert(f.graph[x]); });
    const auto img_sup = supremum(f.target, image);
    if (!img_sup || *img_sup != f.graph[s]) {
      rep.continuous = false;
      rep.witness = d;
      return rep;
    }
  }
  return rep;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& a, const FinitePoset& b, std::size_t cap) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  if (n > cap) throw Error(ErrorKind::CapExceeded, "isomorphism search capped at " + std::to_string(cap) + " elements");
  auto sig = [](const FinitePoset& p, std::size_t x) { return std::pair{p.up(x).size(), p.down(x).size()}; };
  {
    std::vector<std::pair<std::size_t, std::size_t>> sa, sb;
    for (std::size_t x = 0; x < n; ++x) {
      sa.push_back(sig(a, x));
      sb.push_back(sig(b, x));
    }
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<std::size_t> map(n, 0);
  Subset used;
  auto extend = [&](auto&& self, std::size_t x) -> bool {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used.contains(y) || sig(a, x) != sig(b, y)) continue;
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z)
        ok = a.leq(z, x) == b.leq(map[z], y) && a.leq(x, z) == b.leq(y, map[z]);
      if (!ok) continue;
      map[x] = y;
      used.insert(y);
      if (self(self, x + 1)) return true;
      used.erase(y);
    }
    return false;
  };
  if (extend(extend, 0)) return map;
  return std::nullopt;
}

std::vector<FinitePoset> all_posets(std::size_t n) {
  if (n > 6) throw Error(ErrorKind::CapExceeded, "labeled poset enumeration capped at 6 points");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<FinitePoset> out;
  std::vector<int> orient(pairs.size(), 0);
  while (true) {
    std::vector<Subset> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i].insert(i);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (orient[k] == 1) up[pairs[k].first].insert(pairs[k].second);
      if (orient[k] == 2) up[pairs[k].second].insert(pairs[k].first);
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      up[i].for_each([&](std::size_t j) {
        if (!up[j].is_subset_of(up[i])) transitive = false;
      });
    if (transitive) out.push_back(FinitePoset::from_up_sets(labels, up));

    std::size_t k = 0;
    while (k < orient.size() && orient[k] == 2) orient[k++] = 0;
    if (k == orient.size()) break;
    ++orient[k];
  }
  return out;
}

std::size_t count_posets_brute_force(std::size_t n) {
  if (n > 5) throw Error(ErrorKind::CapExceeded, "brute-force poset count capped at 5 points");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) cells.emplace_back(i, j);
  std::size_t count = 0;
  const std::uint64_t limit = std::uint64_t{1} << cells.size();
  for (std::uint64_t m = 0; m < limit; ++m) {
    bool rel[6][6] = {};
    for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if ((m >> c) & 1U) rel[cells[c].first][cells[c].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && rel[i][j] && rel[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (rel[i][j] && rel[j][k] && !rel[i][k]) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

std::vector<std::vector<std::size_t>> monotone_maps(const FinitePoset& source, const FinitePoset& target) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = source.size();
  std::vector<std::size_t> g(n, 0);
  auto assign = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      out.push_back(g);
      return;
    }
    for (std::size_t v = 0; v < target.size(); ++v) {
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z) {
        if (source.leq(z, x) && !target.leq(g[z], v)) ok = false;
        if (source.leq(x, z) && !target.leq(v, g[z])) ok = false;
      }
      if (!ok) continue;
      g[x] = v;
      self(self, x + 1);
    }
  };
  assign(assign, 0);
  return out;
}

}  // namespace reflekt
