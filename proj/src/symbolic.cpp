#include "reflekt/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "reflekt/error.hpp"

namespace reflekt::sym {

namespace {

constexpr std::int64_t kColOmega = INT64_MAX;      // every finite row and the ω-point
constexpr std::int64_t kColAll = INT64_MAX - 1;    // every finite row, no ω-point

void require_same(const ClosedSetRep& x, const ClosedSetRep& y) {
  if (x.space != y.space)
    throw Error(ErrorKind::SpaceMismatch, std::string(tag(x.space)) + " vs " + std::string(tag(y.space)));
}

std::int64_t max_omega(const ClosedSetRep& r) {
  return r.omega.empty() ? -1 : static_cast<std::int64_t>(*r.omega.rbegin());
}

// Column value of a non-whole Johnstone rep.
std::int64_t col(const ClosedSetRep& r, std::uint64_t c) {
  if (r.omega.count(c)) return kColOmega;
  auto it = r.heights.find(c);
  if (it == r.heights.end()) return r.floor;
  return it->second == kAll ? kColAll : it->second;
}

std::set<std::uint64_t> columns(const ClosedSetRep& r) {
  std::set<std::uint64_t> out(r.omega.begin(), r.omega.end());
  for (const auto& [c, h] : r.heights) out.insert(c);
  return out;
}

ClosedSetRep from_columns(SpaceId s, const std::map<std::uint64_t, std::int64_t>& vals, std::int64_t generic) {
  ClosedSetRep r;
  r.space = s;
  r.floor = generic;
  for (const auto& [c, v] : vals) {
    if (v == kColOmega)
      r.omega.insert(c);
    else
      r.heights[c] = v == kColAll ? kAll : v;
  }
  return normalize(r);
}

template <typename F>
ClosedSetRep combine_johnstone(const ClosedSetRep& x, const ClosedSetRep& y, F&& pick) {
  std::map<std::uint64_t, std::int64_t> vals;
  auto cols = columns(x);
  auto cy = columns(y);
  cols.insert(cy.begin(), cy.end());
  for (auto c : cols) vals[c] = pick(col(x, c), col(y, c));
  return from_columns(x.space, vals, pick(x.floor, y.floor));
}

std::string set_text(const std::set<std::uint64_t>& s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(v);
  }
  return out + "}";
}

std::uint64_t smallest_outside(const std::set<std::uint64_t>& s) {
  std::uint64_t m = 0;
  while (s.count(m)) ++m;
  return m;
}

}  // namespace

std::string_view tag(SpaceId s) {
  switch (s) {
    case SpaceId::NatChain: return "nat";
    case SpaceId::NatTop: return "nat-top";
    case SpaceId::NatAB: return "nat-ab";
    case SpaceId::NatABC_Q: return "q";
    case SpaceId::Johnstone: return "johnstone";
    case SpaceId::JohnstoneTop: return "johnstone-top";
    case SpaceId::CofiniteNat: return "cofinite";
    case SpaceId::CofiniteNatTop: return "cofinite-top";
  }
  return "?";
}

std::string_view display_name(SpaceId s) {
  switch (s) {
    case SpaceId::NatChain: return "ℕ";
    case SpaceId::NatTop: return "ℕ_⊤";
    case SpaceId::NatAB: return "ℕ∪{a,b}";
    case SpaceId::NatABC_Q: return "ℕ∪{a,b,c}";
    case SpaceId::Johnstone: return "𝕁";
    case SpaceId::JohnstoneTop: return "𝕁_⊤";
    case SpaceId::CofiniteNat: return "X_cof";
    case SpaceId::CofiniteNatTop: return "(X_cof)_⊤";
  }
  return "?";
}

std::optional<SpaceId> parse_space(std::string_view t) {
  for (auto s : kAllSpaces)
    if (tag(s) == t) return s;
  if (t == "nat-chain" || t == "n") return SpaceId::NatChain;
  if (t == "nat-abc" || t == "nat-abc-q") return SpaceId::NatABC_Q;
  if (t == "j") return SpaceId::Johnstone;
  if (t == "cof") return SpaceId::CofiniteNat;
  return std::nullopt;
}

bool is_johnstone(SpaceId s) { return s == SpaceId::Johnstone || s == SpaceId::JohnstoneTop; }
bool is_cofinite(SpaceId s) { return s == SpaceId::CofiniteNat || s == SpaceId::CofiniteNatTop; }
bool is_nat_like(SpaceId s) { return !is_johnstone(s) && !is_cofinite(s); }
bool has_top(SpaceId s) {
  return s == SpaceId::NatTop || s == SpaceId::JohnstoneTop || s == SpaceId::CofiniteNatTop;
}

std::string to_string(const Point& p) {
  switch (p.kind) {
    case Point::Kind::Nat: return std::to_string(p.j);
    case Point::Kind::A: return "a";
    case Point::Kind::B: return "b";
    case Point::Kind::C: return "c";
    case Point::Kind::Top: return "⊤";
    case Point::Kind::Pair:
      return "(" + std::to_string(p.j) + "," + (p.k == kOmega ? std::string("ω") : std::to_string(p.k)) + ")";
  }
  return "?";
}

std::optional<Point> parse_point(std::string_view text) {
  auto parse_nat = [](std::string_view t) -> std::optional<std::uint64_t> {
    if (t.empty() || t.size() > 18) return std::nullopt;
    std::uint64_t v = 0;
    for (char ch : t) {
      if (ch < '0' || ch > '9') return std::nullopt;
      v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return v;
  };
  if (text == "a") return Point::a();
  if (text == "b") return Point::b();
  if (text == "c") return Point::c();
  if (text == "⊤" || text == "top") return Point::top();
  if (auto n = parse_nat(text)) return Point::nat(*n);
  if (text.size() >= 5 && text.front() == '(' && text.back() == ')') {
    auto body = text.substr(1, text.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto j = parse_nat(body.substr(0, comma));
    auto rest = body.substr(comma + 1);
    if (!j) return std::nullopt;
    if (rest == "ω" || rest == "w" || rest == "omega") return Point::omega(*j);
    if (auto k = parse_nat(rest)) return Point::pair(*j, *k);
  }
  return std::nullopt;
}

bool valid_point(SpaceId s, const Point& p) {
  using K = Point::Kind;
  switch (p.kind) {
    case K::Nat: return is_nat_like(s) || is_cofinite(s);
    case K::A:
    case K::B: return s == SpaceId::NatAB || s == SpaceId::NatABC_Q;
    case K::C: return s == SpaceId::NatABC_Q;
    case K::Top: return has_top(s);
    case K::Pair: return is_johnstone(s) && p.j != kOmega;
  }
  return false;
}

void require_point(SpaceId s, const Point& p) {
  if (!valid_point(s, p))
    throw Error(ErrorKind::BadPoint, to_string(p) + " is not a point of " + std::string(display_name(s)));
}

bool leq(SpaceId s, const Point& x, const Point& y) {
  require_point(s, x);
  require_point(s, y);
  using K = Point::Kind;
  if (y.kind == K::Top) return true;
  if (x.kind == K::Top) return false;
  if (is_cofinite(s)) return x == y;
  if (is_johnstone(s)) return (x.j == y.j && x.k <= y.k) || (y.k == kOmega && x.k <= y.j);
  if (x == y) return true;
  switch (y.kind) {
    case K::Nat: return x.kind == K::Nat && x.j <= y.j;
    case K::C: return x.kind == K::Nat;
    case K::A:
    case K::B: return x.kind == K::Nat || x.kind == K::C;
    default: return false;
  }
}

std::string to_string(const ClosedSetRep& r) {
  std::ostringstream out;
  if (is_nat_like(r.space)) {
    std::vector<std::string> parts;
    if (r.height == kAll)
      parts.push_back("ℕ");
    else if (r.height >= 0)
      parts.push_back("↓" + std::to_string(r.height));
    if (r.c) parts.push_back("c");
    if (r.a) parts.push_back("a");
    if (r.b) parts.push_back("b");
    if (r.top) parts.push_back("⊤");
    if (parts.empty()) return "∅";
    out << parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out << "∪{" << parts[i] << "}";
    return out.str();
  }
  if (is_johnstone(r.space)) {
    if (r.whole) return r.top ? "𝕁_⊤" : "𝕁";
    if (is_empty(r)) return "∅";
    out << "ω-cols " << set_text(r.omega) << " floor " << r.floor;
    if (!r.heights.empty()) {
      out << " heights {";
      bool first = true;
      for (const auto& [c, h] : r.heights) {
        if (!first) out << ",";
        first = false;
        out << c << ":" << (h == kAll ? std::string("∞") : std::to_string(h));
      }
      out << "}";
    }
    return out.str();
  }
  if (r.cofinite) {
    out << (r.points.empty() ? "ℕ" : "ℕ∖" + set_text(r.points));
  } else {
    out << set_text(r.points);
  }
  if (r.top) out << "∪{⊤}";
  return out.str();
}

ClosedSetRep empty_set(SpaceId s) {
  ClosedSetRep r;
  r.space = s;
  return r;
}

ClosedSetRep whole(SpaceId s) {
  ClosedSetRep r;
  r.space = s;
  r.top = has_top(s);
  if (is_johnstone(s)) {
    r.whole = true;
  } else if (is_cofinite(s)) {
    r.cofinite = true;
  } else {
    r.height = kAll;
    r.a = r.b = s == SpaceId::NatAB || s == SpaceId::NatABC_Q;
    r.c = s == SpaceId::NatABC_Q;
  }
  return r;
}

ClosedSetRep without_top(SpaceId s) {
  ClosedSetRep r = whole(s);
  r.top = false;
  return r;
}

ClosedSetRep principal(SpaceId s, const Point& x) { return down_closure(s, {x}); }

ClosedSetRep down_closure(SpaceId s, const std::vector<Point>& generators) {
  ClosedSetRep r = empty_set(s);
  for (const auto& x : generators) {
    require_point(s, x);
    using K = Point::Kind;
    switch (x.kind) {
      case K::Top: r.top = true; break;
      case K::A: r.a = true; break;
      case K::B: r.b = true; break;
      case K::C: r.c = true; break;
      case K::Nat:
        if (is_cofinite(s)) {
          if (!r.cofinite) r.points.insert(x.j);
        } else {
          r.height = std::max<std::int64_t>(r.height, static_cast<std::int64_t>(x.j));
        }
        break;
      case K::Pair:
        if (x.k == kOmega) {
          r.omega.insert(x.j);
        } else {
          auto [it, fresh] = r.heights.try_emplace(x.j, static_cast<std::int64_t>(x.k));
          if (!fresh) it->second = std::max<std::int64_t>(it->second, static_cast<std::int64_t>(x.k));
        }
        break;
    }
  }
  return normalize(r);
}

ClosedSetRep johnstone_rows(SpaceId s, std::int64_t row) {
  if (!is_johnstone(s)) throw Error(ErrorKind::KindMismatch, "row sets live in the Johnstone spaces");
  ClosedSetRep r = empty_set(s);
  r.floor = std::max<std::int64_t>(row, -1);
  return normalize(r);
}

ClosedSetRep finite_set(SpaceId s, std::set<std::uint64_t> f) {
  if (!is_cofinite(s)) throw Error(ErrorKind::KindMismatch, "finite sets live in the cofinite spaces");
  ClosedSetRep r = empty_set(s);
  r.points = std::move(f);
  return r;
}

ClosedSetRep normalize(ClosedSetRep r) {
  const SpaceId s = r.space;
  if (is_nat_like(s)) {
    if (s == SpaceId::NatChain || s == SpaceId::NatTop) r.a = r.b = r.c = false;
    if (s == SpaceId::NatAB) r.c = false;
    if (s != SpaceId::NatTop) r.top = false;
    if (s == SpaceId::NatABC_Q && (r.a || r.b)) r.c = true;
    if (r.top || r.a || r.b || r.c) r.height = kAll;
    if (r.height < -1) r.height = -1;
    r.whole = false;
    r.omega.clear();
    r.floor = -1;
    r.heights.clear();
    r.cofinite = false;
    r.points.clear();
    return r;
  }
  r.height = -1;
  r.a = r.b = r.c = false;
  if (!has_top(s)) r.top = false;
  if (is_cofinite(s)) {
    r.whole = false;
    r.omega.clear();
    r.floor = -1;
    r.heights.clear();
    if (r.top) {
      r.cofinite = true;
      r.points.clear();
    }
    return r;
  }
  r.cofinite = false;
  r.points.clear();
  if (r.top) r.whole = true;
  if (r.whole) {
    r.omega.clear();
    r.floor = -1;
    r.heights.clear();
    return r;
  }
  const std::int64_t m = max_omega(r);
  r.floor = std::max(r.floor, m);
  for (auto it = r.heights.begin(); it != r.heights.end();) {
    if (r.omega.count(it->first)) {
      it = r.heights.erase(it);
      continue;
    }
    it->second = std::max(it->second, m);
    if (it->second < -1) it->second = -1;
    if (it->second == r.floor)
      it = r.heights.erase(it);
    else
      ++it;
  }
  return r;
}

bool contains(const ClosedSetRep& r, const Point& x) {
  require_point(r.space, x);
  using K = Point::Kind;
  switch (x.kind) {
    case K::Top: return r.top;
    case K::A: return r.a;
    case K::B: return r.b;
    case K::C: return r.c;
    case K::Nat:
      if (is_cofinite(r.space)) return r.cofinite ? !r.points.count(x.j) : r.points.count(x.j) > 0;
      return r.height == kAll || (r.height >= 0 && x.j <= static_cast<std::uint64_t>(r.height));
    case K::Pair: {
      if (r.whole) return true;
      if (x.k == kOmega) return r.omega.count(x.j) > 0;
      const std::int64_t v = col(r, x.j);
      if (v >= kColAll) return true;
      return v >= 0 && x.k <= static_cast<std::uint64_t>(v);
    }
  }
  return false;
}

ClosedSetRep unite(const ClosedSetRep& x, const ClosedSetRep& y) {
  require_same(x, y);
  const SpaceId s = x.space;
  if (is_nat_like(s)) {
    ClosedSetRep r = x;
    r.height = std::max(x.height, y.height);
    r.a = x.a || y.a;
    r.b = x.b || y.b;
    r.c = x.c || y.c;
    r.top = x.top || y.top;
    return normalize(r);
  }
  if (is_cofinite(s)) {
    ClosedSetRep r = empty_set(s);
    r.top = x.top || y.top;
    if (!x.cofinite && !y.cofinite) {
      r.points = x.points;
      r.points.insert(y.points.begin(), y.points.end());
    } else if (x.cofinite && y.cofinite) {
      r.cofinite = true;
      std::set_intersection(x.points.begin(), x.points.end(), y.points.begin(), y.points.end(),
                            std::inserter(r.points, r.points.end()));
    } else {
      const auto& co = x.cofinite ? x : y;
      const auto& fin = x.cofinite ? y : x;
      r.cofinite = true;
      std::set_difference(co.points.begin(), co.points.end(), fin.points.begin(), fin.points.end(),
                          std::inserter(r.points, r.points.end()));
    }
    return normalize(r);
  }
  if (x.whole || y.whole) {
    ClosedSetRep r = whole(s);
    r.top = x.top || y.top;
    return normalize(r);
  }
  ClosedSetRep r = combine_johnstone(x, y, [](std::int64_t p, std::int64_t q) { return std::max(p, q); });
  return r;
}

ClosedSetRep intersect(const ClosedSetRep& x, const ClosedSetRep& y) {
  require_same(x, y);
  const SpaceId s = x.space;
  if (is_nat_like(s)) {
    ClosedSetRep r = x;
    r.height = std::min(x.height, y.height);
    r.a = x.a && y.a;
    r.b = x.b && y.b;
    r.c = x.c && y.c;
    r.top = x.top && y.top;
    return normalize(r);
  }
  if (is_cofinite(s)) {
    ClosedSetRep r = empty_set(s);
    r.top = x.top && y.top;
    if (!x.cofinite && !y.cofinite) {
      std::set_intersection(x.points.begin(), x.points.end(), y.points.begin(), y.points.end(),
                            std::inserter(r.points, r.points.end()));
    } else if (x.cofinite && y.cofinite) {
      r.cofinite = true;
      r.points = x.points;
      r.points.insert(y.points.begin(), y.points.end());
    } else {
      const auto& co = x.cofinite ? x : y;
      const auto& fin = x.cofinite ? y : x;
      std::set_difference(fin.points.begin(), fin.points.end(), co.points.begin(), co.points.end(),
                          std::inserter(r.points, r.points.end()));
    }
    return normalize(r);
  }
  if (x.whole && y.whole) {
    ClosedSetRep r = whole(s);
    r.top = x.top && y.top;
    return normalize(r);
  }
  if (x.whole) return y;
  if (y.whole) return x;
  return combine_johnstone(x, y, [](std::int64_t p, std::int64_t q) { return std::min(p, q); });
}

bool includes(const ClosedSetRep& x, const ClosedSetRep& y) {
  require_same(x, y);
  const SpaceId s = x.space;
  if (x.top && !y.top) return false;
  if (is_nat_like(s))
    return x.height <= y.height && (!x.a || y.a) && (!x.b || y.b) && (!x.c || y.c);
  if (is_cofinite(s)) {
    if (!x.cofinite && !y.cofinite) return std::includes(y.points.begin(), y.points.end(), x.points.begin(), x.points.end());
    if (x.cofinite && !y.cofinite) return false;
    if (x.cofinite && y.cofinite)
      return std::includes(x.points.begin(), x.points.end(), y.points.begin(), y.points.end());
    return std::none_of(x.points.begin(), x.points.end(), [&](auto p) { return y.points.count(p) > 0; });
  }
  if (y.whole) return true;
  if (x.whole) return false;
  if (x.floor > y.floor) return false;
  auto cols = columns(x);
  auto cy = columns(y);
  cols.insert(cy.begin(), cy.end());
  return std::all_of(cols.begin(), cols.end(), [&](auto c) { return col(x, c) <= col(y, c); });
}

bool is_empty(const ClosedSetRep& r) {
  if (r.top) return false;
  if (is_nat_like(r.space)) return r.height < 0 && !r.a && !r.b && !r.c;
  if (is_cofinite(r.space)) return !r.cofinite && r.points.empty();
  if (r.whole || !r.omega.empty() || r.floor >= 0) return false;
  return std::all_of(r.heights.begin(), r.heights.end(), [](const auto& e) { return e.second < 0; });
}

bool is_closed(const ClosedSetRep& raw) {
  const ClosedSetRep r = normalize(raw);
  if (!(r == raw)) return false;
  switch (r.space) {
    case SpaceId::NatChain:
    case SpaceId::NatAB: return true;
    case SpaceId::NatTop: return r.height != kAll || r.top;
    case SpaceId::NatABC_Q: return r.height != kAll || r.c;
    case SpaceId::Johnstone:
    case SpaceId::JohnstoneTop:
      if (r.whole) return true;
      if (r.floor >= kColAll) return false;
      return std::none_of(r.heights.begin(), r.heights.end(), [](const auto& e) { return e.second == kAll; });
    case SpaceId::CofiniteNat:
    case SpaceId::CofiniteNatTop: return !r.cofinite || r.points.empty();
  }
  return false;
}

namespace {

bool split_holds(const ClosedSetRep& a, const ClosedSetRep& b, const ClosedSetRep& c) {
  return is_closed(b) && is_closed(c) && !(b == a) && !(c == a) && includes(b, a) && includes(c, a) &&
         unite(b, c) == a;
}

}  // namespace

IrreducibleVerdict irreducible(const ClosedSetRep& r) {
  if (!is_closed(r)) throw Error(ErrorKind::NotClosed, to_string(r) + " is not closed");
  const SpaceId s = r.space;
  IrreducibleVerdict v;
  if (is_empty(r)) {
    v.reason = "the empty set is never irreducible";
    return v;
  }
  if (is_nat_like(s)) {
    if (r.top) {
      v.generators = {Point::top()};
    } else if (r.a && r.b) {
      v.generators = {Point::a(), Point::b()};
    } else if (r.a) {
      v.generators = {Point::a()};
    } else if (r.b) {
      v.generators = {Point::b()};
    } else if (r.c) {
      v.generators = {Point::c()};
    } else if (r.height != kAll) {
      v.generators = {Point::nat(static_cast<std::uint64_t>(r.height))};
    } else {
      v.infinitely_many_generators = true;
      v.irreducible = true;
      v.reason = "ℕ is the closure of the directed set ℕ";
      return v;
    }
    v.irreducible = v.generators.size() == 1;
    if (v.irreducible) {
      v.reason = "single maximal generator " + to_string(v.generators[0]);
    } else {
      v.reason = "two incomparable maximal generators a and b";
      v.split = {principal(s, Point::a()), principal(s, Point::b())};
    }
    return v;
  }
  if (is_cofinite(s)) {
    if (r.top) {
      v.generators = {Point::top()};
      v.irreducible = true;
      v.reason = "closure of ⊤";
      return v;
    }
    if (r.cofinite) {
      v.infinitely_many_generators = true;
      v.irreducible = true;
      v.reason = "ℕ is infinite and every proper closed subset is finite";
      return v;
    }
    for (auto p : r.points) v.generators.push_back(Point::nat(p));
    v.irreducible = v.generators.size() == 1;
    if (v.irreducible) {
      v.reason = "a single point";
    } else {
      v.reason = "a finite set of several points";
      auto first = *r.points.begin();
      auto rest = r.points;
      rest.erase(first);
      v.split = {finite_set(s, {first}), finite_set(s, rest)};
    }
    return v;
  }
  // Johnstone.
  if (r.whole) {
    v.irreducible = true;
    v.infinitely_many_generators = !r.top;
    if (r.top) v.generators = {Point::top()};
    v.reason = r.top ? "closure of ⊤" : "𝕁 itself is irreducible";
    return v;
  }
  const std::int64_t m = max_omega(r);
  for (auto c : r.omega) v.generators.push_back(Point::omega(c));
  for (const auto& [c, h] : r.heights)
    if (h > m) v.generators.push_back(Point::pair(c, static_cast<std::uint64_t>(h)));
  if (r.floor > m) {
    v.infinitely_many_generators = true;
    v.generators.clear();
    v.reason = "row " + std::to_string(r.floor) + " contributes a maximal point in infinitely many columns";
    std::set<std::uint64_t> used = columns(r);
    const std::uint64_t c = smallest_outside(used);
    ClosedSetRep b = r;
    b.heights[c] = m;
    b = normalize(b);
    ClosedSetRep cpart = principal(s, Point::pair(c, static_cast<std::uint64_t>(r.floor)));
    v.split = {b, cpart};
    return v;
  }
  v.irreducible = v.generators.size() == 1;
  if (v.irreducible) {
    v.reason = "single maximal generator " + to_string(v.generators[0]);
  } else {
    v.reason = std::to_string(v.generators.size()) + " maximal generators";
    std::vector<Point> rest(v.generators.begin() + 1, v.generators.end());
    v.split = {principal(s, v.generators[0]), down_closure(s, rest)};
  }
  return v;
}

ClosedSetRep closure_of_difference(const ClosedSetRep& a, const ClosedSetRep& b) {
  require_same(a, b);
  if (!is_johnstone(a.space)) throw Error(ErrorKind::KindMismatch, "closure_of_difference is Johnstone-only");
  if (a.whole) {
    // B has finitely many ω-columns; the rest of 𝕁_max survives in A ∖ B
    // and its closure is everything A holds. With B = 𝕁, A ∖ B = {⊤}.
    return a;
  }
  std::map<std::uint64_t, std::int64_t> vals;
  auto cols = columns(a);
  if (!b.whole) {
    auto cb = columns(b);
    cols.insert(cb.begin(), cb.end());
  }
  auto bcol = [&](std::uint64_t c) { return b.whole ? kColOmega : col(b, c); };
  for (auto c : cols) {
    const std::int64_t va = col(a, c);
    vals[c] = va > bcol(c) ? (va == kColAll ? kColOmega : va) : -1;
  }
  const std::int64_t bf = b.whole ? kColOmega : b.floor;
  return from_columns(a.space, vals, a.floor > bf ? a.floor : -1);
}

std::optional<std::pair<ClosedSetRep, ClosedSetRep>> search_split(const ClosedSetRep& a) {
  if (!is_closed(a)) throw Error(ErrorKind::NotClosed, to_string(a) + " is not closed");
  const SpaceId s = a.space;
  if (is_empty(a)) return std::nullopt;

  if (is_johnstone(s)) {
    if (a.whole) return std::nullopt;
    std::set<std::uint64_t> cols = columns(a);
    cols.insert(smallest_outside(cols));
    std::set<std::int64_t> vocab{-1, a.floor, kColOmega};
    for (const auto& [c, h] : a.heights) vocab.insert(h);
    for (auto c : a.omega) vocab.insert(static_cast<std::int64_t>(c));
    const std::vector<std::uint64_t> cv(cols.begin(), cols.end());
    std::vector<std::vector<std::int64_t>> choices;
    for (auto c : cv) {
      std::vector<std::int64_t> opts;
      for (auto v : vocab)
        if (v <= col(a, c)) opts.push_back(v);
      choices.push_back(opts);
    }
    std::vector<std::int64_t> floors;
    for (auto v : vocab)
      if (v <= a.floor) floors.push_back(v);
    std::vector<std::size_t> pick(cv.size(), 0);
    while (true) {
      for (auto f : floors) {
        std::map<std::uint64_t, std::int64_t> vals;
        for (std::size_t i = 0; i < cv.size(); ++i) vals[cv[i]] = choices[i][pick[i]];
        ClosedSetRep b = from_columns(s, vals, f);
        if (is_closed(b) && includes(b, a) && !(b == a)) {
          ClosedSetRep c = closure_of_difference(a, b);
          if (!(c == a)) return std::make_pair(b, c);
        }
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    return std::nullopt;
  }

  // The nat-like and cofinite families: pairs of closed sets below A drawn
  // from A's own vocabulary.
  std::vector<ClosedSetRep> below;
  if (is_nat_like(s)) {
    std::set<std::int64_t> hs{-1, 0, a.height, kAll};
    if (a.height != kAll && a.height > 0) hs.insert(a.height - 1);
    for (auto h : hs)
      for (int flags = 0; flags < 16; ++flags) {
        ClosedSetRep b = empty_set(s);
        b.height = h;
        b.a = flags & 1;
        b.b = flags & 2;
        b.c = flags & 4;
        b.top = flags & 8;
        b = normalize(b);
        if (is_closed(b) && includes(b, a) && !(b == a)) below.push_back(b);
      }
  } else {
    std::set<std::uint64_t> base = a.cofinite ? std::set<std::uint64_t>{0, 1, 2} : a.points;
    if (base.size() > 10) base = std::set<std::uint64_t>(base.begin(), std::next(base.begin(), 10));
    const std::vector<std::uint64_t> bv(base.begin(), base.end());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bv.size()); ++mask) {
      std::set<std::uint64_t> f;
      for (std::size_t i = 0; i < bv.size(); ++i)
        if ((mask >> i) & 1U) f.insert(bv[i]);
      below.push_back(finite_set(s, f));
    }
    below.push_back(without_top(s));
    below.push_back(whole(s));
    std::vector<ClosedSetRep> kept;
    for (auto& b : below)
      if (is_closed(b) && includes(b, a) && !(b == a)) kept.push_back(b);
    below = kept;
  }
  for (std::size_t i = 0; i < below.size(); ++i)
    for (std::size_t j = i; j < below.size(); ++j)
      if (unite(below[i], below[j]) == a) return std::make_pair(below[i], below[j]);
  return std::nullopt;
}

std::size_t description_size(const ClosedSetRep& r) {
  if (!is_johnstone(r.space) || r.whole) return 0;
  std::size_t n = static_cast<std::size_t>(r.floor + 1);
  for (auto c : r.omega) n += c + 1;
  for (const auto& [c, h] : r.heights) n += c + 1;
  return n;
}

std::vector<ClosedSetRep> johnstone_normal_forms(SpaceId s, std::size_t bound) {
  if (!is_johnstone(s)) throw Error(ErrorKind::KindMismatch, "Johnstone normal forms need a Johnstone space");
  std::vector<ClosedSetRep> out;
  const std::int64_t B = static_cast<std::int64_t>(bound);
  for (std::uint64_t smask = 0; smask < (std::uint64_t{1} << bound); ++smask) {
    std::set<std::uint64_t> omega;
    std::size_t cost = 0;
    for (std::uint64_t c = 0; c < bound; ++c)
      if ((smask >> c) & 1U) {
        omega.insert(c);
        cost += c + 1;
      }
    if (cost > bound) continue;
    const std::int64_t m = omega.empty() ? -1 : static_cast<std::int64_t>(*omega.rbegin());
    for (std::int64_t f = m; f < B; ++f) {
      const std::size_t with_floor = cost + static_cast<std::size_t>(f + 1);
      if (with_floor > bound) break;
      // Exceptional columns: a set of columns outside omega within budget,
      // each with a height in [m, B-1] different from the floor.
      std::vector<std::uint64_t> free_cols;
      for (std::uint64_t c = 0; c < bound; ++c)
        if (!omega.count(c)) free_cols.push_back(c);
      for (std::uint64_t hmask = 0; hmask < (std::uint64_t{1} << free_cols.size()); ++hmask) {
        std::vector<std::uint64_t> hc;
        std::size_t hcost = with_floor;
        for (std::size_t i = 0; i < free_cols.size(); ++i)
          if ((hmask >> i) & 1U) {
            hc.push_back(free_cols[i]);
            hcost += free_cols[i] + 1;
          }
        if (hcost > bound) continue;
        std::vector<std::int64_t> vals;
        for (std::int64_t h = m; h < B; ++h)
          if (h != f) vals.push_back(h);
        if (!hc.empty() && vals.empty()) continue;
        std::vector<std::size_t> pick(hc.size(), 0);
        while (true) {
          ClosedSetRep r = empty_set(s);
          r.omega = omega;
          r.floor = f;
          for (std::size_t i = 0; i < hc.size(); ++i) r.heights[hc[i]] = vals[pick[i]];
          out.push_back(normalize(r));
          std::size_t i = 0;
          while (i < pick.size() && ++pick[i] == vals.size()) pick[i++] = 0;
          if (i == pick.size()) break;
        }
      }
    }
  }
  out.push_back(without_top(s));
  if (has_top(s)) out.push_back(whole(s));
  std::sort(out.begin(), out.end(), [](const ClosedSetRep& x, const ClosedSetRep& y) {
    return std::tie(x.whole, x.top, x.omega, x.floor, x.heights) < std::tie(y.whole, y.top, y.omega, y.floor, y.heights);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IrcEnumeration johnstone_irc(SpaceId s, std::size_t bound) {
  IrcEnumeration e;
  const auto forms = johnstone_normal_forms(s, bound);
  e.enumerated = forms.size();
  std::vector<ClosedSetRep> principals;
  for (std::uint64_t j = 0; j <= bound; ++j) {
    principals.push_back(principal(s, Point::omega(j)));
    for (std::uint64_t k = 0; k <= bound; ++k) principals.push_back(principal(s, Point::pair(j, k)));
  }
  if (has_top(s)) principals.push_back(principal(s, Point::top()));
  const ClosedSetRep carrier = without_top(s);
  for (const auto& a : forms) {
    if (is_empty(a)) continue;
    const auto v = irreducible(a);
    const auto found = search_split(a);
    ++e.search_checked;
    if (v.irreducible == found.has_value()) e.disagreements.push_back(a);
    if (v.split && !split_holds(a, v.split->first, v.split->second)) e.bad_splits.push_back(a);
    if (found && !split_holds(a, found->first, found->second)) e.bad_splits.push_back(a);
    const bool is_principal = std::find(principals.begin(), principals.end(), a) != principals.end();
    const bool expected = is_principal || a == carrier;
    if (is_principal) ++e.principal_count;
    if (v.irreducible) {
      ++e.irreducible_count;
      e.irreducibles.push_back(a);
      if (!expected) e.unexpected.push_back(a);
    } else if (expected) {
      e.missing.push_back(a);
    }
  }
  return e;
}

// ---------------------------------------------------------------------------
// Saturated sets.

std::string to_string(const CompactSatRep& k) {
  std::vector<std::string> parts;
  if (is_johnstone(k.space)) {
    if (!k.gens.empty()) {
      std::string g = "↑{";
      for (std::size_t i = 0; i < k.gens.size(); ++i) g += (i ? "," : "") + to_string(k.gens[i]);
      parts.push_back(g + "}");
    }
    if (k.max_cofinite)
      parts.push_back(k.max_cols.empty() ? "𝕁_max" : "𝕁_max∖cols " + set_text(k.max_cols));
    else if (!k.max_cols.empty())
      parts.push_back("max cols " + set_text(k.max_cols));
    if (k.band)
      parts.push_back("↑{(j," + std::to_string(k.band->row) + ") : j∉" + set_text(k.band->excluded) + "}");
  } else {
    if (k.cofinite)
      parts.push_back(k.points.empty() ? "ℕ" : "ℕ∖" + set_text(k.points));
    else if (!k.points.empty())
      parts.push_back(set_text(k.points));
  }
  if (k.top) parts.push_back("{⊤}");
  if (parts.empty()) return "∅";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " ∪ " + parts[i];
  return out;
}

CompactSatRep normalize(CompactSatRep k) {
  if (is_johnstone(k.space)) {
    std::sort(k.gens.begin(), k.gens.end());
    k.gens.erase(std::unique(k.gens.begin(), k.gens.end()), k.gens.end());
    std::vector<Point> minimal;
    for (const auto& g : k.gens) {
      require_point(k.space, g);
      if (g.kind == Point::Kind::Top) {
        k.top = true;
        continue;
      }
      const bool dominated = std::any_of(k.gens.begin(), k.gens.end(), [&](const Point& h) {
        return h.kind == Point::Kind::Pair && !(h == g) && leq(k.space, h, g);
      });
      if (!dominated) minimal.push_back(g);
    }
    k.gens = minimal;
    k.cofinite = false;
    k.points.clear();
  } else {
    k.gens.clear();
    k.max_cofinite = false;
    k.max_cols.clear();
    k.band.reset();
  }
  if (!has_top(k.space)) k.top = false;
  const bool rest_nonempty = is_johnstone(k.space)
                                 ? (!k.gens.empty() || k.max_cofinite || !k.max_cols.empty() || k.band.has_value())
                                 : (k.cofinite || !k.points.empty());
  if (has_top(k.space) && rest_nonempty) k.top = true;
  return k;
}

bool contains(const CompactSatRep& k, const Point& x) {
  require_point(k.space, x);
  if (x.kind == Point::Kind::Top) return k.top;
  if (is_cofinite(k.space)) return k.cofinite ? !k.points.count(x.j) : k.points.count(x.j) > 0;
  for (const auto& g : k.gens)
    if (leq(k.space, g, x)) return true;
  if (x.k == kOmega && (k.max_cofinite ? !k.max_cols.count(x.j) : k.max_cols.count(x.j) > 0)) return true;
  if (k.band) {
    if (x.k == kOmega) {
      if (!k.band->excluded.count(x.j) || k.band->row <= x.j) return true;
    } else if (!k.band->excluded.count(x.j) && x.k >= k.band->row) {
      return true;
    }
  }
  return false;
}

bool is_empty(const CompactSatRep& k) {
  if (k.top) return false;
  if (is_cofinite(k.space)) return !k.cofinite && k.points.empty();
  return k.gens.empty() && !k.max_cofinite && k.max_cols.empty() && !k.band;
}

namespace {

std::uint64_t grid_extent(const CompactSatRep& k) {
  std::uint64_t t = 0;
  for (const auto& g : k.gens) {
    t = std::max(t, g.j);
    if (g.k != kOmega) t = std::max(t, g.k);
  }
  for (auto c : k.max_cols) t = std::max(t, c);
  for (auto c : k.points) t = std::max(t, c);
  if (k.band) {
    t = std::max(t, k.band->row);
    for (auto c : k.band->excluded) t = std::max(t, c);
  }
  return t + 2;
}

std::vector<Point> grid(SpaceId s, std::uint64_t t) {
  std::vector<Point> out;
  if (is_johnstone(s)) {
    for (std::uint64_t j = 0; j <= t; ++j) {
      out.push_back(Point::omega(j));
      for (std::uint64_t r = 0; r <= t; ++r) out.push_back(Point::pair(j, r));
    }
  } else {
    for (std::uint64_t n = 0; n <= t; ++n) out.push_back(Point::nat(n));
  }
  if (has_top(s)) out.push_back(Point::top());
  return out;
}

}  // namespace

bool is_saturated(const CompactSatRep& k) {
  // Each component is an upper set by construction; ⊤ lies above every point.
  if (has_top(k.space)) {
    const CompactSatRep probe = [&] {
      CompactSatRep c = k;
      c.top = false;
      return c;
    }();
    if (!is_empty(probe) && !k.top) return false;
  }
  for (const auto& x : grid(k.space, grid_extent(k)))
    if (contains(k, x))
      for (const auto& y : grid(k.space, grid_extent(k)))
        if (leq(k.space, x, y) && !contains(k, y)) return false;
  return true;
}

bool includes(const CompactSatRep& k1, const CompactSatRep& k2) {
  if (k1.space != k2.space) throw Error(ErrorKind::SpaceMismatch, "saturated sets from different spaces");
  const auto pts = grid(k1.space, std::max(grid_extent(k1), grid_extent(k2)));
  return std::all_of(pts.begin(), pts.end(), [&](const Point& x) { return !contains(k1, x) || contains(k2, x); });
}

CompactSatRep intersect(const CompactSatRep& k1, const CompactSatRep& k2) {
  if (k1.space != k2.space) throw Error(ErrorKind::SpaceMismatch, "saturated sets from different spaces");
  if (!k1.gens.empty() || !k2.gens.empty() || k1.band || k2.band)
    throw Error(ErrorKind::KindMismatch, "intersection is defined for maximal-point and cofinite descriptions only");
  CompactSatRep out;
  out.space = k1.space;
  out.top = k1.top && k2.top;
  auto meet = [](bool co1, const std::set<std::uint64_t>& s1, bool co2, const std::set<std::uint64_t>& s2,
                 bool& co, std::set<std::uint64_t>& s) {
    s.clear();
    if (!co1 && !co2) {
      co = false;
      std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::inserter(s, s.end()));
    } else if (co1 && co2) {
      co = true;
      s = s1;
      s.insert(s2.begin(), s2.end());
    } else {
      co = false;
      const auto& fin = co1 ? s2 : s1;
      const auto& ex = co1 ? s1 : s2;
      std::set_difference(fin.begin(), fin.end(), ex.begin(), ex.end(), std::inserter(s, s.end()));
    }
  };
  if (is_johnstone(out.space))
    meet(k1.max_cofinite, k1.max_cols, k2.max_cofinite, k2.max_cols, out.max_cofinite, out.max_cols);
  else
    meet(k1.cofinite, k1.points, k2.cofinite, k2.points, out.cofinite, out.points);
  return out;
}

ClosedSetRep band_cover_complement(SpaceId s, std::uint64_t row, std::uint64_t j) {
  ClosedSetRep r = johnstone_rows(s, static_cast<std::int64_t>(row));
  r.heights[j] = static_cast<std::int64_t>(row) - 1;
  return normalize(r);
}

CompactVerdict is_compact(const CompactSatRep& k) {
  if (is_empty(k)) throw Error(ErrorKind::EmptySet, "compactness is decided for nonempty saturated sets");
  CompactVerdict v;
  if (is_cofinite(k.space)) {
    v.compact = true;
    v.reason = "every nonempty open set is cofinite, so one cover member leaves finitely many points";
    return v;
  }
  if (!is_johnstone(k.space))
    throw Error(ErrorKind::Unresolved, "compactness is decided for the Johnstone and cofinite spaces");
  if (!k.band) {
    v.compact = true;
    v.reason = "finite union of ↑x for finitely many x and a subset of 𝕁_max";
    return v;
  }
  v.compact = false;
  CoverCertificate cert;
  cert.row = k.band->row;
  cert.excluded = k.band->excluded;
  cert.description = "U_j = 𝕁 ∖ C_j with C_j = rows ≤ " + std::to_string(cert.row) + " except column j cut to row " +
                     std::to_string(static_cast<std::int64_t>(cert.row) - 1) + ", for j ∉ " + set_text(cert.excluded) +
                     "; U_j is the only member holding (j," + std::to_string(cert.row) + ")";
  std::vector<std::uint64_t> idx;
  for (std::uint64_t j = 0; idx.size() < 6; ++j)
    if (!cert.excluded.count(j)) idx.push_back(j);
  bool ok = true;
  for (auto j : idx) {
    ClosedSetRep cj = band_cover_complement(k.space, cert.row, j);
    ok = ok && is_closed(cj) && !contains(cj, Point::pair(j, cert.row));
    for (auto other : idx)
      if (other != j) ok = ok && contains(cj, Point::pair(other, cert.row));
    cert.sample.emplace_back(j, cj);
  }
  // Every point of the band lies in some U_j.
  for (const auto& x : grid(k.space, grid_extent(k))) {
    if (!contains(k, x) || x.kind == Point::Kind::Top) continue;
    const bool covered = std::any_of(cert.sample.begin(), cert.sample.end(),
                                     [&](const auto& e) { return !contains(e.second, x); });
    const bool beyond = x.j > idx.back();
    if (!covered && !beyond) ok = false;
  }
  cert.verified = ok;
  v.reason = "a band of row " + std::to_string(cert.row) + " points in infinitely many columns";
  v.cover = cert;
  return v;
}

// ---------------------------------------------------------------------------

WfWitness wf_witness(SpaceId s, std::size_t cap) {
  if (s != SpaceId::Johnstone && s != SpaceId::JohnstoneTop && s != SpaceId::CofiniteNat &&
      s != SpaceId::CofiniteNatTop)
    throw Error(ErrorKind::NoneKnown, std::string(display_name(s)) + " has no known well-filteredness failure");
  if (cap > 12) throw Error(ErrorKind::CapExceeded, "witness index cap is at most 12");
  WfWitness w;
  w.space = s;
  w.cap = cap;
  const bool jn = is_johnstone(s);
  auto member = [&](const std::set<std::uint64_t>& f) {
    CompactSatRep k;
    k.space = s;
    if (jn) {
      k.max_cofinite = true;
      k.max_cols = f;
    } else {
      k.cofinite = true;
      k.points = f;
    }
    return normalize(k);
  };
  w.family = jn ? (has_top(s) ? "{↑(𝕁_max ∖ F) : F ⊆ ℕ finite}" : "{𝕁_max ∖ F : F ⊆ ℕ finite}")
                : (has_top(s) ? "{↑(ℕ ∖ F) : F ⊆ ℕ finite}" : "{ℕ ∖ F : F ⊆ ℕ finite}");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cap); ++mask) {
    std::set<std::uint64_t> f;
    for (std::uint64_t i = 0; i < cap; ++i)
      if ((mask >> i) & 1U) f.insert(i);
    w.members.emplace_back(f, member(f));
  }

  // (a) compact saturated members.
  w.compact_members = std::all_of(w.members.begin(), w.members.end(), [](const auto& m) {
    return is_saturated(m.second) && !is_empty(m.second) && is_compact(m.second).compact;
  });

  // (b) filtered: K_{F1 ∪ F2} sits below both in the Smyth order.
  w.filtered = true;
  for (std::size_t i = 0; i < w.members.size() && w.filtered; ++i)
    for (std::size_t j = i; j < w.members.size() && w.filtered; ++j) {
      auto u = w.members[i].first;
      u.insert(w.members[j].first.begin(), w.members[j].first.end());
      const auto& lower = w.members[static_cast<std::size_t>(std::accumulate(
                                        u.begin(), u.end(), std::uint64_t{0},
                                        [](std::uint64_t acc, std::uint64_t v) { return acc | (std::uint64_t{1} << v); }))]
                              .second;
      w.filtered = includes(lower, intersect(w.members[i].second, w.members[j].second));
      ++w.pairs_checked;
    }

  // (c) the intersection over every finite F: a point indexed by n is
  // dropped by K_{n}; only ⊤ survives.
  w.capped_intersection = w.members.front().second;
  for (const auto& m : w.members) w.capped_intersection = intersect(w.capped_intersection, m.second);
  CompactSatRep limit;
  limit.space = s;
  limit.top = has_top(s);
  w.intersection = limit;
  bool limit_ok = includes(w.intersection, w.capped_intersection) &&
                  w.capped_intersection == member(w.members.back().first);
  for (std::uint64_t n = 0; n < 4 * cap; ++n) {
    const Point x = jn ? Point::omega(n) : Point::nat(n);
    limit_ok = limit_ok && contains(member({}), x) && !contains(member({n}), x) && !contains(w.intersection, x);
  }
  if (has_top(s)) {
    w.open_description = "{⊤}";
    w.open_complement = without_top(s);
  } else {
    w.open_description = "∅";
    w.open_complement = whole(s);
  }
  bool inside = limit_ok && is_closed(w.open_complement);
  for (const auto& x : grid(s, 4 * cap))
    if (contains(w.intersection, x) && contains(w.open_complement, x)) inside = false;
  w.intersection_inside = inside;

  // (d) every member keeps a point outside the open.
  w.no_member_inside = std::all_of(w.members.begin(), w.members.end(), [&](const auto& m) {
    const std::uint64_t n = smallest_outside(m.first);
    const Point x = jn ? Point::omega(n) : Point::nat(n);
    return contains(m.second, x) && contains(w.open_complement, x);
  });
  return w;
}

// ---------------------------------------------------------------------------

std::string to_string(const DirectedDesc& d) {
  switch (d.kind) {
    case DirectedDesc::Kind::ColumnCofinal: return "column-cofinal(" + std::to_string(d.column) + ")";
    case DirectedDesc::Kind::FullChain: return "full-chain ℕ";
    case DirectedDesc::Kind::Finite: {
      std::string out = "{";
      for (std::size_t i = 0; i < d.points.size(); ++i) out += (i ? "," : "") + to_string(d.points[i]);
      return out + "}";
    }
  }
  return "?";
}

SupResult sup_directed(SpaceId s, const DirectedDesc& d) {
  SupResult r;
  switch (d.kind) {
    case DirectedDesc::Kind::Finite: {
      if (d.points.empty()) throw Error(ErrorKind::NotDirected, "the empty set is not directed");
      for (const auto& x : d.points) require_point(s, x);
      for (const auto& x : d.points)
        for (const auto& y : d.points) {
          const bool bounded = std::any_of(d.points.begin(), d.points.end(),
                                           [&](const Point& z) { return leq(s, x, z) && leq(s, y, z); });
          if (!bounded) throw Error(ErrorKind::NotDirected, to_string(x) + " and " + to_string(y) + " have no bound inside");
        }
      for (const auto& z : d.points)
        if (std::all_of(d.points.begin(), d.points.end(), [&](const Point& x) { return leq(s, x, z); })) {
          r.sup = z;
          r.reason = "largest member of a finite directed set";
          return r;
        }
      throw Error(ErrorKind::NotDirected, "finite set without a largest member");
    }
    case DirectedDesc::Kind::ColumnCofinal:
      if (!is_johnstone(s)) throw Error(ErrorKind::NotDirected, "column-cofinal sets live in the Johnstone spaces");
      r.sup = Point::omega(d.column);
      r.reason = "(j,ω) is the column top and every other upper bound lies above it";
      return r;
    case DirectedDesc::Kind::FullChain:
      switch (s) {
        case SpaceId::NatChain: r.reason = "ℕ has no upper bound"; return r;
        case SpaceId::NatTop: r.sup = Point::top(); r.reason = "⊤ is the only upper bound"; return r;
        case SpaceId::NatAB:
          r.minimal_upper_bounds = {Point::a(), Point::b()};
          r.reason = "a and b are incomparable minimal upper bounds";
          return r;
        case SpaceId::NatABC_Q: r.sup = Point::c(); r.reason = "c lies below a and b and above ℕ"; return r;
        default: throw Error(ErrorKind::NotDirected, "ℕ is not directed in " + std::string(display_name(s)));
      }
  }
  return r;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> Truncation::index_of(const Point& p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  (void)it;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == p) return i;
  return std::nullopt;
}

Subset Truncation::restrict(const ClosedSetRep& r) const {
  if (r.space != space) throw Error(ErrorKind::SpaceMismatch, "truncation of another space");
  Subset out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (contains(r, points[i])) out.insert(i);
  return out;
}

Truncation truncate(SpaceId s, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadPoint, "truncation level must be at least 1");
  std::vector<Point> pts;
  if (is_johnstone(s)) {
    if (n * (n + 1) + 1 > kMaxCarrier) throw Error(ErrorKind::CapExceeded, "Johnstone truncation too large");
    for (std::uint64_t j = 0; j < n; ++j) {
      for (std::uint64_t k = 0; k < n; ++k) pts.push_back(Point::pair(j, k));
      pts.push_back(Point::omega(j));
    }
  } else {
    if (n + 4 > kMaxCarrier) throw Error(ErrorKind::CapExceeded, "truncation too large");
    for (std::uint64_t i = 0; i < n; ++i) pts.push_back(Point::nat(i));
    for (auto extra : {Point::a(), Point::b(), Point::c()})
      if (valid_point(s, extra)) pts.push_back(extra);
  }
  if (has_top(s)) pts.push_back(Point::top());
  std::vector<std::string> labels;
  std::vector<Subset> up(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    labels.push_back(to_string(pts[i]));
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (leq(s, pts[i], pts[j])) up[i].insert(j);
  }
  Truncation t;
  t.space = s;
  t.level = n;
  t.poset = FinitePoset::from_up_sets(labels, std::move(up));
  t.points.resize(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) t.points[t.poset.index(labels[i])] = pts[i];
  return t;
}

// ---------------------------------------------------------------------------

std::vector<ClosedSetRep> closed_normal_forms(SpaceId s, std::size_t bound) {
  std::vector<ClosedSetRep> out;
  if (is_johnstone(s)) {
    for (auto& r : johnstone_normal_forms(s, bound))
      if (is_closed(r)) out.push_back(r);
    return out;
  }
  if (is_cofinite(s)) {
    const std::size_t n = std::min<std::size_t>(bound, 10);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::set<std::uint64_t> f;
      for (std::uint64_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) f.insert(i);
      out.push_back(finite_set(s, f));
    }
    out.push_back(without_top(s));
    if (has_top(s)) out.push_back(whole(s));
    return out;
  }
  std::vector<std::int64_t> hs{-1, kAll};
  for (std::int64_t h = 0; h < static_cast<std::int64_t>(bound); ++h) hs.push_back(h);
  for (auto h : hs)
    for (int flags = 0; flags < 16; ++flags) {
      ClosedSetRep r = empty_set(s);
      r.height = h;
      r.a = flags & 1;
      r.b = flags & 2;
      r.c = flags & 4;
      r.top = flags & 8;
      r = normalize(r);
      if (is_closed(r) && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
  return out;
}

EtaVerdict eta_sigma_continuity(SpaceId s) {
  EtaVerdict v;
  switch (s) {
    case SpaceId::CofiniteNat: {
      // C = the even numbers. {{x} : x ∈ C} is a lower set of ir_c(X) whose
      // directed subsets are singletons, so it is Scott-closed; its preimage
      // under x ↦ {x} is C, which is neither finite nor X.
      v.continuous = false;
      v.witness_set = "C = {0,2,4,...}";
      bool infinite = true, coinfinite = true;
      for (std::uint64_t k = 0; k < 64; ++k) {
        infinite = infinite && (2 * k) % 2 == 0;
        coinfinite = coinfinite && (2 * k + 1) % 2 == 1;
        ++v.checks;
      }
      // A finite closed set F misses 2(max F + 1); ℕ contains 1 ∉ C.
      for (std::uint64_t m = 0; m < 64; ++m) {
        const std::uint64_t beyond = 2 * (m + 1);
        infinite = infinite && beyond > m;
        ++v.checks;
      }
      v.continuous = !(infinite && coinfinite);
      v.reason = "{{x} : x ∈ C} is Scott-closed in Σ ir_c(X_cof) but its preimage C is infinite and co-infinite";
      return v;
    }
    case SpaceId::NatChain:
    case SpaceId::NatAB:
    case SpaceId::Johnstone:
    case SpaceId::NatTop:
    case SpaceId::NatABC_Q: {
      // ir_c(X) ordered by inclusion is a copy of the space T below, with
      // x ↦ cl{x} the inclusion X → T; check every closed set of Σ T pulls back
      // to a closed set of X.
      SpaceId target = s;
      if (s == SpaceId::NatChain) target = SpaceId::NatTop;
      if (s == SpaceId::NatAB) target = SpaceId::NatABC_Q;
      if (s == SpaceId::Johnstone) target = SpaceId::JohnstoneTop;
      v.continuous = true;
      for (const auto& c : closed_normal_forms(target, 6)) {
        ClosedSetRep pre = c;
        pre.space = s;
        if (target != s) {
          if (s == SpaceId::NatChain) pre.top = false;
          if (s == SpaceId::NatAB) pre.c = false;
          if (s == SpaceId::Johnstone) pre.top = false;
        }
        ++v.checks;
        if (!is_closed(pre)) {
          v.continuous = false;
          v.witness_set = to_string(c);
          break;
        }
      }
      v.reason = s == target ? "X is sober: η^σ is a homeomorphism onto Σ X"
                             : "ir_c(X) ≅ " + std::string(display_name(target)) +
                                   " and every Scott-closed set pulls back to a closed set";
      return v;
    }
    default:
      throw Error(ErrorKind::Unresolved,
                  "ir_c(" + std::string(display_name(s)) + ") is not of the shape {cl{x}} ∪ {X}");
  }
}

SymbolicCheck check(SpaceId s, Property p) {
  SymbolicCheck c;
  auto sober_verdict = [&] {
    switch (s) {
      case SpaceId::NatTop:
      case SpaceId::NatABC_Q:
        c.holds = true;
        c.reason = "every irreducible closed set is ↓x: the nonempty closed normal forms with one generator";
        break;
      case SpaceId::NatChain:
      case SpaceId::NatAB:
      case SpaceId::CofiniteNat:
      case SpaceId::CofiniteNatTop:
      case SpaceId::Johnstone:
      case SpaceId::JohnstoneTop: {
        ClosedSetRep w = without_top(s);
        if (s == SpaceId::NatAB) w = principal(s, Point::nat(0)), w.height = kAll, w = normalize(w);
        c.holds = false;
        c.witness_set = w;
        c.reason = to_string(w) + " is irreducible (" + irreducible(w).reason + ") but has no generic point";
        break;
      }
    }
  };
  switch (p) {
    case Property::Sober: sober_verdict(); return c;
    case Property::DSpace:
      if (s == SpaceId::NatChain || s == SpaceId::NatAB) {
        c.holds = false;
        c.sup = sup_directed(s, DirectedDesc::full_chain());
        c.reason = "the directed set ℕ has no supremum: " + c.sup->reason;
      } else if (is_cofinite(s)) {
        c.holds = true;
        c.reason = "every directed set of the specialization order has a largest member and every open is an upper set";
      } else {
        c.holds = true;
        c.reason = "a dcpo with its Scott topology";
      }
      return c;
    case Property::WellFiltered:
      if (s == SpaceId::NatTop || s == SpaceId::NatABC_Q) {
        c.holds = true;
        c.reason = "sober, hence well-filtered";
      } else if (s == SpaceId::NatChain || s == SpaceId::NatAB) {
        c.holds = false;
        c.sup = sup_directed(s, DirectedDesc::full_chain());
        c.reason = "not a d-space, hence not well-filtered: " + c.sup->reason;
      } else {
        c.wf = wf_witness(s);
        c.holds = !c.wf->verified();
        c.reason = "filtered family " + c.wf->family + " has intersection inside " + c.wf->open_description +
                   " with no member inside";
      }
      return c;
  }
  return c;
}

// ---------------------------------------------------------------------------

ClosedSetRep random_closed(SpaceId s, std::size_t level, std::mt19937_64& rng) {
  const std::int64_t top_param = static_cast<std::int64_t>(level) - 2;  // parameters stay ≤ level-2
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
  auto upto = [&](std::int64_t hi) {  // uniform in [-1, hi]
    return std::uniform_int_distribution<std::int64_t>(-1, std::max<std::int64_t>(hi, -1))(rng);
  };
  ClosedSetRep r = empty_set(s);
  if (is_nat_like(s)) {
    r.height = coin(0.2) ? kAll : upto(top_param);
    r.a = coin(0.25);
    r.b = coin(0.25);
    r.c = coin(0.25);
    r.top = coin(0.2);
    r = normalize(r);
    if (s == SpaceId::NatTop && r.height == kAll) r.top = true;
    if (s == SpaceId::NatABC_Q && r.height == kAll) r.c = true;
    return normalize(r);
  }
  if (is_cofinite(s)) {
    if (coin(0.15)) {
      r.cofinite = true;
      r.top = coin(0.5);
      return normalize(r);
    }
    for (std::int64_t i = 0; i <= top_param; ++i)
      if (coin(0.3)) r.points.insert(static_cast<std::uint64_t>(i));
    return normalize(r);
  }
  if (coin(0.05)) {
    r.whole = true;
    r.top = coin(0.5);
    return normalize(r);
  }
  const std::int64_t max_col = std::max<std::int64_t>(top_param, 0);
  for (std::int64_t c = 0; c <= max_col && c <= top_param; ++c)
    if (coin(0.12)) r.omega.insert(static_cast<std::uint64_t>(c));
  r.floor = coin(0.5) ? -1 : upto(top_param);
  const int extra = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int i = 0; i < extra && top_param >= 0; ++i) {
    const auto c = static_cast<std::uint64_t>(std::uniform_int_distribution<std::int64_t>(0, top_param)(rng));
    r.heights[c] = upto(top_param);
  }
  return normalize(r);
}

OracleReport oracle_probe(SpaceId s, std::size_t level, std::size_t probes, std::uint64_t seed) {
  OracleReport rep;
  rep.space = s;
  rep.level = level;
  const Truncation t = truncate(s, level);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, t.points.size() - 1);
  std::optional<FiniteSpace> small;
  if (t.points.size() <= 14) small = scott_space(t.poset);

  auto mismatch = [&](const std::string& what, const ClosedSetRep& a, const ClosedSetRep& b, const Point& x) {
    if (rep.mismatches.size() < 20)
      rep.mismatches.push_back(what + ": A=" + to_string(a) + " B=" + to_string(b) + " x=" + to_string(x));
  };
  for (std::size_t i = 0; i < probes; ++i) {
    const ClosedSetRep a = random_closed(s, level, rng);
    const ClosedSetRep b = random_closed(s, level, rng);
    const Point x = t.points[pick(rng)];
    const Point y = t.points[pick(rng)];
    const std::size_t xi = *t.index_of(x);
    const std::size_t yi = *t.index_of(y);
    const Subset ra = t.restrict(a);
    const Subset rb = t.restrict(b);
    ++rep.probes;

    auto expect = [&](bool ok, const char* what) {
      ++rep.comparisons;
      if (!ok) mismatch(what, a, b, x);
    };
    expect(is_closed(a) && is_closed(b), "closed");
    expect(is_lower_set(t.poset, ra), "lower");
    expect(contains(a, x) == ra.contains(xi), "member");
    expect(leq(s, x, y) == t.poset.leq(xi, yi), "order");
    expect(t.restrict(unite(a, b)) == (ra | rb), "union");
    expect(t.restrict(intersect(a, b)) == (ra & rb), "intersection");
    expect(includes(a, b) == ra.is_subset_of(rb), "subset");
    expect((a == b) == (ra == rb), "equality");
    expect(t.restrict(principal(s, x)) == t.poset.down(xi), "principal");
    Subset pair;
    pair.insert(xi);
    pair.insert(yi);
    expect(t.restrict(down_closure(s, {x, y})) == closure(t.poset, pair, Direction::Down), "down-closure");
    if (small) {
      Subset with_x = ra;
      with_x.insert(xi);
      expect(small->closure(with_x) == t.restrict(unite(a, principal(s, x))), "space closure");
      expect(small->is_closed(ra), "space closed");
    }
  }
  return rep;
}

}  // namespace reflekt::sym
