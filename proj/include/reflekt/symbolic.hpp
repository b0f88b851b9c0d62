#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reflekt/poset.hpp"
#include "reflekt/space.hpp"

namespace reflekt::sym {

enum class SpaceId { NatChain, NatTop, NatAB, NatABC_Q, Johnstone, JohnstoneTop, CofiniteNat, CofiniteNatTop };

inline constexpr SpaceId kAllSpaces[] = {SpaceId::NatChain,  SpaceId::NatTop,       SpaceId::NatAB,
                                         SpaceId::NatABC_Q,  SpaceId::Johnstone,    SpaceId::JohnstoneTop,
                                         SpaceId::CofiniteNat, SpaceId::CofiniteNatTop};

/// Canonical CLI tag ("nat", "nat-top", "nat-ab", "q", "johnstone",
/// "johnstone-top", "cofinite", "cofinite-top").
std::string_view tag(SpaceId s);
std::string_view display_name(SpaceId s);
std::optional<SpaceId> parse_space(std::string_view tag);

bool is_johnstone(SpaceId s);
bool is_cofinite(SpaceId s);
/// The four spaces built on ℕ with finitely many named extra points.
bool is_nat_like(SpaceId s);
bool has_top(SpaceId s);

inline constexpr std::uint64_t kOmega = UINT64_MAX;

struct Point {
  enum class Kind { Nat, A, B, C, Top, Pair };
  Kind kind = Kind::Nat;
  std::uint64_t j = 0;  ///< the natural, or the column of a Johnstone pair
  std::uint64_t k = 0;  ///< the row of a Johnstone pair; kOmega for (j,ω)

  static Point nat(std::uint64_t n) { return {Kind::Nat, n, 0}; }
  static Point a() { return {Kind::A, 0, 0}; }
  static Point b() { return {Kind::B, 0, 0}; }
  static Point c() { return {Kind::C, 0, 0}; }
  static Point top() { return {Kind::Top, 0, 0}; }
  static Point pair(std::uint64_t col, std::uint64_t row) { return {Kind::Pair, col, row}; }
  static Point omega(std::uint64_t col) { return {Kind::Pair, col, kOmega}; }

  bool is_omega() const { return kind == Kind::Pair && k == kOmega; }

  friend auto operator<=>(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);
/// Parses "7", "a", "b", "c", "⊤" (or "top"), "(2,3)", "(2,ω)" (or "(2,w)").
std::optional<Point> parse_point(std::string_view text);

bool valid_point(SpaceId s, const Point& p);
/// Throws BadPoint.
void require_point(SpaceId s, const Point& p);

/// The specialization order of the space. Throws BadPoint.
bool leq(SpaceId s, const Point& x, const Point& y);

inline constexpr std::int64_t kAll = INT64_MAX;  ///< a height covering every natural

/// A closed (or candidate) set in normal form. Only the fields belonging to
/// the space's family are meaningful; the rest stay at their defaults.
///
///   nat-like:  `height` (-1 empty, n for {0..n}, kAll for ℕ) plus the flags
///              `a`, `b`, `c`, `top`.
///   Johnstone: `whole`, or ω-columns `omega`, a `floor` height shared by
///              every column not listed in `heights`, and `heights` for the
///              exceptions (kAll marks a column holding every finite row but
///              not its ω-point, which is never Scott-closed). `top` marks ⊤.
///   cofinite:  `cofinite` false lists the members in `points`; true lists
///              the naturals left out. `top` marks ⊤.
struct ClosedSetRep {
  SpaceId space = SpaceId::NatChain;

  std::int64_t height = -1;
  bool a = false, b = false, c = false, top = false;

  bool whole = false;
  std::set<std::uint64_t> omega;
  std::int64_t floor = -1;
  std::map<std::uint64_t, std::int64_t> heights;

  bool cofinite = false;
  std::set<std::uint64_t> points;

  friend bool operator==(const ClosedSetRep&, const ClosedSetRep&) = default;
};

std::string to_string(const ClosedSetRep& r);

ClosedSetRep empty_set(SpaceId s);
/// The whole carrier.
ClosedSetRep whole(SpaceId s);
/// The carrier without ⊤ (ℕ, 𝕁), for the spaces that have a ⊤.
ClosedSetRep without_top(SpaceId s);
/// ↓x.
ClosedSetRep principal(SpaceId s, const Point& x);
/// ↓F for a finite F.
ClosedSetRep down_closure(SpaceId s, const std::vector<Point>& generators);
/// Johnstone: every point of row ≤ r, in every column.
ClosedSetRep johnstone_rows(SpaceId s, std::int64_t r);
/// Cofinite spaces: the finite set F.
ClosedSetRep finite_set(SpaceId s, std::set<std::uint64_t> f);

/// Rewrites `r` into normal form, adding whatever down-closure forces.
ClosedSetRep normalize(ClosedSetRep r);

bool contains(const ClosedSetRep& r, const Point& x);
/// Throws SpaceMismatch.
ClosedSetRep unite(const ClosedSetRep& x, const ClosedSetRep& y);
ClosedSetRep intersect(const ClosedSetRep& x, const ClosedSetRep& y);
/// x ⊆ y.
bool includes(const ClosedSetRep& x, const ClosedSetRep& y);
bool is_empty(const ClosedSetRep& r);

/// Closedness in the space's topology: Scott-closedness for the
/// order-defined spaces (down-closed, and every column or chain with
/// unbounded membership carries its supremum), finite-or-whole for the
/// cofinite ones.
bool is_closed(const ClosedSetRep& r);

struct IrreducibleVerdict {
  bool irreducible = false;
  /// Maximal generators of the normal form; empty when infinitely many.
  std::vector<Point> generators;
  bool infinitely_many_generators = false;
  std::optional<std::pair<ClosedSetRep, ClosedSetRep>> split;
  std::string reason;
};

/// Decision by maximal-generator analysis. Reducible verdicts carry closed
/// B, C ⊊ A with A = B ∪ C. Throws NotClosed.
IrreducibleVerdict irreducible(const ClosedSetRep& r);

/// Independent bounded search for a split: B ranges over normal forms built
/// from the parameters mentioned in A (plus one untouched column or natural),
/// C is the closure of A ∖ B. Returns the first split found.
std::optional<std::pair<ClosedSetRep, ClosedSetRep>> search_split(const ClosedSetRep& r);

/// Closure of A ∖ B for closed B ⊆ A (Johnstone only).
ClosedSetRep closure_of_difference(const ClosedSetRep& a, const ClosedSetRep& b);

/// Weighted description size: ω-column j costs j+1, an exceptional height
/// in column j costs j+1, and the floor r costs r+1.
std::size_t description_size(const ClosedSetRep& r);

/// Every Scott-closed Johnstone normal form of description size ≤ bound
/// (columns and heights below `bound`), plus 𝕁 itself. For JohnstoneTop the
/// whole space 𝕁_⊤ is added as well.
std::vector<ClosedSetRep> johnstone_normal_forms(SpaceId s, std::size_t bound);

struct IrcEnumeration {
  std::size_t enumerated = 0;
  std::size_t irreducible_count = 0;
  std::size_t principal_count = 0;
  std::size_t search_checked = 0;
  std::vector<ClosedSetRep> irreducibles;
  std::vector<ClosedSetRep> unexpected;     ///< irreducible but neither principal nor the carrier
  std::vector<ClosedSetRep> missing;        ///< principal or carrier but judged reducible
  std::vector<ClosedSetRep> disagreements;  ///< rule and search differ
  std::vector<ClosedSetRep> bad_splits;     ///< split certificates that fail re-verification
  bool ok() const { return unexpected.empty() && missing.empty() && disagreements.empty() && bad_splits.empty(); }
};

/// ir_c over the bounded Johnstone normal forms, with the decision rule
/// cross-checked against search_split on every form.
IrcEnumeration johnstone_irc(SpaceId s, std::size_t bound);

/// A nonempty saturated (upper) set in the Johnstone or cofinite spaces.
///
///   Johnstone: ↑gens ∪ M ∪ band ∪ {⊤}, where M ⊆ 𝕁_max is given by the
///              column set `max_cols` (or its complement when
///              `max_cofinite`), and `band` = ↑{(j, row) : j ∉ excluded}.
///   cofinite:  `points` (or ℕ minus them when `cofinite`) plus ⊤.
struct CompactSatRep {
  SpaceId space = SpaceId::Johnstone;
  std::vector<Point> gens;
  bool max_cofinite = false;
  std::set<std::uint64_t> max_cols;
  struct Band {
    std::uint64_t row = 0;
    std::set<std::uint64_t> excluded;
    friend bool operator==(const Band&, const Band&) = default;
  };
  std::optional<Band> band;
  bool cofinite = false;
  std::set<std::uint64_t> points;
  bool top = false;

  friend bool operator==(const CompactSatRep&, const CompactSatRep&) = default;
};

std::string to_string(const CompactSatRep& k);
/// Adds ⊤ when the space has one (it lies above every point) and tidies the
/// index sets.
CompactSatRep normalize(CompactSatRep k);
bool contains(const CompactSatRep& k, const Point& x);
bool is_empty(const CompactSatRep& k);
bool is_saturated(const CompactSatRep& k);
/// k1 ⊆ k2, decided on a finite grid past which both are uniform.
bool includes(const CompactSatRep& k1, const CompactSatRep& k2);
/// Intersection; defined when neither side has generators or a band.
CompactSatRep intersect(const CompactSatRep& k1, const CompactSatRep& k2);

/// An open cover without finite subcover, given by the closed complements
/// C_j of its members for the indices j ∉ excluded.
struct CoverCertificate {
  std::string description;
  std::uint64_t row = 0;
  std::set<std::uint64_t> excluded;
  /// C_j for the first few admissible indices.
  std::vector<std::pair<std::uint64_t, ClosedSetRep>> sample;
  bool verified = false;
};

struct CompactVerdict {
  bool compact = false;
  std::string reason;
  std::optional<CoverCertificate> cover;
};

/// Throws EmptySet; Unresolved outside the Johnstone and cofinite spaces.
CompactVerdict is_compact(const CompactSatRep& k);

/// The closed cover member C_j used by the band certificate.
ClosedSetRep band_cover_complement(SpaceId s, std::uint64_t row, std::uint64_t j);

struct WfWitness {
  SpaceId space{};
  std::size_t cap = 8;
  std::string family;  ///< description of the indexed family
  std::vector<std::pair<std::set<std::uint64_t>, CompactSatRep>> members;
  /// ⋂ over every finite index set.
  CompactSatRep intersection;
  /// ⋂ over the capped members only (agrees with the limit off the cap).
  CompactSatRep capped_intersection;
  std::string open_description;
  /// The named open U is the complement of this closed set.
  ClosedSetRep open_complement;
  bool compact_members = false;
  bool filtered = false;
  bool intersection_inside = false;
  bool no_member_inside = false;
  std::size_t pairs_checked = 0;

  bool verified() const { return compact_members && filtered && intersection_inside && no_member_inside; }
};

/// The family {𝕁_max ∖ F} (resp. {ℕ ∖ F}), with ⊤ when present, over every
/// F ⊆ {0..cap-1}, and all four clauses re-verified. Throws NoneKnown for the
/// spaces without a known failure.
WfWitness wf_witness(SpaceId s, std::size_t cap = 8);

struct DirectedDesc {
  enum class Kind { Finite, ColumnCofinal, FullChain };
  Kind kind = Kind::Finite;
  std::vector<Point> points;
  std::uint64_t column = 0;

  static DirectedDesc finite(std::vector<Point> pts) { return {Kind::Finite, std::move(pts), 0}; }
  static DirectedDesc column_cofinal(std::uint64_t j) { return {Kind::ColumnCofinal, {}, j}; }
  static DirectedDesc full_chain() { return {Kind::FullChain, {}, 0}; }
};

std::string to_string(const DirectedDesc& d);

struct SupResult {
  std::optional<Point> sup;
  /// With no sup: the incomparable minimal upper bounds, or empty when there
  /// is no upper bound at all.
  std::vector<Point> minimal_upper_bounds;
  std::string reason;
};

/// Throws NotDirected (also for descriptions the space does not support).
SupResult sup_directed(SpaceId s, const DirectedDesc& d);

/// The level-n fragment and its induced order.
struct Truncation {
  SpaceId space{};
  std::size_t level = 0;
  FinitePoset poset;
  /// points[i] is the point carried by poset index i.
  std::vector<Point> points;

  std::optional<std::size_t> index_of(const Point& p) const;
  Subset restrict(const ClosedSetRep& r) const;
};

/// Johnstone: {(j,k) : j < n, k < n or k = ω}; ℕ-based: {0..n-1} plus the
/// named points. Throws BadPoint for n = 0.
Truncation truncate(SpaceId s, std::size_t n);

struct EtaVerdict {
  bool continuous = false;
  std::string reason;
  /// For failures: the index set C, with {{x} : x ∈ C} ∪ {X}-style closed
  /// family whose preimage is C.
  std::string witness_set;
  std::size_t checks = 0;
};

/// Continuity of x ↦ cl{x} into Σ ir_c(X). Throws Unresolved when ir_c is not
/// of the shape {cl{x}} ∪ {X}.
EtaVerdict eta_sigma_continuity(SpaceId s);

/// A described verdict for one of the three properties.
struct SymbolicCheck {
  bool holds = false;
  std::string reason;
  std::optional<ClosedSetRep> witness_set;
  std::optional<WfWitness> wf;
  std::optional<SupResult> sup;
};
SymbolicCheck check(SpaceId s, Property p);

struct OracleReport {
  SpaceId space{};
  std::size_t level = 0;
  std::size_t probes = 0;
  std::size_t comparisons = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Random (set, set, point) probes: membership, order, ↓, ∪, ∩, ⊆, = and
/// closedness of symbolic reps against the truncated finite evaluation.
OracleReport oracle_probe(SpaceId s, std::size_t level, std::size_t probes, std::uint64_t seed);

/// A random closed rep whose parameters stay below level-1 (so that the
/// truncation at `level` separates it from every other such rep).
ClosedSetRep random_closed(SpaceId s, std::size_t level, std::mt19937_64& rng);

/// Every closed normal form whose parameters stay below `bound` (for the
/// cofinite spaces: the subsets of {0..bound-1}, ℕ and the whole space).
std::vector<ClosedSetRep> closed_normal_forms(SpaceId s, std::size_t bound);

}  // namespace reflekt::sym
