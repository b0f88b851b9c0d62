#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reflekt/subset.hpp"

namespace reflekt {

/// Soft cap on carriers for enumeration-heavy operations (2^n subset sweeps).
/// Defaults to 16; the REFLEKT_MAX_CARRIER environment variable overrides it.
std::size_t enumeration_cap();

/// Throws CapExceeded when `n` exceeds `enumeration_cap()`.
void require_enumerable(std::size_t n, std::string_view what);

/// A finite partial order over opaque string labels.
///
/// Labels are kept in lexical order and the relation is stored fully closed
/// (reflexive and transitive), so every order query is a bit lookup.
class FinitePoset {
 public:
  using LabelPair = std::pair<std::string, std::string>;

  FinitePoset() = default;

  /// Validates labels, closes `pairs` reflexively and transitively and
  /// rejects cycles. `pairs` may be any generating set (e.g. a Hasse diagram).
  static FinitePoset from_pairs(std::vector<std::string> labels, const std::vector<LabelPair>& pairs);

  /// Builds from index relations: `up[i]` holds every j with i <= j (need not
  /// be closed). Labels are sorted on the way in.
  static FinitePoset from_up_sets(std::vector<std::string> labels, std::vector<Subset> up);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws UnknownLabel.
  std::size_t index(std::string_view label) const;

  bool leq(std::size_t x, std::size_t y) const { return up_[x].contains(y); }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  const Subset& up(std::size_t x) const { return up_[x]; }
  const Subset& down(std::size_t x) const { return down_[x]; }
  Subset carrier() const { return Subset::full(size()); }

  /// Strict covering pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Every pair x <= y, reflexive pairs included.
  std::vector<std::pair<std::size_t, std::size_t>> relation() const;

  Subset labels_to_subset(const std::vector<std::string>& names) const;
  std::vector<std::string> subset_labels(const Subset& s) const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

enum class Direction { Down, Up };

/// ↓A or ↑A.
Subset closure(const FinitePoset& p, const Subset& a, Direction dir);
bool is_lower_set(const FinitePoset& p, const Subset& a);
bool is_upper_set(const FinitePoset& p, const Subset& a);

/// Nonempty, and every pair has an upper bound inside the set.
bool is_directed(const FinitePoset& p, const Subset& a);
Subset upper_bounds(const FinitePoset& p, const Subset& a);
/// Least upper bound of `a`, if one exists.
std::optional<std::size_t> supremum(const FinitePoset& p, const Subset& a);
/// Greatest element of `a` itself, if `a` has one.
std::optional<std::size_t> greatest(const FinitePoset& p, const Subset& a);
Subset maximal_elements(const FinitePoset& p);

/// Every directed subset, found by sweeping all 2^n subsets.
std::vector<Subset> directed_subsets(const FinitePoset& p);

/// Directed subsets paired with their supremum, for those that have one.
struct DirectedSup {
  Subset set;
  std::size_t sup;
};
std::vector<DirectedSup> directed_sups(const FinitePoset& p);

bool is_dcpo(const FinitePoset& p);
/// Every directed subset has a largest member.
bool is_noetherian(const FinitePoset& p);
/// Every subset, the empty one included, has a supremum.
bool is_complete_lattice(const FinitePoset& p);

/// All ideals (directed lower sets), ordered by inclusion.
struct IdealFamily {
  std::vector<Subset> members;

  /// The family as a poset under inclusion; labels are the rendered sets.
  FinitePoset as_poset(const FinitePoset& source) const;
};
IdealFamily ideals(const FinitePoset& p);

/// The way-below relation evaluated from its definition over all directed
/// sets with a supremum.
struct WayBelow {
  std::vector<Subset> below;  ///< below[y] = { x : x << y }
  Subset compact;             ///< K(P) = { k : k << k }
  bool continuous_domain = false;
  bool algebraic_domain = false;

  bool holds(std::size_t x, std::size_t y) const { return below[y].contains(x); }
};
WayBelow way_below(const FinitePoset& p);

/// Returns a label not present in `taken`, starting from `base` and appending
/// primes until it is fresh.
std::string fresh_label(const std::vector<std::string>& taken, const std::string& base);

/// P_⊤: a fresh largest element adjoined above everything, even above an
/// existing top.
struct WithTop {
  FinitePoset poset;
  std::size_t top;
  /// old index -> new index
  std::vector<std::size_t> embed;
};
WithTop add_top(const FinitePoset& p);

/// Renders a subset as "{a,b}" using the poset's labels.
std::string render_subset(const std::vector<std::string>& labels, const Subset& s);

/// A map between finite posets given pointwise.
struct MonotoneMap {
  FinitePoset source;
  FinitePoset target;
  std::vector<std::size_t> graph;
};

bool is_monotone(const MonotoneMap& f);

struct ContinuityReport {
  bool continuous = true;
  std::size_t directed_sets_checked = 0;
  std::optional<Subset> witness;  ///< a directed D with f(∨D) != ∨f(D)
};

/// f(∨D) = ∨f(D) for every directed D whose supremum exists. Throws
/// NotMonotone.
ContinuityReport scott_continuity_check(const MonotoneMap& f);

/// Backtracking order-isomorphism search; nullopt when none exists. Throws
/// CapExceeded beyond `cap` elements.
std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& a, const FinitePoset& b,
                                                         std::size_t cap = 8);

/// All labeled posets on the labels "0".."n-1", generated by orienting each
/// pair and keeping the transitive, acyclic orientations.
std::vector<FinitePoset> all_posets(std::size_t n);

/// Independent count of labeled posets on n points by testing every
/// off-diagonal relation matrix for transitivity and antisymmetry.
std::size_t count_posets_brute_force(std::size_t n);

/// Monotone maps between two finite posets, by backtracking.
std::vector<std::vector<std::size_t>> monotone_maps(const FinitePoset& source, const FinitePoset& target);

}  // namespace reflekt
