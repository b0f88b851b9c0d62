#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reflekt/poset.hpp"
#include "reflekt/subset.hpp"

namespace reflekt {

/// A finite topological space, stored as its family of closed sets.
///
/// The carrier is kept in lexical label order and the closed family in
/// canonical bit-string order. Construction enforces the topology axioms;
/// T0 is checked on demand by the operations that need it.
class FiniteSpace {
 public:
  FiniteSpace();

  /// Throws InvalidTopology when the family misses ∅ or the carrier or is not
  /// closed under pairwise union and intersection; DuplicateLabel on repeated
  /// labels.
  static FiniteSpace from_closed_sets(std::vector<std::string> carrier, std::vector<Subset> closed);
  /// The topology generated by `subbase` (a family of open sets).
  static FiniteSpace from_open_subbase(std::vector<std::string> carrier, const std::vector<Subset>& subbase);

  std::size_t size() const { return carrier_.size(); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const std::string& label(std::size_t i) const { return carrier_[i]; }
  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index(std::string_view label) const;
  Subset all() const { return Subset::full(size()); }

  const std::vector<Subset>& closed_sets() const { return closed_; }
  std::vector<Subset> open_sets() const;
  bool is_closed(const Subset& s) const;
  bool is_open(const Subset& s) const { return is_closed(all() - s); }

  Subset closure(const Subset& s) const;
  const Subset& point_closure(std::size_t x) const { return point_closure_[x]; }
  /// Intersection of all open sets containing `s`.
  Subset saturation(const Subset& s) const;
  bool is_t0() const;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  void finish();

  std::vector<std::string> carrier_;
  std::vector<Subset> closed_;
  std::vector<Subset> point_closure_;
};

/// Γ P: every upper set is open.
FiniteSpace alexandroff(const FinitePoset& p);
/// Σ P: opens evaluated from the Scott-open definition over all directed sets.
FiniteSpace scott_space(const FinitePoset& p);
/// υ(P): generated by the complements of the principal ideals.
FiniteSpace upper_space(const FinitePoset& p);

/// x <= y iff x lies in the closure of {y}. Throws NotT0.
FinitePoset specialization(const FiniteSpace& x);

/// S_c(X): closures of points.
std::vector<Subset> point_closures(const FiniteSpace& x);
/// D_c(X): closures of directed subsets of the specialization order.
std::vector<Subset> directed_closures(const FiniteSpace& x);
/// ir_c(X): nonempty closed sets no pair of closed sets can split.
std::vector<Subset> irreducibles(const FiniteSpace& x);

enum class Property { Sober, WellFiltered, DSpace };
std::string_view to_string(Property p);
/// Accepts "sober", "well-filtered"/"well_filtered"/"wf", "d-space"/"d_space"/"d".
std::optional<Property> parse_property(std::string_view name);

/// Outcome of an exhaustive property check, with the counts that were
/// examined and, on failure, the offending sets.
struct PropertyCheck {
  Property property{};
  bool holds = true;
  std::size_t instances = 0;
  std::string detail;
  std::optional<Subset> witness_set;
  std::vector<Subset> witness_family;
  std::optional<Subset> witness_open;
};

/// Caps the Smyth-family sweep of the well-filtered check.
inline constexpr std::size_t kMaxCompactFamily = 64;

/// Throws NotT0, and CapExceeded when K(X) has more than `wf_cap` members
/// during a well-filtered check.
PropertyCheck check(const FiniteSpace& x, Property property, std::size_t wf_cap = kMaxCompactFamily);

/// Every open cover of `k` admits a finite subcover. On a finite space the
/// open family is itself finite, so the cover by all opens is searched for a
/// minimal subcover.
bool is_compact(const FiniteSpace& x, const Subset& k);

/// Nonempty compact saturated subsets under the Smyth order (K1 ⊑ K2 iff
/// K2 ⊆ K1).
struct CompactSatFamily {
  std::vector<Subset> members;

  static bool smyth_leq(const Subset& k1, const Subset& k2) { return k2.is_subset_of(k1); }
  /// The Smyth-greatest member (the smallest set), if one exists.
  std::optional<Subset> smyth_maximum() const;
};
CompactSatFamily compact_saturated(const FiniteSpace& x);

/// P_H(G): the family G of nonempty closed sets with the lower Vietoris
/// topology generated by {◇U : U open}.
struct HoareSpace {
  FiniteSpace space;
  /// family[i] is the closed set that carrier point i of `space` stands for.
  std::vector<Subset> family;

  std::optional<std::size_t> member_index(const Subset& a) const;
};

/// Throws EmptyMember when ∅ ∈ G (or G is empty) and NotClosed when a member
/// is not closed in X.
HoareSpace hoare_space(const FiniteSpace& x, std::vector<Subset> family);

/// x -> cl{x}; nullopt when some point closure is missing from the family.
std::optional<std::vector<std::size_t>> canonical_map(const FiniteSpace& x, const HoareSpace& h);

struct ContinuousMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<std::size_t> graph;
};

/// Preimage of every closed set is closed.
bool is_continuous(const ContinuousMap& f);
bool is_continuous(const FiniteSpace& source, const FiniteSpace& target, const std::vector<std::size_t>& graph);

/// Injective, continuous and open onto its image.
bool is_embedding(const FiniteSpace& source, const FiniteSpace& target, const std::vector<std::size_t>& graph);

/// Every continuous map between two finite spaces (backtracking on the
/// specialization orders, each candidate confirmed by preimages).
std::vector<std::vector<std::size_t>> continuous_maps(const FiniteSpace& source, const FiniteSpace& target);

/// A subspace together with the points of the ambient space it keeps.
struct Subspace {
  FiniteSpace space;
  Subset points;
};

/// Relative topology on `a`; carrier labels are inherited.
Subspace induced_subspace(const FiniteSpace& x, const Subset& a);

/// E(f, g) = { x : f(x) = g(x) }. Throws SignatureMismatch.
Subspace equalizer(const ContinuousMap& f, const ContinuousMap& g);

enum class SubspaceKind { Closed, Saturated };
/// Throws KindMismatch when `a` is not of the declared kind.
Subspace subspace(const FiniteSpace& x, const Subset& a, SubspaceKind kind);

/// X_⊤: closed sets C(X) ∪ {X ∪ {⊤}} with a fresh point ⊤.
struct SpaceWithTop {
  FiniteSpace space;
  std::size_t top;
  std::vector<std::size_t> embed;
};
SpaceWithTop x_top(const FiniteSpace& x);

/// A homeomorphism X -> Y (point map), if one exists. Both spaces must be T0.
std::optional<std::vector<std::size_t>> find_homeomorphism(const FiniteSpace& x, const FiniteSpace& y);

/// All labeled T0 topologies on "0".."n-1", enumerated directly as closed-set
/// families (not via posets). Capped at 4 points.
std::vector<FiniteSpace> all_t0_spaces(std::size_t n);

}  // namespace reflekt
