#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reflekt/poset.hpp"
#include "reflekt/space.hpp"
#include "reflekt/symbolic.hpp"

namespace reflekt {

/// Which reflective subcategory plays K: sober spaces, d-spaces or
/// well-filtered spaces.
enum class KFamily { Sob, D, WF };
inline constexpr KFamily kAllKinds[] = {KFamily::Sob, KFamily::D, KFamily::WF};

std::string_view to_string(KFamily k);
/// "sob"/"sober", "d"/"d-space", "wf"/"well-filtered".
std::optional<KFamily> parse_kfamily(std::string_view name);
/// The property a K-space has.
Property property_of(KFamily k);

/// One named check with its outcome.
struct Evidence {
  std::string name;
  bool passed = false;
  std::string detail;
};
bool all_passed(const std::vector<Evidence>& ev);

/// The families S_c(X) ⊆ D_c(X) ⊆ K(X) ⊆ ir_c(X). K(X) is reported only
/// when something pins it down; `justification` names what.
struct KSetInterval {
  std::vector<Subset> point_closures;
  std::vector<Subset> lower;  ///< D_c(X)
  std::vector<Subset> upper;  ///< ir_c(X)
  std::optional<std::vector<Subset>> resolved;
  std::string justification;
  bool sandwich_holds = false;
};

/// Throws NotT0.
KSetInterval kset_interval(const FiniteSpace& x, KFamily kind);

/// A family of closed sets of a symbolic space: the point closures (when
/// `point_closures`) plus finitely many extra sets.
struct SymbolicFamily {
  bool point_closures = true;
  std::vector<sym::ClosedSetRep> extra;
  std::string describe(sym::SpaceId s) const;
  friend bool operator==(const SymbolicFamily&, const SymbolicFamily&) = default;
};

struct SymbolicKSetInterval {
  sym::SpaceId space{};
  KFamily kind{};
  SymbolicFamily lower;
  SymbolicFamily upper;
  std::optional<SymbolicFamily> resolved;
  std::string justification;
  std::vector<Evidence> evidence;
};

/// ir_c is read off the irreducibility decision on the closed normal forms;
/// K(X) is resolved when D_c = ir_c, when X is itself a K-space
/// (K(X) = S_c), or when X is not a K-space and ir_c sits one set above S_c
/// (K(X) = ir_c).
SymbolicKSetInterval kset_interval(sym::SpaceId s, KFamily kind);

/// X^k = P_H(K(X)) with η(x) = cl{x}.
struct FiniteReflection {
  FiniteSpace source;
  KFamily kind{};
  HoareSpace target;
  std::vector<std::size_t> eta;
  std::vector<Evidence> evidence;
  bool verified() const { return all_passed(evidence); }
};

/// Throws NotT0.
FiniteReflection kreflection(const FiniteSpace& x, KFamily kind);
/// The sober reflection P_H(ir_c(X)).
FiniteReflection sobrify(const FiniteSpace& x);

struct Extension {
  std::vector<std::size_t> graph;
  /// Continuous maps target -> Y that agree with f along η.
  std::size_t agreeing_maps = 0;
  bool factors = false;  ///< f* ∘ η = f
  bool continuous = false;
};

/// f*(A) = the y with cl(f(A)) = cl{y}. Throws TargetNotSober and
/// NoUniquePoint; SignatureMismatch when f does not fit.
Extension extend_map(const FiniteReflection& r, const FiniteSpace& y, const std::vector<std::size_t>& f);

/// □C = { K ∈ K(X) : K ⊆ C } as a subset of the reflection's carrier.
Subset box(const FiniteReflection& r, const Subset& closed);

enum class CompletionVariant { Ds, Ks, K };
std::string_view to_string(CompletionVariant v);

/// A completion of a finite poset: the target order and x ↦ image.
struct Completion {
  FinitePoset source;
  FinitePoset target;
  /// The set of source points each target index stands for.
  std::vector<Subset> family;
  std::vector<std::size_t> map;
  CompletionVariant variant{};
  KFamily kind{};
  std::vector<Evidence> evidence;
  bool verified() const { return all_passed(evidence); }
};

/// K(Γ P) by inclusion with x ↦ ↓x; checked against Id P.
Completion d_completion_alexandroff(const FinitePoset& p, KFamily kind = KFamily::D);
/// K(Σ P) by inclusion with x ↦ ↓x.
Completion ks_completion(const FinitePoset& p, KFamily kind);

/// f*(I) = ⋁ f(I) on Id P. Throws NotMonotone, TargetNotDcpo.
struct IdealExtension {
  IdealFamily ideals;
  std::vector<std::size_t> graph;  ///< per ideal
  bool factors = false;            ///< f* ∘ φ = f
  bool scott_continuous = false;
};
IdealExtension ideal_extension(const MonotoneMap& f);

/// A symbolic completion or reflection target, with the map described.
struct SymbolicCompletion {
  sym::SpaceId source{};
  KFamily kind{};
  sym::SpaceId target{};
  std::string map;
  std::string route;
  std::vector<Evidence> evidence;
  bool verified() const { return all_passed(evidence); }
};

/// ℕ -> ℕ_⊤, ℕ∪{a,b} -> Q, with the ideal families compared to the target
/// on truncations. Throws HypothesisFailed for the other spaces.
SymbolicCompletion d_completion_alexandroff(sym::SpaceId s, KFamily kind = KFamily::D);
/// K(Σ P) for the order-defined spaces. Throws HypothesisFailed when the
/// reflection is not a Scott space, Unresolved when not decided.
SymbolicCompletion ks_completion(sym::SpaceId s, KFamily kind);

/// Why the K-reflection of a Scott space is not a Scott space: ir_c has the
/// shape {cl{x}} ∪ {X} and Σ P_⊤ is not a K-space.
struct NotScottCertificate {
  std::string failing_hypothesis;
  sym::IrcEnumeration shape;
  std::size_t shape_bound = 0;
  sym::WfWitness witness;
  bool source_not_kspace = false;
  bool verified() const { return shape.ok() && witness.verified() && source_not_kspace; }
};

struct SymbolicReflection {
  sym::SpaceId source{};
  KFamily kind{};
  std::optional<sym::SpaceId> target;
  std::string eta;
  std::vector<Evidence> evidence;
  std::optional<NotScottCertificate> not_scott;
  bool verified() const { return all_passed(evidence) && (!not_scott || not_scott->verified()); }
};

/// Throws Unresolved when the space is not a Scott space or its K(X) is not
/// pinned down.
SymbolicReflection scott_kreflection(sym::SpaceId s, KFamily kind, std::size_t bound = 6);
/// Σ K(Σ P) for a finite poset.
FiniteReflection scott_kreflection(const FinitePoset& p, KFamily kind);

/// Outcome of a universal-property sweep: every generated map must factor
/// through η in exactly one way.
struct UniversalReport {
  std::string source;
  std::string target;
  std::size_t targets = 0;
  std::size_t maps = 0;
  std::size_t candidates = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;
  bool ok() const { return failures == 0 && maps > 0; }
};

/// All finite T0 spaces on 1..max_points points that pass the sober check.
const std::vector<FiniteSpace>& sober_targets(std::size_t max_points);

/// η : X -> T against every sober target. `predicted`, when given, names the
/// expected factoring map for (Y, f).
UniversalReport universal_property_check(
    const FiniteSpace& source, const FiniteSpace& target, const std::vector<std::size_t>& eta,
    std::size_t max_target,
    const std::function<std::vector<std::size_t>(const FiniteSpace&, const std::vector<std::size_t>&)>& predicted = {});
UniversalReport universal_property_check(const FiniteReflection& r, std::size_t max_target);
/// Γ P -> Σ Id P, checking f*(I) = ⋁ f(I).
UniversalReport universal_property_alexandroff(const FinitePoset& p, std::size_t max_target);

/// Σℕ -> Σℕ_⊤ (for ℕ, Γℕ = Σℕ) and Σ(ℕ∪{a,b}) -> ΣQ, against every sober
/// target, with monotone step maps: values below `steps`, then an eventual
/// value. Throws HypothesisFailed for other sources.
UniversalReport universal_property_check(sym::SpaceId source, std::size_t max_target, std::size_t steps);

/// An order isomorphism between the completion family on ℕ-based sources and
/// the truncated target, checked at `level`.
bool psi_isomorphism(sym::SpaceId source, std::size_t level);

}  // namespace reflekt
