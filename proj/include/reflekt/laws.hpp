#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reflekt {

/// Size parameters shared by every law. Overridable one key at a time.
struct Scale {
  std::size_t spaces = 4;    ///< T0 spaces on at most this many points
  std::size_t posets = 5;    ///< posets on at most this many points
  std::size_t maps = 4;      ///< posets on each side of the L7 map sweep
  std::size_t alex = 3;      ///< posets for the Γ P universal-property sweep
  std::size_t bound = 6;     ///< Johnstone description bound
  std::size_t trunc = 12;    ///< truncation level
  std::size_t cap = 8;       ///< witness index sets F ⊆ {0..cap-1}
  std::size_t steps = 6;     ///< step-map length for symbolic sources
  std::size_t targets = 4;   ///< sober targets on at most this many points
  std::size_t wf_cap = 64;   ///< K(X) size cap for the well-filtered sweep on posets
  std::uint64_t seed = 20260101;

  /// Applies "key=value". Throws ParseError.
  void apply(std::string_view assignment);
  std::map<std::string, std::uint64_t> as_map() const;
};

enum class Status { Pass, Fail, Capped };
std::string_view to_string(Status s);

struct Certificate {
  std::string id;
  std::string slug;
  std::string anchor;
  Status status = Status::Pass;
  std::map<std::string, std::size_t> counts;
  std::optional<std::string> witness;
  std::vector<std::string> notes;
};

struct LawInfo {
  std::string_view id;
  std::string_view slug;
  std::string_view anchor;
  std::string_view summary;
};

const std::vector<LawInfo>& law_catalog();

/// Accepts "L7" or the slug. Throws UnknownLaw.
Certificate run_law(std::string_view id, const Scale& scale = {});
std::vector<Certificate> run_all(const Scale& scale = {});

}  // namespace reflekt
