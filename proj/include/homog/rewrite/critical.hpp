#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "homog/rewrite/reduce.hpp"

namespace homog {

enum class OverlapKind { SuffixPrefix, Containment };

/// Rule `outer` applies at position 0 of `peak`, rule `inner` at `inner_pos`.
/// For a suffix-prefix overlap the outer lhs is a prefix of the peak and the inner
/// lhs a suffix; for containment the peak is the outer lhs.
struct CriticalPair {
  Word peak;
  Word left;   // result of the outer rule
  Word right;  // result of the inner rule
  OverlapKind kind = OverlapKind::SuffixPrefix;
  std::size_t outer = 0;
  std::size_t inner = 0;
  std::size_t inner_pos = 0;
};

/// All critical pairs in enumeration order: outer rule ascending, then inner rule
/// ascending, then inner position ascending. Rules with identical lhs contribute
/// one containment pair (lower index as outer).
std::vector<CriticalPair> critical_pairs(const RuleSet& rules);

struct PairResolution {
  CriticalPair pair;
  Word left_normal;
  Word right_normal;
  bool joinable = false;
};

struct ConfluenceReport {
  std::vector<PairResolution> pairs;
  std::size_t skipped = 0;  // pairs whose peak exceeded max_peak

  std::size_t joinable_count() const;
  bool locally_confluent() const { return joinable_count() == pairs.size(); }
  const PairResolution* first_failure() const;
};

/// Normalizes both results of each critical pair. When `max_peak` is set, pairs
/// with a longer peak are skipped (used with bounded scheme instantiation, which
/// is exact only up to the bound). Propagates NonTermination.
ConfluenceReport check_local_confluence(const RuleSet& rules, std::size_t fuel = kDefaultFuel,
                                        std::optional<std::size_t> max_peak = std::nullopt);

}  // namespace homog
