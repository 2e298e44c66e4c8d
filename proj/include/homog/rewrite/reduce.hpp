#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homog/rewrite/pattern_index.hpp"
#include "homog/rewrite/rules.hpp"

namespace homog {

inline constexpr std::size_t kDefaultFuel = 1'000'000;

struct Step {
  Word result;
  std::size_t position = 0;
  std::size_t rule = 0;
};

struct Normalization {
  Word word;
  std::size_t steps = 0;
  std::vector<Step> trace;  // filled only when requested
};

/// Leftmost-redex rewriting. Among redexes at the leftmost start position the
/// rule with the smallest index wins.
class Rewriter {
 public:
  explicit Rewriter(RuleSet rules, std::optional<Alphabet> alphabet = std::nullopt);

  const RuleSet& rules() const noexcept { return rules_; }

  std::optional<Step> reduce_once(const Word& w) const;
  bool is_irreducible(const Word& w) const { return !reduce_once(w).has_value(); }

  /// Throws NonTermination (with the last steps formatted one per line) once
  /// `fuel` steps are spent without reaching an irreducible word.
  Word normalize(const Word& w, std::size_t fuel = kDefaultFuel) const;
  Normalization normalize_traced(const Word& w, std::size_t fuel = kDefaultFuel, bool keep_trace = false) const;

  /// `before -> after  (rule i at p)` with 1-based rule numbers.
  std::string format_step(const Word& before, const Step& step) const;

 private:
  RuleSet rules_;
  std::optional<Alphabet> alphabet_;
  PatternIndex index_;
};

std::optional<Step> reduce_once(const RuleSet& rules, const Word& w);
Word normalize(const RuleSet& rules, const Word& w, std::size_t fuel = kDefaultFuel);

}  // namespace homog
