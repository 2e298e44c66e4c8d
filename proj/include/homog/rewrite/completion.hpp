#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "homog/rewrite/order.hpp"
#include "homog/rewrite/reduce.hpp"

namespace homog {

enum class CompletionStatus { Complete, MaxRulesExceeded, Unorientable };

struct CompletionResult {
  CompletionStatus status = CompletionStatus::Complete;
  RuleSet rules;
  /// For Unorientable: the offending equation.
  std::optional<std::pair<Word, Word>> equation;
  std::size_t rounds = 0;
};

/// Knuth-Bendix completion. Each round resolves every critical pair of the
/// current system, orients the non-joinable ones (normal forms) with `order`,
/// then drops rules whose lhs contains another rule's lhs. Right-hand sides of
/// surviving rules are left as given.
CompletionResult complete(const RuleSet& rules, const TermOrder& order, std::size_t max_rules,
                          std::size_t fuel = kDefaultFuel);

}  // namespace homog
