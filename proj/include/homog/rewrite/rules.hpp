#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "homog/core/presentation.hpp"

namespace homog {

/// A concrete rule lhs -> rhs, remembering which scheme and bindings produced it.
struct RuleInstance {
  Word lhs;
  Word rhs;
  std::size_t scheme = 0;
  std::vector<std::pair<std::string, std::size_t>> nat_bindings;
  std::vector<std::pair<std::string, Word>> word_bindings;
};

using RuleSet = std::vector<RuleInstance>;

RuleSet rules_from_pairs(const std::vector<std::pair<Word, Word>>& pairs);

/// Substitutes the given bindings into both sides of `scheme`.
std::pair<Word, Word> instantiate(const RuleScheme& scheme,
                                  const std::vector<std::pair<std::string, std::size_t>>& nat,
                                  const std::vector<std::pair<std::string, Word>>& words);

/// Every instance with |lhs| <= bound. Exponent variables are enumerated in
/// increasing order (first declared outermost), word variables in shortlex
/// order. Identical (lhs, rhs) pairs are kept once, at their first occurrence.
///
/// For a homogeneous presentation, rewriting words of length <= bound with this
/// set is the same as rewriting with the infinite system: no longer lhs fits.
RuleSet instantiate_schemes(const Presentation& p, std::size_t bound);

/// Human-readable rule, `c a a b -> c a b b  [scheme 2, U=a]`.
std::string format_rule(const Alphabet& alphabet, const RuleInstance& rule);

}  // namespace homog
