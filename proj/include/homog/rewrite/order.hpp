#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homog/core/word.hpp"
#include "homog/rewrite/rules.hpp"

namespace homog {

/// A reduction order on words, built from a letter precedence.
///
///   shortlex  length first, then left-to-right lexicographic
///   rtl       length first, then right-to-left lexicographic
///   wlex      total weight first, then length, then left-to-right lexicographic
class TermOrder {
 public:
  enum class Kind { Shortlex, RightToLeft, WeightedLex };

  /// `precedence` lists letters from smallest to largest; it must be a
  /// permutation of the alphabet's letters.
  TermOrder(Kind kind, std::vector<Letter> precedence, std::vector<std::size_t> weights = {});

  /// Parses `shortlex:b>a>c`, `rtl:b1<b2<a<d1`, `wlex:a=2,b=1:a>b>c`.
  /// Unmentioned letters rank above every mentioned one, in declaration order.
  static TermOrder parse(std::string_view spec, const Alphabet& alphabet);

  Kind kind() const noexcept { return kind_; }
  std::size_t rank(Letter l) const { return rank_.at(l); }
  bool less(const Word& u, const Word& v) const;
  bool greater(const Word& u, const Word& v) const { return less(v, u); }

  std::string describe(const Alphabet& alphabet) const;

 private:
  Kind kind_;
  std::vector<Letter> precedence_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> weights_;
};

/// Sufficient termination certificate: lhs > rhs for every rule.
bool check_termination(const RuleSet& rules, const TermOrder& order);

/// First order orienting every rule: shortlex, then rtl, over letter precedences
/// in lexicographic permutation order. Alphabets above `max_letters` only try the
/// declaration order and its reverse.
std::optional<TermOrder> find_termination_order(const RuleSet& rules, const Alphabet& alphabet,
                                                std::size_t max_letters = 7);

}  // namespace homog
