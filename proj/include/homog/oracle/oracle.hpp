#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "homog/automata/dfa.hpp"
#include "homog/core/presentation.hpp"
#include "homog/rewrite/pattern_index.hpp"
#include "homog/rewrite/rules.hpp"

namespace homog {

/// A finite congruence class. Members are sorted shortlex; the representative
/// is the first one.
struct CongruenceClass {
  std::vector<Word> members;

  const Word& representative() const { return members.front(); }
  bool contains(const Word& w) const;
  std::size_t size() const noexcept { return members.size(); }
};

using ClassPtr = std::shared_ptr<const CongruenceClass>;

inline constexpr std::size_t kDefaultWordCap = 5'000'000;

/// Ground truth for homogeneous presentations: the class of w is the closure of
/// {w} under single rule applications in both directions, using every scheme
/// instance with lhs no longer than |w|. Classes are cached; every member of a
/// computed class maps to the same shared object. Thread-safe.
class Oracle {
 public:
  /// Throws Error if the presentation is not homogeneous.
  explicit Oracle(Presentation p, std::size_t word_cap = kDefaultWordCap);

  const Presentation& presentation() const noexcept { return p_; }
  const Alphabet& alphabet() const noexcept { return p_.alphabet; }

  ClassPtr class_of(const Word& w) const;
  /// Uses a cached class when available, otherwise a two-sided search that stops
  /// as soon as the words are connected; a false answer explores a whole class.
  bool are_equal(const Word& u, const Word& v) const;
  Word representative(const Word& w) const { return class_of(w)->representative(); }

  /// Number of distinct classes among all words of length n, for n = 0..maxlen.
  std::vector<std::size_t> growth_series(std::size_t maxlen) const;

  /// All classes of words of length n, in order of their representatives.
  std::vector<ClassPtr> classes_of_length(std::size_t n) const;

 private:
  struct LengthRules {
    std::vector<std::pair<Word, Word>> moves;  // both directions
    PatternIndex index;
  };
  const LengthRules& rules_for(std::size_t n) const;

  Presentation p_;
  std::size_t word_cap_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::unique_ptr<LengthRules>> rules_;
  mutable std::unordered_map<Word, ClassPtr, WordHash> cache_;
};

struct NormalFormViolation {
  std::size_t length = 0;
  Word representative;
  std::size_t accepted = 0;
};

struct NormalFormReport {
  std::size_t classes_checked = 0;
  std::vector<NormalFormViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks that every class of words of length <= maxlen has exactly one member
/// accepted by `language` (whose symbols must be the presentation's letters).
NormalFormReport verify_normal_forms(const Oracle& oracle, const Dfa& language, std::size_t maxlen);

/// `length=<n> class-rep=<w> accepted=<k>`
std::string format_violation(const Alphabet& alphabet, const NormalFormViolation& v);

}  // namespace homog
