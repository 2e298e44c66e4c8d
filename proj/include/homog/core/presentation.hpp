#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "homog/core/word.hpp"

namespace homog {

/// Sum of named natural-number variables plus a constant, e.g. `k+l+1`.
/// A variable may repeat; `vars` keeps the written order.
struct Exponent {
  std::vector<std::string> vars;
  std::size_t constant = 0;

  bool is_constant() const noexcept { return vars.empty(); }
  bool operator==(const Exponent&) const = default;
};

struct LetterAtom {
  Letter letter;
  bool operator==(const LetterAtom&) const = default;
};

/// A single letter raised to an exponent expression, `a^k` or `a^(k+l)`.
struct PowerAtom {
  Letter letter;
  Exponent exponent;
  bool operator==(const PowerAtom&) const = default;
};

/// A word variable ranging over all words of its declared sub-alphabet.
struct WordVarAtom {
  std::string name;
  bool operator==(const WordVarAtom&) const = default;
};

using Atom = std::variant<LetterAtom, PowerAtom, WordVarAtom>;

struct WordVariable {
  std::string name;
  std::vector<Letter> letters;
  bool operator==(const WordVariable&) const = default;
};

/// A (possibly parametric) rewriting rule lhs -> rhs. A plain rule has no variables.
///
/// Invariants, enforced by validate(): every variable used in rhs occurs in lhs,
/// every declared variable occurs in lhs, and a word variable occurs at most once
/// in lhs.
struct RuleScheme {
  std::vector<Atom> lhs;
  std::vector<Atom> rhs;
  std::vector<std::string> nat_vars;
  std::vector<WordVariable> word_vars;

  static RuleScheme plain(const Word& lhs, const Word& rhs);

  bool is_plain() const noexcept { return nat_vars.empty() && word_vars.empty(); }
  /// Literal lhs/rhs of a plain rule (constant powers expanded). Throws for schemes.
  Word plain_lhs() const;
  Word plain_rhs() const;

  const WordVariable* find_word_var(std::string_view name) const;
  void validate() const;

  bool operator==(const RuleScheme&) const = default;
};

struct Presentation {
  Alphabet alphabet;
  std::vector<RuleScheme> schemes;

  bool all_plain() const;
  /// (lhs, rhs) pairs of a presentation whose schemes are all plain.
  std::vector<std::pair<Word, Word>> plain_rules() const;
  void add_rule(const Word& lhs, const Word& rhs) { schemes.push_back(RuleScheme::plain(lhs, rhs)); }

  bool operator==(const Presentation&) const = default;
};

/// Parses the line-based presentation format:
///
///     letters: a b c
///     rule:   c b a b -> c b c b
///     scheme: c1 a^k b1 a^l d2 -> c2 a^(k+l) b1 d1   where k l : nat
///     scheme: c U a b -> c U b b                      where U : word(a b)
///
/// `#` starts a comment. Errors are ParseError carrying the line number.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::filesystem::path& path);

/// Canonical text: one `letters:` line then one line per scheme in order.
std::string serialize(const Presentation& p);
std::string format_scheme(const Alphabet& alphabet, const RuleScheme& scheme);

struct Classification {
  bool homogeneous = false;
  bool multihomogeneous = false;
  std::optional<std::size_t> nary;

  bool operator==(const Classification&) const = default;
};

/// Homogeneity holds when |lhs| = |rhs| identically in the variables; multi-
/// homogeneity when every letter count agrees identically; n-ary when every side of
/// every rule (no variables allowed) has the same constant length n.
Classification classify(const Presentation& p);

std::string describe(const Classification& c);

/// The reversal presentation: every side reversed atom by atom.
Presentation reverse_presentation(const Presentation& p);

}  // namespace homog
