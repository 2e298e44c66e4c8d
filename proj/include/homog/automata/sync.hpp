#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homog/automata/dfa.hpp"
#include "homog/automata/transducer.hpp"
#include "homog/error.hpp"

namespace homog {

/// The padded pair alphabet (A ∪ {$}) × (B ∪ {$}) minus ($, $). A side of
/// `std::nullopt` stands for the pad symbol `$`. Symbols are named `a|b`, `a|$`.
class PairAlphabet {
 public:
  PairAlphabet(std::vector<std::string> left, std::vector<std::string> right);

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return names_.size(); }
  Letter encode(std::optional<Letter> x, std::optional<Letter> y) const;
  std::pair<std::optional<Letter>, std::optional<Letter>> decode(Letter symbol) const;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::string> names_;
};

/// Right padding: the shorter word is padded with `$` at its end.
Word delta_R(const PairAlphabet& pa, const Word& u, const Word& v);
/// Left padding: the shorter word is padded with `$` at its start.
Word delta_L(const PairAlphabet& pa, const Word& u, const Word& v);

/// Inverses of delta_R / delta_L; nothing for strings that are not valid paddings.
std::optional<std::pair<Word, Word>> unpad_R(const PairAlphabet& pa, const Word& padded);
std::optional<std::pair<Word, Word>> unpad_L(const PairAlphabet& pa, const Word& padded);

/// Raised when a relation pair has ||u| - |v|| beyond the requested bound.
class LagViolation : public Error {
 public:
  LagViolation(const std::string& message, Word u, Word v)
      : Error(message), u_(std::move(u)), v_(std::move(v)) {}
  const Word& u() const noexcept { return u_; }
  const Word& v() const noexcept { return v_; }

 private:
  Word u_;
  Word v_;
};

/// Minimal Dfa over PairAlphabet(in, out) accepting {δ_R(u, v) : (u, v) in rel(t)}.
///
/// Reads t with a buffer holding the surplus letters of the longer track, emitting
/// a pair symbol whenever both tracks have a letter and padding the rest at an
/// accepting state. Throws LagViolation with a witness pair if some accepted pair
/// has length difference > k. The buffer may run ahead of k in the middle of a
/// path; for relations with bounded length difference a trim transducer never
/// exceeds |Q| letters of lag, so a buffer beyond k + 2|Q| is itself a witness.
Dfa synchronize_bounded(const Transducer& t, std::size_t k);

/// Same for δ_L, via reversal.
Dfa synchronize_bounded_left(const Transducer& t, std::size_t k);

}  // namespace homog
