#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace homog {

/// Index of a letter inside its Alphabet.
using Letter = std::uint16_t;

/// A word is a finite sequence of letter indices; the empty vector is ε.
using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Shortlex comparison on letter indices: shorter first, then lexicographic.
bool shortlex_less(const Word& u, const Word& v);

Word reversed(Word w);

Word concat(const Word& u, const Word& v);
Word concat(const Word& u, const Word& v, const Word& w);

/// The word of length `n` consisting of `letter` repeated.
Word power(Letter letter, std::size_t n);

/// True if `factor` occurs in `w` starting at `pos`.
bool occurs_at(const Word& w, std::size_t pos, const Word& factor);

/// First occurrence of `factor` in `w` at or after `from`.
std::optional<std::size_t> find_factor(const Word& w, const Word& factor, std::size_t from = 0);

bool contains_factor(const Word& w, const Word& factor);

/// Replace `length` letters of `w` at `pos` by `replacement`.
Word splice(const Word& w, std::size_t pos, std::size_t length, const Word& replacement);

/// Letter names must be non-empty runs of [A-Za-z0-9_'] and must not be a reserved
/// keyword of the pattern languages.
bool is_valid_letter_name(std::string_view name);

/// An ordered, duplicate-free list of named letters.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  Letter add(std::string name);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(Letter l) const { return names_.at(l); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Letter> find(std::string_view name) const;
  /// Throws Error naming the unknown letter.
  Letter at(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  /// True when every letter name is a single character, so words print unspaced.
  bool single_char() const noexcept;

  /// Words print as `cbab` over single-character alphabets, `c2 a b2` otherwise,
  /// and `ε` when empty.
  std::string format(const Word& w) const;

  /// Inverse of format(). Accepts whitespace-separated tokens, an unspaced run of
  /// single-character letters, or `ε` / `eps` / the empty string for ε.
  Word parse_word(std::string_view text) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
};

/// Per-letter counts of a word; `length` is |w| (the length homomorphism value).
struct ContentVector {
  std::vector<std::size_t> counts;
  std::size_t length = 0;

  bool operator==(const ContentVector&) const = default;
};

ContentVector content_vector(const Word& w, std::size_t alphabet_size);

/// Calls `f` on every word of exactly `length` letters over `alphabet_size`
/// letters, in lexicographic order of letter indices.
void for_each_word(std::size_t alphabet_size, std::size_t length,
                   const std::function<void(const Word&)>& f);

/// All words of length at most `max_length` in shortlex order.
std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_length);

/// Subset-restricted variant: words over `letters` only, shortlex by position in `letters`.
std::vector<Word> words_up_to(const std::vector<Letter>& letters, std::size_t max_length);

}  // namespace homog
