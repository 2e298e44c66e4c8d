#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "homog/automata/dfa.hpp"

namespace homog {

/// Regular expression tree over a fixed symbol list.
struct Pattern {
  enum class Kind {
    Empty,       // no words
    Epsilon,     // {ε}
    Symbols,     // one letter from `symbols`
    Concat,
    Union,
    Intersect,
    Difference,  // first minus second
    Star,
    Plus,
    Optional,
    Complement,  // relative to A*
    Fixed,       // a precompiled language (`@NAME` references)
  };

  Kind kind = Kind::Empty;
  std::vector<Letter> symbols;
  std::vector<std::shared_ptr<const Pattern>> children;
  std::shared_ptr<const Dfa> fixed;
};

using PatternPtr = std::shared_ptr<const Pattern>;

namespace pat {
PatternPtr empty();
PatternPtr eps();
PatternPtr letter(Letter l);
PatternPtr any_of(std::vector<Letter> letters);
PatternPtr word(const Word& w);
PatternPtr concat(std::vector<PatternPtr> parts);
PatternPtr alt(std::vector<PatternPtr> parts);
PatternPtr intersect(PatternPtr a, PatternPtr b);
PatternPtr minus(PatternPtr a, PatternPtr b);
PatternPtr star(PatternPtr p);
PatternPtr plus(PatternPtr p);
PatternPtr opt(PatternPtr p);
PatternPtr complement(PatternPtr p);
PatternPtr fixed(Dfa dfa);
}  // namespace pat

/// Named languages usable as `@NAME` inside pattern text.
using PatternEnv = std::map<std::string, Dfa>;

/// Pattern text grammar, loosest binding first:
///
///     union   := inter ('|' inter)*
///     inter   := concat (('&' | '-') concat)*
///     concat  := unary+
///     unary   := '~' unary | postfix
///     postfix := atom ('*' | '+' | '?')*
///     atom    := letter | 'eps' | 'empty' | 'any' | '[' letter+ ']' | '(' union ')' | '@' NAME
///
/// Letters are whitespace-separated names; over an alphabet of one-character
/// names an unspaced run such as `cbab` is read letter by letter.
PatternPtr parse_pattern(std::string_view text, const Alphabet& alphabet, const PatternEnv& env = {});

/// Minimal Dfa over the alphabet's names.
Dfa compile(const Pattern& pattern, const std::vector<std::string>& symbols);

/// parse_pattern followed by compile.
Dfa compile_pattern(std::string_view text, const Alphabet& alphabet, const PatternEnv& env = {});

}  // namespace homog
