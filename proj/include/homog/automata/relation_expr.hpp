#pragma once

#include <string_view>

#include "homog/automata/pattern.hpp"
#include "homog/automata/transducer.hpp"

namespace homog {

/// Rational relation expressions over one alphabet (input = output alphabet):
///
///     rel     := seq ('|' seq)*
///     seq     := postfix+
///     postfix := atom ('*' | '+' | '?')*
///     atom    := '(' rel ')' | 'id(' pattern ')' | side ':' side
///     side    := letter | 'eps' | 'any' | '[' letter+ ']'
///
/// `x:y` relates one letter (or ε) to one letter (or ε); sets give every
/// combination. `id(p)` is the identity on the language of pattern `p`, which may
/// use `@NAME` references from `env`. Example: `id(@L) eps:a` is {(u, ua) : u in L}.
Transducer parse_relation(std::string_view text, const Alphabet& alphabet, const PatternEnv& env = {});

}  // namespace homog
