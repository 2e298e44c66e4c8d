#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "homog/automata/dfa.hpp"
#include "homog/automata/transducer.hpp"

namespace homog {

/// Automaton text format:
///
///     alphabet: a b c        # pair alphabets use names like a|b and a|$
///     states: 3
///     start: 0
///     accept: 2
///     trans: 0 a 1
///
/// Missing transitions go to an added rejecting sink.
std::string write_dfa(const Dfa& dfa);
Dfa read_dfa(std::string_view text);

/// Transducer text format: as above, with `input:` / `output:` lines (or one
/// `alphabet:` line for both) and arcs `trans: <from> <to> <in word> / <out word>`,
/// where either word may be `eps`.
std::string write_transducer(const Transducer& t);
Transducer read_transducer(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace homog
