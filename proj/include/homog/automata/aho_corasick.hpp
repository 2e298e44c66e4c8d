#pragma once

#include <string>
#include <vector>

#include "homog/automata/dfa.hpp"

namespace homog {

/// Words over `symbols` containing none of `factors` as a factor, built directly
/// from the Aho-Corasick goto/failure automaton (one state per trie node plus a
/// dead state). Independent of the pattern compiler.
Dfa forbidden_factor_dfa(const std::vector<std::string>& symbols, const std::vector<Word>& factors);

}  // namespace homog
