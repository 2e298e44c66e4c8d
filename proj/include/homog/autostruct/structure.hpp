#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homog/automata/dfa.hpp"
#include "homog/automata/transducer.hpp"
#include "homog/core/presentation.hpp"
#include "homog/oracle/oracle.hpp"

namespace homog {

/// Words containing no lhs instance of any scheme, for every value of the scheme
/// variables. A power atom a^(k+..+c) becomes a^c a*, a word variable over B
/// becomes B*. Throws Error if an exponent variable occurs in two lhs atoms (the
/// lhs set is then not regular in general).
Dfa irreducible_language(const Presentation& p);

/// Independent route for plain rules: the Aho-Corasick forbidden-factor automaton.
Dfa irreducible_language_aho_corasick(const Presentation& p);

/// std::nullopt stands for the empty word (the ε multiplier).
using Multiplier = std::optional<Letter>;

struct MultiplierSuite {
  Presentation presentation;
  Dfa acceptor;
  std::map<Multiplier, Transducer> right;
  std::map<Multiplier, Transducer> left;
  bool both_sides = false;
};

/// Suite manifest, one directive per line (`#` comments):
///
///     presentation: eg34.pres              # path relative to the manifest
///     let L = [a b]* | c+ b* a*            # named pattern, usable as @L
///     acceptor: @L
///     sides: both                          # or: right
///     right a: id(@L) eps:a                # relation expression
///     right eps: id(@L)
///     left b: file lb.trans                # or a transducer file
MultiplierSuite load_suite(const std::filesystem::path& path);
MultiplierSuite parse_suite(std::string_view text, const std::filesystem::path& base_dir);

enum class Side { Right, Left };

struct Counterexample {
  std::string check;  // "coverage", "multiplier", "sync"
  Side side = Side::Right;
  Multiplier letter;
  Word u;
  Word v;
  bool expected = false;
  bool got = false;
  std::string note;
};

struct StructureReport {
  std::size_t classes_checked = 0;
  std::size_t pairs_verified = 0;
  std::size_t sync_automata = 0;
  std::vector<Counterexample> counterexamples;

  bool ok() const noexcept { return counterexamples.empty(); }
};

/// Exhaustive check to `maxlen`:
///  (a) every oracle class of length <= maxlen meets the acceptor L;
///  (b) for each declared multiplier x and u in L with |u| <= maxlen, the outputs
///      of the transducer (restricted to L x L) are exactly the v in L with
///      v = ux (left: xu) in the monoid;
///  (c) each restricted multiplier synchronizes with lag bound k, and its δ_R
///      automaton (plus δ_L when both sides are declared) accepts exactly the
///      padded verified pairs.
StructureReport validate_structure(const Oracle& oracle, const MultiplierSuite& suite, std::size_t maxlen,
                                   std::size_t k = 1, std::size_t max_counterexamples = 20);

std::string format_counterexample(const Alphabet& alphabet, const Counterexample& c);

/// L1 ((L2 - ε)(L1 - ε))* L2 over the union of two disjoint symbol lists.
Dfa freeproduct_language(const Dfa& l1, const Dfa& l2);

/// All (u, v) with u, v in L, |u|, |v| <= maxlen and v = ux (or xu) in the monoid.
std::vector<std::pair<Word, Word>> bounded_multiplier_table(const Oracle& oracle, const Dfa& language,
                                                            Multiplier x, std::size_t maxlen,
                                                            Side side = Side::Right);

}  // namespace homog
