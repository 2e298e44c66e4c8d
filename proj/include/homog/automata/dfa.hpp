#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homog/core/word.hpp"

namespace homog {

using State = std::uint32_t;

/// Complete deterministic automaton over symbols 0..n-1 (named by `symbols`).
/// Words are sequences of symbol indices, so a Dfa built over a presentation's
/// alphabet reads that presentation's Words directly.
class Dfa {
 public:
  Dfa() = default;
  explicit Dfa(std::vector<std::string> symbols);

  /// One-state automata.
  static Dfa universal(std::vector<std::string> symbols);
  static Dfa empty_language(std::vector<std::string> symbols);

  State add_state(bool accepting = false);
  void set_transition(State from, Letter symbol, State to);
  void set_accepting(State s, bool accepting = true) { accepting_.at(s) = accepting; }
  void set_start(State s) { start_ = s; }

  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::size_t num_symbols() const noexcept { return symbols_.size(); }
  std::size_t num_states() const noexcept { return accepting_.size(); }
  State start() const noexcept { return start_; }
  bool accepting(State s) const { return accepting_.at(s); }
  State next(State s, Letter symbol) const { return delta_[s * symbols_.size() + symbol]; }

  State run(const Word& w) const;
  bool accepts(const Word& w) const { return accepting(run(w)); }

 private:
  std::vector<std::string> symbols_;
  std::vector<State> delta_;
  std::vector<bool> accepting_;
  State start_ = 0;
};

/// Nondeterministic automaton with ε-moves.
class Nfa {
 public:
  Nfa() = default;
  explicit Nfa(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {}

  State add_state(bool accepting = false);
  void add_transition(State from, Letter symbol, State to);
  void add_epsilon(State from, State to);
  void add_start(State s) { starts_.push_back(s); }
  void set_accepting(State s, bool accepting = true) { accepting_.at(s) = accepting; }

  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::size_t num_states() const noexcept { return accepting_.size(); }
  const std::vector<State>& starts() const noexcept { return starts_; }
  bool accepting(State s) const { return accepting_.at(s); }
  const std::vector<std::pair<Letter, State>>& transitions(State s) const { return moves_.at(s); }
  const std::vector<State>& epsilons(State s) const { return eps_.at(s); }

  /// Copies `dfa` into this automaton (same symbols), returning the state offset.
  State embed(const Dfa& dfa);

 private:
  std::vector<std::string> symbols_;
  std::vector<std::vector<std::pair<Letter, State>>> moves_;
  std::vector<std::vector<State>> eps_;
  std::vector<bool> accepting_;
  std::vector<State> starts_;
};

/// Subset construction (reachable subsets only).
Dfa determinize(const Nfa& nfa);

/// Moore partition refinement on the reachable part; states are renumbered in
/// BFS order from the start, visiting symbols in index order, so two minimal
/// automata for the same language are identical.
Dfa minimize(const Dfa& dfa);

Dfa complement(const Dfa& dfa);
Dfa intersect(const Dfa& a, const Dfa& b);
Dfa unite(const Dfa& a, const Dfa& b);
Dfa difference(const Dfa& a, const Dfa& b);
Dfa concatenate(const Dfa& a, const Dfa& b);
Dfa star(const Dfa& a);
Dfa reverse(const Dfa& a);

bool is_empty(const Dfa& dfa);
bool equivalent(const Dfa& a, const Dfa& b);
/// Shortlex-least word in the symmetric difference, if any.
std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b);
std::optional<Word> shortest_accepted(const Dfa& dfa);

/// Accepted words of length <= max_length in shortlex order.
std::vector<Word> accepted_words(const Dfa& dfa, std::size_t max_length);

/// The same language over a larger symbol list (matched by name); words using
/// symbols outside the original list are rejected.
Dfa embed_symbols(const Dfa& dfa, const std::vector<std::string>& symbols);

/// Language {w}.
Dfa word_dfa(std::vector<std::string> symbols, const Word& w);

}  // namespace homog
