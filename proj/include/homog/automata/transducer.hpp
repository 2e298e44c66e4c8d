#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "homog/automata/dfa.hpp"

namespace homog {

/// One transducer move: reads at most one input letter, writes at most one
/// output letter. Longer (Word, Word) labels are split into chains of these.
struct Arc {
  State from = 0;
  State to = 0;
  std::optional<Letter> in;
  std::optional<Letter> out;
};

class Transducer {
 public:
  Transducer() = default;
  Transducer(std::vector<std::string> in_symbols, std::vector<std::string> out_symbols)
      : in_(std::move(in_symbols)), out_(std::move(out_symbols)) {}

  State add_state(bool accepting = false);
  void add_arc(State from, State to, std::optional<Letter> in, std::optional<Letter> out);
  /// Adds a path from `from` to `to` reading `in` and writing `out`.
  void add_label(State from, State to, const Word& in, const Word& out);
  void set_start(State s) { start_ = s; }
  void set_accepting(State s, bool accepting = true) { accepting_.at(s) = accepting; }

  const std::vector<std::string>& in_symbols() const noexcept { return in_; }
  const std::vector<std::string>& out_symbols() const noexcept { return out_; }
  std::size_t num_states() const noexcept { return accepting_.size(); }
  State start() const noexcept { return start_; }
  bool accepting(State s) const { return accepting_.at(s); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const std::vector<std::size_t>& arcs_from(State s) const { return by_source_.at(s); }

  /// Copies `other`'s states and arcs (same alphabets); returns the state offset.
  State embed(const Transducer& other);

  /// Membership of (u, v) in the realized relation.
  bool accepts(const Word& u, const Word& v) const;
  /// All v with (u, v) in the relation and |v| <= max_out.
  std::set<Word> outputs(const Word& u, std::size_t max_out) const;

 private:
  std::vector<std::string> in_;
  std::vector<std::string> out_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> by_source_;
  std::vector<bool> accepting_;
  State start_ = 0;
};

/// {(u, u) : u in L}.
Transducer identity_transducer(const Dfa& language);

Transducer inverse(const Transducer& t);
/// {(u, w) : (u, v) in t1, (v, w) in t2}.
Transducer compose(const Transducer& t1, const Transducer& t2);
/// t restricted to inputs in `in` and outputs in `out`.
Transducer restrict(const Transducer& t, const Dfa& in, const Dfa& out);
/// {(u^rev, v^rev) : (u, v) in t}.
Transducer reverse(const Transducer& t);
/// Drops states that are not both reachable and co-reachable; keeps at least the start.
Transducer trim(const Transducer& t);

Transducer unite(const Transducer& a, const Transducer& b);
Transducer concatenate(const Transducer& a, const Transducer& b);
Transducer star(const Transducer& a);

/// {v : (u, v) in t, u in language}.
Dfa image(const Transducer& t, const Dfa& language);
/// {u : (u, v) in t for some v}.
Dfa domain(const Transducer& t);

/// Every pair of the relation with |u| <= max_in and |v| <= max_out.
std::set<std::pair<Word, Word>> relation_pairs(const Transducer& t, std::size_t max_in, std::size_t max_out);

}  // namespace homog
