#include "homog/automata/dfa.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "homog/error.hpp"

namespace homog {

namespace {
constexpr State kNone = std::numeric_limits<State>::max();
constexpr std::size_t kMaxStates = 2'000'000;
}  // namespace

Dfa::Dfa(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {}

Dfa Dfa::universal(std::vector<std::string> symbols) {
  Dfa d(std::move(symbols));
  State s = d.add_state(true);
  for (Letter x = 0; x < d.num_symbols(); ++x) d.set_transition(s, x, s);
  return d;
}

Dfa Dfa::empty_language(std::vector<std::string> symbols) {
  Dfa d(std::move(symbols));
  State s = d.add_state(false);
  for (Letter x = 0; x < d.num_symbols(); ++x) d.set_transition(s, x, s);
  return d;
}

State Dfa::add_state(bool accepting) {
  if (accepting_.size() >= kMaxStates) throw LimitExceeded("automaton state limit reached");
  accepting_.push_back(accepting);
  delta_.resize(delta_.size() + symbols_.size(), static_cast<State>(accepting_.size() - 1));
  return static_cast<State>(accepting_.size() - 1);
}

void Dfa::set_transition(State from, Letter symbol, State to) {
  if (symbol >= symbols_.size() || from >= num_states() || to >= num_states()) {
    throw Error("transition out of range");
  }
  delta_[from * symbols_.size() + symbol] = to;
}

State Dfa::run(const Word& w) const {
  State s = start_;
  for (Letter l : w) {
    if (l >= symbols_.size()) throw Error("symbol outside automaton alphabet");
    s = next(s, l);
  }
  return s;
}

State Nfa::add_state(bool accepting) {
  if (accepting_.size() >= kMaxStates) throw LimitExceeded("automaton state limit reached");
  accepting_.push_back(accepting);
  moves_.emplace_back();
  eps_.emplace_back();
  return static_cast<State>(accepting_.size() - 1);
}

void Nfa::add_transition(State from, Letter symbol, State to) {
  if (symbol >= symbols_.size()) throw Error("symbol outside automaton alphabet");
  moves_.at(from).emplace_back(symbol, to);
}

void Nfa::add_epsilon(State from, State to) { eps_.at(from).push_back(to); }

State Nfa::embed(const Dfa& dfa) {
  if (dfa.symbols() != symbols_) throw Error("alphabet mismatch");
  auto offset = static_cast<State>(num_states());
  for (State s = 0; s < dfa.num_states(); ++s) add_state(dfa.accepting(s));
  for (State s = 0; s < dfa.num_states(); ++s) {
    for (Letter x = 0; x < dfa.num_symbols(); ++x) add_transition(offset + s, x, offset + dfa.next(s, x));
  }
  return offset;
}

Dfa determinize(const Nfa& nfa) {
  auto closure = [&](std::vector<State> set) {
    std::vector<bool> in(nfa.num_states(), false);
    std::vector<State> stack;
    for (State s : set) {
      if (!in[s]) {
        in[s] = true;
        stack.push_back(s);
      }
    }
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (State t : nfa.epsilons(s)) {
        if (!in[t]) {
          in[t] = true;
          stack.push_back(t);
        }
      }
    }
    std::vector<State> out;
    for (State s = 0; s < nfa.num_states(); ++s) {
      if (in[s]) out.push_back(s);
    }
    return out;
  };
  Dfa dfa(nfa.symbols());
  std::map<std::vector<State>, State> ids;
  std::deque<std::vector<State>> queue;
  auto intern = [&](std::vector<State> set) {
    auto it = ids.find(set);
    if (it != ids.end()) return it->second;
    bool acc = std::any_of(set.begin(), set.end(), [&](State s) { return nfa.accepting(s); });
    State id = dfa.add_state(acc);
    ids.emplace(set, id);
    queue.push_back(std::move(set));
    return id;
  };
  dfa.set_start(intern(closure(nfa.starts())));
  std::size_t nsym = nfa.symbols().size();
  while (!queue.empty()) {
    auto set = std::move(queue.front());
    queue.pop_front();
    State from = ids.at(set);
    std::vector<std::vector<State>> targets(nsym);
    for (State s : set) {
      for (auto [x, t] : nfa.transitions(s)) targets[x].push_back(t);
    }
    for (Letter x = 0; x < nsym; ++x) dfa.set_transition(from, x, intern(closure(std::move(targets[x]))));
  }
  return dfa;
}

Dfa minimize(const Dfa& dfa) {
  std::size_t nsym = dfa.num_symbols();
  // Reachable states.
  std::vector<State> reach;
  std::vector<State> index(dfa.num_states(), kNone);
  reach.push_back(dfa.start());
  index[dfa.start()] = 0;
  for (std::size_t i = 0; i < reach.size(); ++i) {
    for (Letter x = 0; x < nsym; ++x) {
      State t = dfa.next(reach[i], x);
      if (index[t] == kNone) {
        index[t] = static_cast<State>(reach.size());
        reach.push_back(t);
      }
    }
  }
  // Moore refinement: class id by (class, class of successors).
  std::vector<State> cls(reach.size());
  for (std::size_t i = 0; i < reach.size(); ++i) cls[i] = dfa.accepting(reach[i]) ? 1 : 0;
  std::size_t count = 0;
  while (true) {
    std::map<std::vector<State>, State> sig;
    std::vector<State> next(reach.size());
    for (std::size_t i = 0; i < reach.size(); ++i) {
      std::vector<State> key;
      key.reserve(nsym + 1);
      key.push_back(cls[i]);
      for (Letter x = 0; x < nsym; ++x) key.push_back(cls[index[dfa.next(reach[i], x)]]);
      auto [it, inserted] = sig.emplace(std::move(key), static_cast<State>(sig.size()));
      next[i] = it->second;
    }
    cls = std::move(next);
    if (sig.size() == count) break;
    count = sig.size();
  }
  // Canonical numbering: BFS from the start class.
  std::vector<State> rep(count, kNone);
  for (std::size_t i = 0; i < reach.size(); ++i) {
    if (rep[cls[i]] == kNone) rep[cls[i]] = static_cast<State>(i);
  }
  Dfa out(dfa.symbols());
  std::vector<State> number(count, kNone);
  std::vector<State> order;
  number[cls[0]] = 0;
  order.push_back(cls[0]);
  for (std::size_t i = 0; i < order.size(); ++i) {
    State r = rep[order[i]];
    for (Letter x = 0; x < nsym; ++x) {
      State c = cls[index[dfa.next(reach[r], x)]];
      if (number[c] == kNone) {
        number[c] = static_cast<State>(order.size());
        order.push_back(c);
      }
    }
  }
  for (State c : order) out.add_state(dfa.accepting(reach[rep[c]]));
  for (std::size_t i = 0; i < order.size(); ++i) {
    State r = rep[order[i]];
    for (Letter x = 0; x < nsym; ++x) {
      out.set_transition(static_cast<State>(i), x, number[cls[index[dfa.next(reach[r], x)]]]);
    }
  }
  out.set_start(0);
  return out;
}

Dfa complement(const Dfa& dfa) {
  Dfa out = dfa;
  for (State s = 0; s < out.num_states(); ++s) out.set_accepting(s, !dfa.accepting(s));
  return out;
}

namespace {

template <typename Op>
Dfa product(const Dfa& a, const Dfa& b, Op op) {
  if (a.symbols() != b.symbols()) throw Error("alphabet mismatch in automaton product");
  Dfa out(a.symbols());
  std::map<std::pair<State, State>, State> ids;
  std::deque<std::pair<State, State>> queue;
  auto intern = [&](State p, State q) {
    auto [it, inserted] = ids.emplace(std::make_pair(p, q), 0);
    if (inserted) {
      it->second = out.add_state(op(a.accepting(p), b.accepting(q)));
      queue.emplace_back(p, q);
    }
    return it->second;
  };
  out.set_start(intern(a.start(), b.start()));
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    State from = ids.at({p, q});
    for (Letter x = 0; x < a.num_symbols(); ++x) out.set_transition(from, x, intern(a.next(p, x), b.next(q, x)));
  }
  return minimize(out);
}

}  // namespace

Dfa intersect(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x && y; });
}
Dfa unite(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x || y; });
}
Dfa difference(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x && !y; });
}

Dfa concatenate(const Dfa& a, const Dfa& b) {
  if (a.symbols() != b.symbols()) throw Error("alphabet mismatch in concatenation");
  Nfa n(a.symbols());
  State oa = n.embed(a);
  State ob = n.embed(b);
  for (State s = 0; s < a.num_states(); ++s) {
    if (a.accepting(s)) {
      n.set_accepting(oa + s, false);
      n.add_epsilon(oa + s, ob + b.start());
    }
  }
  n.add_start(oa + a.start());
  return minimize(determinize(n));
}

Dfa star(const Dfa& a) {
  Nfa n(a.symbols());
  State fresh = n.add_state(true);
  State oa = n.embed(a);
  n.add_epsilon(fresh, oa + a.start());
  for (State s = 0; s < a.num_states(); ++s) {
    if (a.accepting(s)) n.add_epsilon(oa + s, fresh);
  }
  n.add_start(fresh);
  return minimize(determinize(n));
}

Dfa reverse(const Dfa& a) {
  Nfa n(a.symbols());
  for (State s = 0; s < a.num_states(); ++s) n.add_state(s == a.start());
  for (State s = 0; s < a.num_states(); ++s) {
    for (Letter x = 0; x < a.num_symbols(); ++x) n.add_transition(a.next(s, x), x, s);
    if (a.accepting(s)) n.add_start(s);
  }
  return minimize(determinize(n));
}

std::optional<Word> shortest_accepted(const Dfa& dfa) {
  // BFS in symbol order yields the shortlex-least accepted word.
  std::vector<State> parent(dfa.num_states(), kNone);
  std::vector<Letter> via(dfa.num_states(), 0);
  std::vector<bool> seen(dfa.num_states(), false);
  std::deque<State> queue{dfa.start()};
  seen[dfa.start()] = true;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (dfa.accepting(s)) {
      Word w;
      for (State t = s; parent[t] != kNone; t = parent[t]) w.push_back(via[t]);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Letter x = 0; x < dfa.num_symbols(); ++x) {
      State t = dfa.next(s, x);
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = s;
        via[t] = x;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

bool is_empty(const Dfa& dfa) { return !shortest_accepted(dfa).has_value(); }

std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b) {
  return shortest_accepted(product(a, b, [](bool x, bool y) { return x != y; }));
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (a.symbols() != b.symbols()) return false;
  Dfa ma = minimize(a);
  Dfa mb = minimize(b);
  if (ma.num_states() != mb.num_states()) return false;
  for (State s = 0; s < ma.num_states(); ++s) {
    if (ma.accepting(s) != mb.accepting(s)) return false;
    for (Letter x = 0; x < ma.num_symbols(); ++x) {
      if (ma.next(s, x) != mb.next(s, x)) return false;
    }
  }
  return true;
}

std::vector<Word> accepted_words(const Dfa& dfa, std::size_t max_length) {
  // Only prefixes that can still reach acceptance within the remaining budget
  // are extended. dist[s] = length of the shortest accepted suffix from s.
  std::size_t n = dfa.num_states();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n, kInf);
  std::vector<std::vector<State>> preds(n);
  std::deque<State> queue;
  for (State s = 0; s < n; ++s) {
    for (Letter x = 0; x < dfa.num_symbols(); ++x) preds[dfa.next(s, x)].push_back(s);
    if (dfa.accepting(s)) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (State p : preds[s]) {
      if (dist[p] == kInf) {
        dist[p] = dist[s] + 1;
        queue.push_back(p);
      }
    }
  }
  std::vector<Word> out;
  std::vector<std::pair<Word, State>> layer;
  if (dist[dfa.start()] <= max_length) layer.emplace_back(Word{}, dfa.start());
  for (std::size_t len = 0; len <= max_length && !layer.empty(); ++len) {
    std::vector<std::pair<Word, State>> next;
    for (const auto& [w, s] : layer) {
      if (dfa.accepting(s)) out.push_back(w);
      if (len == max_length) continue;
      for (Letter x = 0; x < dfa.num_symbols(); ++x) {
        State t = dfa.next(s, x);
        if (dist[t] == kInf || len + 1 + dist[t] > max_length) continue;
        Word v = w;
        v.push_back(x);
        next.emplace_back(std::move(v), t);
      }
    }
    layer = std::move(next);
  }
  return out;
}

Dfa embed_symbols(const Dfa& dfa, const std::vector<std::string>& symbols) {
  Dfa out(symbols);
  for (State s = 0; s < dfa.num_states(); ++s) out.add_state(dfa.accepting(s));
  State sink = out.add_state(false);
  std::vector<std::optional<Letter>> map(symbols.size());
  for (Letter x = 0; x < symbols.size(); ++x) {
    auto it = std::find(dfa.symbols().begin(), dfa.symbols().end(), symbols[x]);
    if (it != dfa.symbols().end()) map[x] = static_cast<Letter>(it - dfa.symbols().begin());
  }
  for (const auto& name : dfa.symbols()) {
    if (std::find(symbols.begin(), symbols.end(), name) == symbols.end()) {
      throw Error("symbol '" + name + "' missing from target alphabet");
    }
  }
  for (State s = 0; s < dfa.num_states(); ++s) {
    for (Letter x = 0; x < symbols.size(); ++x) out.set_transition(s, x, map[x] ? dfa.next(s, *map[x]) : sink);
  }
  out.set_start(dfa.start());
  return minimize(out);
}

Dfa word_dfa(std::vector<std::string> symbols, const Word& w) {
  Dfa d(std::move(symbols));
  for (std::size_t i = 0; i <= w.size(); ++i) d.add_state(i == w.size());
  State sink = d.add_state(false);
  for (State s = 0; s < d.num_states(); ++s) {
    for (Letter x = 0; x < d.num_symbols(); ++x) {
      bool advance = s < w.size() && w[s] == x;
      d.set_transition(s, x, advance ? s + 1 : sink);
    }
  }
  d.set_start(0);
  return d;
}

}  // namespace homog
