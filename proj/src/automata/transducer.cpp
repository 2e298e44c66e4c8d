#include "homog/automata/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "homog/error.hpp"

namespace homog {

State Transducer::add_state(bool accepting) {
  accepting_.push_back(accepting);
  by_source_.emplace_back();
  return static_cast<State>(accepting_.size() - 1);
}

void Transducer::add_arc(State from, State to, std::optional<Letter> in, std::optional<Letter> out) {
  if (from >= num_states() || to >= num_states()) throw Error("transducer arc state out of range");
  if (in && *in >= in_.size()) throw Error("transducer input letter outside alphabet");
  if (out && *out >= out_.size()) throw Error("transducer output letter outside alphabet");
  by_source_[from].push_back(arcs_.size());
  arcs_.push_back({from, to, in, out});
}

void Transducer::add_label(State from, State to, const Word& in, const Word& out) {
  std::size_t n = std::max(in.size(), out.size());
  if (n == 0) {
    add_arc(from, to, std::nullopt, std::nullopt);
    return;
  }
  State cur = from;
  for (std::size_t i = 0; i < n; ++i) {
    State nxt = i + 1 == n ? to : add_state(false);
    std::optional<Letter> a = i < in.size() ? std::optional<Letter>(in[i]) : std::nullopt;
    std::optional<Letter> b = i < out.size() ? std::optional<Letter>(out[i]) : std::nullopt;
    add_arc(cur, nxt, a, b);
    cur = nxt;
  }
}

State Transducer::embed(const Transducer& other) {
  if (other.in_ != in_ || other.out_ != out_) throw Error("alphabet mismatch between transducers");
  auto offset = static_cast<State>(num_states());
  for (State s = 0; s < other.num_states(); ++s) add_state(other.accepting(s));
  for (const auto& a : other.arcs_) add_arc(offset + a.from, offset + a.to, a.in, a.out);
  return offset;
}

bool Transducer::accepts(const Word& u, const Word& v) const {
  using Config = std::tuple<State, std::size_t, std::size_t>;
  std::set<Config> seen;
  std::deque<Config> queue;
  auto push = [&](Config c) {
    if (seen.insert(c).second) queue.push_back(c);
  };
  push({start_, 0, 0});
  while (!queue.empty()) {
    auto [q, i, j] = queue.front();
    queue.pop_front();
    if (i == u.size() && j == v.size() && accepting(q)) return true;
    for (auto idx : by_source_[q]) {
      const Arc& a = arcs_[idx];
      if (a.in && (i >= u.size() || u[i] != *a.in)) continue;
      if (a.out && (j >= v.size() || v[j] != *a.out)) continue;
      push({a.to, i + (a.in ? 1 : 0), j + (a.out ? 1 : 0)});
    }
  }
  return false;
}

std::set<Word> Transducer::outputs(const Word& u, std::size_t max_out) const {
  using Config = std::tuple<State, std::size_t, Word>;
  std::set<Config> seen;
  std::deque<Config> queue;
  std::set<Word> result;
  auto push = [&](Config c) {
    if (seen.insert(c).second) queue.push_back(std::move(c));
  };
  push({start_, 0, Word{}});
  while (!queue.empty()) {
    auto [q, i, out] = queue.front();
    queue.pop_front();
    if (i == u.size() && accepting(q)) result.insert(out);
    for (auto idx : by_source_[q]) {
      const Arc& a = arcs_[idx];
      if (a.in && (i >= u.size() || u[i] != *a.in)) continue;
      if (a.out && out.size() >= max_out) continue;
      Word next = out;
      if (a.out) next.push_back(*a.out);
      push({a.to, i + (a.in ? 1 : 0), std::move(next)});
    }
  }
  return result;
}

Transducer identity_transducer(const Dfa& language) {
  Transducer t(language.symbols(), language.symbols());
  for (State s = 0; s < language.num_states(); ++s) t.add_state(language.accepting(s));
  for (State s = 0; s < language.num_states(); ++s) {
    for (Letter x = 0; x < language.num_symbols(); ++x) t.add_arc(s, language.next(s, x), x, x);
  }
  t.set_start(language.start());
  return trim(t);
}

Transducer inverse(const Transducer& t) {
  Transducer out(t.out_symbols(), t.in_symbols());
  for (State s = 0; s < t.num_states(); ++s) out.add_state(t.accepting(s));
  for (const auto& a : t.arcs()) out.add_arc(a.from, a.to, a.out, a.in);
  out.set_start(t.start());
  return out;
}

namespace {

// Generic product exploration: `State` tuples are interned into output states.
template <typename Key>
struct Interner {
  Transducer& out;
  std::map<Key, State> ids;
  std::deque<Key> queue;

  State get(const Key& k, bool accepting) {
    auto it = ids.find(k);
    if (it != ids.end()) return it->second;
    State s = out.add_state(accepting);
    ids.emplace(k, s);
    queue.push_back(k);
    return s;
  }
};

}  // namespace

Transducer compose(const Transducer& t1, const Transducer& t2) {
  if (t1.out_symbols() != t2.in_symbols()) throw Error("alphabet mismatch in composition");
  Transducer out(t1.in_symbols(), t2.out_symbols());
  Interner<std::pair<State, State>> in{out, {}, {}};
  auto acc = [&](State p, State q) { return t1.accepting(p) && t2.accepting(q); };
  out.set_start(in.get({t1.start(), t2.start()}, acc(t1.start(), t2.start())));
  while (!in.queue.empty()) {
    auto [p, q] = in.queue.front();
    in.queue.pop_front();
    State from = in.ids.at({p, q});
    for (auto i1 : t1.arcs_from(p)) {
      const Arc& a = t1.arcs()[i1];
      if (!a.out) {
        out.add_arc(from, in.get({a.to, q}, acc(a.to, q)), a.in, std::nullopt);
        continue;
      }
      for (auto i2 : t2.arcs_from(q)) {
        const Arc& b = t2.arcs()[i2];
        if (b.in && *b.in == *a.out) out.add_arc(from, in.get({a.to, b.to}, acc(a.to, b.to)), a.in, b.out);
      }
    }
    for (auto i2 : t2.arcs_from(q)) {
      const Arc& b = t2.arcs()[i2];
      if (!b.in) out.add_arc(from, in.get({p, b.to}, acc(p, b.to)), std::nullopt, b.out);
    }
  }
  return trim(out);
}

Transducer restrict(const Transducer& t, const Dfa& in_lang, const Dfa& out_lang) {
  if (in_lang.symbols() != t.in_symbols() || out_lang.symbols() != t.out_symbols()) {
    throw Error("alphabet mismatch in restriction");
  }
  Transducer out(t.in_symbols(), t.out_symbols());
  using Key = std::tuple<State, State, State>;
  Interner<Key> in{out, {}, {}};
  auto acc = [&](const Key& k) {
    return t.accepting(std::get<0>(k)) && in_lang.accepting(std::get<1>(k)) && out_lang.accepting(std::get<2>(k));
  };
  Key start{t.start(), in_lang.start(), out_lang.start()};
  out.set_start(in.get(start, acc(start)));
  while (!in.queue.empty()) {
    Key k = in.queue.front();
    in.queue.pop_front();
    State from = in.ids.at(k);
    auto [q, l, r] = k;
    for (auto idx : t.arcs_from(q)) {
      const Arc& a = t.arcs()[idx];
      Key nk{a.to, a.in ? in_lang.next(l, *a.in) : l, a.out ? out_lang.next(r, *a.out) : r};
      out.add_arc(from, in.get(nk, acc(nk)), a.in, a.out);
    }
  }
  return trim(out);
}

Transducer reverse(const Transducer& t) {
  Transducer out(t.in_symbols(), t.out_symbols());
  for (State s = 0; s < t.num_states(); ++s) out.add_state(s == t.start());
  State fresh = out.add_state(false);
  for (const auto& a : t.arcs()) out.add_arc(a.to, a.from, a.in, a.out);
  for (State s = 0; s < t.num_states(); ++s) {
    if (t.accepting(s)) out.add_arc(fresh, s, std::nullopt, std::nullopt);
  }
  out.set_start(fresh);
  return trim(out);
}

Transducer trim(const Transducer& t) {
  std::size_t n = t.num_states();
  std::vector<bool> fwd(n, false), bwd(n, false);
  std::vector<std::vector<State>> preds(n);
  for (const auto& a : t.arcs()) preds[a.to].push_back(a.from);
  std::vector<State> stack{t.start()};
  fwd[t.start()] = true;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (auto idx : t.arcs_from(s)) {
      State to = t.arcs()[idx].to;
      if (!fwd[to]) {
        fwd[to] = true;
        stack.push_back(to);
      }
    }
  }
  for (State s = 0; s < n; ++s) {
    if (t.accepting(s)) {
      bwd[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : preds[s]) {
      if (!bwd[p]) {
        bwd[p] = true;
        stack.push_back(p);
      }
    }
  }
  Transducer out(t.in_symbols(), t.out_symbols());
  std::vector<State> map(n, 0);
  std::vector<bool> keep(n, false);
  for (State s = 0; s < n; ++s) {
    keep[s] = (fwd[s] && bwd[s]) || s == t.start();
    if (keep[s]) map[s] = out.add_state(t.accepting(s));
  }
  for (const auto& a : t.arcs()) {
    if (keep[a.from] && keep[a.to] && fwd[a.from] && bwd[a.to]) out.add_arc(map[a.from], map[a.to], a.in, a.out);
  }
  out.set_start(map[t.start()]);
  return out;
}

Transducer unite(const Transducer& a, const Transducer& b) {
  Transducer out(a.in_symbols(), a.out_symbols());
  State s = out.add_state(false);
  State oa = out.embed(a);
  State ob = out.embed(b);
  out.add_arc(s, oa + a.start(), std::nullopt, std::nullopt);
  out.add_arc(s, ob + b.start(), std::nullopt, std::nullopt);
  out.set_start(s);
  return out;
}

Transducer concatenate(const Transducer& a, const Transducer& b) {
  Transducer out(a.in_symbols(), a.out_symbols());
  State oa = out.embed(a);
  State ob = out.embed(b);
  for (State s = 0; s < a.num_states(); ++s) {
    if (a.accepting(s)) {
      out.set_accepting(oa + s, false);
      out.add_arc(oa + s, ob + b.start(), std::nullopt, std::nullopt);
    }
  }
  out.set_start(oa + a.start());
  return out;
}

Transducer star(const Transducer& a) {
  Transducer out(a.in_symbols(), a.out_symbols());
  State s = out.add_state(true);
  State oa = out.embed(a);
  out.add_arc(s, oa + a.start(), std::nullopt, std::nullopt);
  for (State q = 0; q < a.num_states(); ++q) {
    if (a.accepting(q)) out.add_arc(oa + q, s, std::nullopt, std::nullopt);
  }
  out.set_start(s);
  return out;
}

Dfa image(const Transducer& t, const Dfa& language) {
  if (language.symbols() != t.in_symbols()) throw Error("alphabet mismatch in image");
  Nfa n(t.out_symbols());
  std::map<std::pair<State, State>, State> ids;
  std::deque<std::pair<State, State>> queue;
  auto get = [&](State q, State l) {
    auto it = ids.find({q, l});
    if (it != ids.end()) return it->second;
    State s = n.add_state(t.accepting(q) && language.accepting(l));
    ids.emplace(std::make_pair(q, l), s);
    queue.emplace_back(q, l);
    return s;
  };
  n.add_start(get(t.start(), language.start()));
  while (!queue.empty()) {
    auto [q, l] = queue.front();
    queue.pop_front();
    State from = ids.at({q, l});
    for (auto idx : t.arcs_from(q)) {
      const Arc& a = t.arcs()[idx];
      State to = get(a.to, a.in ? language.next(l, *a.in) : l);
      if (a.out) {
        n.add_transition(from, *a.out, to);
      } else {
        n.add_epsilon(from, to);
      }
    }
  }
  return minimize(determinize(n));
}

Dfa domain(const Transducer& t) {
  Nfa n(t.in_symbols());
  for (State s = 0; s < t.num_states(); ++s) n.add_state(t.accepting(s));
  for (const auto& a : t.arcs()) {
    if (a.in) {
      n.add_transition(a.from, *a.in, a.to);
    } else {
      n.add_epsilon(a.from, a.to);
    }
  }
  n.add_start(t.start());
  return minimize(determinize(n));
}

std::set<std::pair<Word, Word>> relation_pairs(const Transducer& t, std::size_t max_in, std::size_t max_out) {
  using Config = std::tuple<State, Word, Word>;
  std::set<Config> seen;
  std::deque<Config> queue;
  std::set<std::pair<Word, Word>> result;
  auto push = [&](Config c) {
    if (seen.insert(c).second) queue.push_back(std::move(c));
  };
  push({t.start(), Word{}, Word{}});
  while (!queue.empty()) {
    auto [q, u, v] = queue.front();
    queue.pop_front();
    if (t.accepting(q)) result.emplace(u, v);
    for (auto idx : t.arcs_from(q)) {
      const Arc& a = t.arcs()[idx];
      if (a.in && u.size() >= max_in) continue;
      if (a.out && v.size() >= max_out) continue;
      Word nu = u, nv = v;
      if (a.in) nu.push_back(*a.in);
      if (a.out) nv.push_back(*a.out);
      push({a.to, std::move(nu), std::move(nv)});
    }
  }
  return result;
}

}  // namespace homog
