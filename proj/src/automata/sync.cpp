#include "homog/automata/sync.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace homog {

PairAlphabet::PairAlphabet(std::vector<std::string> left, std::vector<std::string> right)
    : m_(left.size()), n_(right.size()) {
  for (std::size_t x = 0; x <= m_; ++x) {
    for (std::size_t y = 0; y <= n_; ++y) {
      if (x == m_ && y == n_) continue;
      names_.push_back((x == m_ ? std::string("$") : left[x]) + "|" + (y == n_ ? std::string("$") : right[y]));
    }
  }
}

Letter PairAlphabet::encode(std::optional<Letter> x, std::optional<Letter> y) const {
  std::size_t a = x ? *x : m_;
  std::size_t b = y ? *y : n_;
  if (a > m_ || b > n_ || (a == m_ && b == n_)) throw Error("invalid pair symbol");
  return static_cast<Letter>(a * (n_ + 1) + b);
}

std::pair<std::optional<Letter>, std::optional<Letter>> PairAlphabet::decode(Letter symbol) const {
  std::size_t a = symbol / (n_ + 1);
  std::size_t b = symbol % (n_ + 1);
  if (a > m_ || (a == m_ && b == n_)) throw Error("invalid pair symbol");
  return {a == m_ ? std::nullopt : std::optional<Letter>(static_cast<Letter>(a)),
          b == n_ ? std::nullopt : std::optional<Letter>(static_cast<Letter>(b))};
}

Word delta_R(const PairAlphabet& pa, const Word& u, const Word& v) {
  std::size_t n = std::max(u.size(), v.size());
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(pa.encode(i < u.size() ? std::optional<Letter>(u[i]) : std::nullopt,
                            i < v.size() ? std::optional<Letter>(v[i]) : std::nullopt));
  }
  return out;
}

Word delta_L(const PairAlphabet& pa, const Word& u, const Word& v) {
  std::size_t n = std::max(u.size(), v.size());
  std::size_t pu = n - u.size();
  std::size_t pv = n - v.size();
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(pa.encode(i >= pu ? std::optional<Letter>(u[i - pu]) : std::nullopt,
                            i >= pv ? std::optional<Letter>(v[i - pv]) : std::nullopt));
  }
  return out;
}

std::optional<std::pair<Word, Word>> unpad_R(const PairAlphabet& pa, const Word& padded) {
  Word u, v;
  bool u_done = false, v_done = false;
  for (Letter s : padded) {
    auto [x, y] = pa.decode(s);
    if (x) {
      if (u_done) return std::nullopt;
      u.push_back(*x);
    } else {
      u_done = true;
    }
    if (y) {
      if (v_done) return std::nullopt;
      v.push_back(*y);
    } else {
      v_done = true;
    }
  }
  return std::make_pair(std::move(u), std::move(v));
}

std::optional<std::pair<Word, Word>> unpad_L(const PairAlphabet& pa, const Word& padded) {
  auto r = unpad_R(pa, reversed(padded));
  if (!r) return std::nullopt;
  return std::make_pair(reversed(r->first), reversed(r->second));
}

namespace {

// Configuration of the synchronizing construction.
struct Config {
  bool flushing = false;
  State q = 0;        // transducer state (unused while flushing)
  Word buffer;        // surplus letters of one track
  bool output_side = false;  // buffer holds output letters

  bool operator<(const Config& o) const {
    return std::tie(flushing, q, buffer, output_side) < std::tie(o.flushing, o.q, o.buffer, o.output_side);
  }
};

// Back-pointer for witness reconstruction: the arc taken into a configuration.
struct Parent {
  State from = 0;
  std::optional<Letter> in;
  std::optional<Letter> out;
  bool root = true;
};

}  // namespace

Dfa synchronize_bounded(const Transducer& input, std::size_t k) {
  Transducer t = trim(input);
  PairAlphabet pa(t.in_symbols(), t.out_symbols());
  const std::size_t capacity = k + 2 * t.num_states();

  Nfa nfa(pa.names());
  std::map<Config, State> ids;
  std::vector<Config> configs;
  std::vector<Parent> parents;
  std::deque<State> queue;

  auto intern = [&](Config c, Parent p) {
    auto it = ids.find(c);
    if (it != ids.end()) return it->second;
    bool acc = (c.flushing || t.accepting(c.q)) && c.buffer.empty();
    State s = nfa.add_state(acc);
    ids.emplace(c, s);
    configs.push_back(std::move(c));
    parents.push_back(p);
    queue.push_back(s);
    return s;
  };

  auto witness = [&](State s) {
    Word u, v;
    for (State cur = s; !parents[cur].root; cur = parents[cur].from) {
      if (parents[cur].in) u.push_back(*parents[cur].in);
      if (parents[cur].out) v.push_back(*parents[cur].out);
    }
    std::reverse(u.begin(), u.end());
    std::reverse(v.begin(), v.end());
    // Complete along a shortest path to acceptance in t.
    State q = configs[s].q;
    std::vector<std::optional<std::size_t>> via(t.num_states());
    std::vector<bool> seen(t.num_states(), false);
    std::deque<State> bfs{q};
    seen[q] = true;
    State goal = q;
    while (!bfs.empty()) {
      State x = bfs.front();
      bfs.pop_front();
      if (t.accepting(x)) {
        goal = x;
        break;
      }
      for (auto idx : t.arcs_from(x)) {
        State y = t.arcs()[idx].to;
        if (!seen[y]) {
          seen[y] = true;
          via[y] = idx;
          bfs.push_back(y);
        }
      }
    }
    std::vector<std::size_t> tail;
    for (State x = goal; x != q && via[x]; x = t.arcs()[*via[x]].from) tail.push_back(*via[x]);
    std::reverse(tail.begin(), tail.end());
    for (auto idx : tail) {
      if (t.arcs()[idx].in) u.push_back(*t.arcs()[idx].in);
      if (t.arcs()[idx].out) v.push_back(*t.arcs()[idx].out);
    }
    return std::make_pair(u, v);
  };
  auto violation = [&](State s) {
    auto [u, v] = witness(s);
    throw LagViolation("relation pair exceeds length difference " + std::to_string(k), u, v);
  };

  nfa.add_start(intern(Config{false, t.start(), {}, false}, Parent{}));
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    Config c = configs[s];
    if (c.flushing) {
      if (c.buffer.empty()) continue;
      Letter sym = c.output_side ? pa.encode(std::nullopt, c.buffer.front()) : pa.encode(c.buffer.front(), std::nullopt);
      Config next{true, 0, Word(c.buffer.begin() + 1, c.buffer.end()), c.output_side};
      nfa.add_transition(s, sym, intern(std::move(next), Parent{s, std::nullopt, std::nullopt, false}));
      continue;
    }
    if (t.accepting(c.q) && !c.buffer.empty()) {
      if (c.buffer.size() > k) violation(s);
      nfa.add_epsilon(s, intern(Config{true, 0, c.buffer, c.output_side}, Parent{s, std::nullopt, std::nullopt, false}));
    }
    for (auto idx : t.arcs_from(c.q)) {
      const Arc& a = t.arcs()[idx];
      Word in_buf = c.output_side ? Word{} : c.buffer;
      Word out_buf = c.output_side ? c.buffer : Word{};
      if (a.in) in_buf.push_back(*a.in);
      if (a.out) out_buf.push_back(*a.out);
      std::optional<Letter> emitted;
      if (!in_buf.empty() && !out_buf.empty()) {
        emitted = pa.encode(in_buf.front(), out_buf.front());
        in_buf.erase(in_buf.begin());
        out_buf.erase(out_buf.begin());
      }
      Config next;
      next.q = a.to;
      next.output_side = !out_buf.empty();
      next.buffer = next.output_side ? std::move(out_buf) : std::move(in_buf);
      bool overflow = next.buffer.size() > capacity;
      State to = intern(std::move(next), Parent{s, a.in, a.out, false});
      if (overflow) violation(to);
      if (emitted) {
        nfa.add_transition(s, *emitted, to);
      } else {
        nfa.add_epsilon(s, to);
      }
    }
  }
  return minimize(determinize(nfa));
}

Dfa synchronize_bounded_left(const Transducer& t, std::size_t k) {
  try {
    return reverse(synchronize_bounded(reverse(t), k));
  } catch (const LagViolation& e) {
    throw LagViolation(e.what(), reversed(e.u()), reversed(e.v()));
  }
}

}  // namespace homog
