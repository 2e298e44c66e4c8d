#include "homog/automata/aho_corasick.hpp"

#include <deque>
#include <limits>

#include "homog/error.hpp"

namespace homog {

Dfa forbidden_factor_dfa(const std::vector<std::string>& symbols, const std::vector<Word>& factors) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t nsym = symbols.size();
  std::vector<std::vector<std::size_t>> go(1, std::vector<std::size_t>(nsym, kNone));
  std::vector<bool> terminal(1, false);
  for (const auto& f : factors) {
    if (f.empty()) {
      terminal[0] = true;  // ε is a factor of everything
      continue;
    }
    std::size_t node = 0;
    for (Letter l : f) {
      if (l >= nsym) throw Error("factor letter outside alphabet");
      if (go[node][l] == kNone) {
        go[node][l] = go.size();
        go.emplace_back(nsym, kNone);
        terminal.push_back(false);
      }
      node = go[node][l];
    }
    terminal[node] = true;
  }
  // BFS to fill failure links and complete the goto function.
  std::vector<std::size_t> fail(go.size(), 0);
  std::deque<std::size_t> queue;
  for (Letter x = 0; x < nsym; ++x) {
    if (go[0][x] == kNone) {
      go[0][x] = 0;
    } else {
      fail[go[0][x]] = 0;
      queue.push_back(go[0][x]);
    }
  }
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    if (terminal[fail[s]]) terminal[s] = true;
    for (Letter x = 0; x < nsym; ++x) {
      std::size_t t = go[s][x];
      if (t == kNone) {
        go[s][x] = go[fail[s]][x];
      } else {
        fail[t] = go[fail[s]][x];
        queue.push_back(t);
      }
    }
  }
  Dfa dfa(symbols);
  for (std::size_t s = 0; s < go.size(); ++s) dfa.add_state(!terminal[s]);
  State dead = dfa.add_state(false);
  for (std::size_t s = 0; s < go.size(); ++s) {
    for (Letter x = 0; x < nsym; ++x) {
      dfa.set_transition(static_cast<State>(s), x, terminal[s] ? dead : static_cast<State>(go[s][x]));
    }
  }
  dfa.set_start(terminal[0] ? dead : 0);
  return dfa;
}

}  // namespace homog
