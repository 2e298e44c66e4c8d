#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "homog/automata/aho_corasick.hpp"
#include "homog/automata/dfa.hpp"
#include "homog/automata/io.hpp"
#include "homog/automata/pattern.hpp"
#include "homog/automata/relation_expr.hpp"
#include "homog/automata/sync.hpp"
#include "homog/automata/transducer.hpp"
#include "homog/error.hpp"
#include "support.hpp"

using namespace homog;

namespace {

const Alphabet kAb({"a", "b"});
const Alphabet kAbc({"a", "b", "c"});

std::set<Word> lang(const Dfa& d, std::size_t n) {
  auto v = accepted_words(d, n);
  return {v.begin(), v.end()};
}

std::set<Word> filter(std::size_t k, std::size_t n, const std::function<bool(const Word&)>& pred) {
  std::set<Word> out;
  for (const auto& w : words_up_to(k, n))
    if (pred(w)) out.insert(w);
  return out;
}

std::size_t count(const Word& w, Letter l) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), l)); }

}  // namespace

TEST_CASE("patterns compile to the intended languages") {
  auto ends_ab = compile_pattern("any* a b", kAb);
  CHECK(lang(ends_ab, 6) == filter(2, 6, [](const Word& w) {
          return w.size() >= 2 && w[w.size() - 2] == 0 && w.back() == 1;
        }));
  auto nf = compile_pattern("[a b]* | c+ b* a*", kAbc);
  CHECK(lang(nf, 6) == filter(3, 6, [](const Word& w) {
          if (count(w, 2) == 0) return true;
          std::size_t i = 0;
          while (i < w.size() && w[i] == 2) ++i;
          if (i == 0) return false;
          while (i < w.size() && w[i] == 1) ++i;
          while (i < w.size() && w[i] == 0) ++i;
          return i == w.size();
        }));
  auto even_a = compile_pattern("(b* a b* a)* b*", kAb);
  CHECK(lang(even_a, 7) == filter(2, 7, [](const Word& w) { return count(w, 0) % 2 == 0; }));
  auto inter = compile_pattern("any* a any* & ~(any* b b any*) - eps", kAb);
  CHECK(lang(inter, 6) == filter(2, 6, [](const Word& w) {
          return count(w, 0) > 0 && !contains_factor(w, {1, 1});
        }));
  CHECK(is_empty(compile_pattern("empty", kAb)));
  CHECK(lang(compile_pattern("eps", kAb), 3) == std::set<Word>{Word{}});
  CHECK(lang(compile_pattern("a? b+", kAb), 3) ==
        std::set<Word>{{1}, {1, 1}, {1, 1, 1}, {0, 1}, {0, 1, 1}});
  PatternEnv env{{"E", compile_pattern("a a", kAb)}};
  CHECK(lang(compile_pattern("@E b", kAb, env), 4) == std::set<Word>{{0, 0, 1}});
  CHECK_THROWS_AS(compile_pattern("(a b", kAb), ParseError);
  CHECK_THROWS_AS(compile_pattern("a x", kAb), Error);
  CHECK_THROWS_AS(compile_pattern("@Nope", kAb), Error);
}

TEST_CASE("boolean operations agree with set operations") {
  auto x = compile_pattern("any* a b any*", kAb);
  auto y = compile_pattern("b any*", kAb);
  auto sx = lang(x, 6), sy = lang(y, 6), all = lang(Dfa::universal(kAb.names()), 6);
  std::set<Word> u, i, d, c;
  std::set_union(sx.begin(), sx.end(), sy.begin(), sy.end(), std::inserter(u, u.end()));
  std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::inserter(i, i.end()));
  std::set_difference(sx.begin(), sx.end(), sy.begin(), sy.end(), std::inserter(d, d.end()));
  std::set_difference(all.begin(), all.end(), sx.begin(), sx.end(), std::inserter(c, c.end()));
  CHECK(lang(unite(x, y), 6) == u);
  CHECK(lang(intersect(x, y), 6) == i);
  CHECK(lang(difference(x, y), 6) == d);
  CHECK(lang(complement(x), 6) == c);
  std::set<Word> rev;
  for (auto w : sx) rev.insert(reversed(w));
  CHECK(lang(reverse(x), 6) == rev);
  std::set<Word> cat;
  for (const auto& p : lang(word_dfa(kAb.names(), {0}), 6))
    for (const auto& q : sy)
      if (p.size() + q.size() <= 6) cat.insert(concat(p, q));
  CHECK(lang(concatenate(word_dfa(kAb.names(), {0}), y), 6) == cat);
  CHECK(lang(star(word_dfa(kAb.names(), {0, 1})), 6) == std::set<Word>{{}, {0, 1}, {0, 1, 0, 1}, {0, 1, 0, 1, 0, 1}});
}

TEST_CASE("minimization is canonical") {
  auto x = compile_pattern("(a | b)* a", kAb);
  auto y = compile_pattern("b* a (b* a | b+ a)*", kAb);
  CHECK(equivalent(x, y));
  CHECK(minimize(x).num_states() == 2u);
  auto mx = minimize(x), my = minimize(y);
  CHECK(write_dfa(mx) == write_dfa(my));
  auto z = compile_pattern("a*", kAb);
  auto dw = distinguishing_word(x, z);
  REQUIRE(dw);
  CHECK(dw->empty());
  CHECK(shortest_accepted(x) == Word{0});
}

TEST_CASE("NFA determinization") {
  Nfa n(kAb.names());
  auto s0 = n.add_state(), s1 = n.add_state(), s2 = n.add_state(true);
  n.add_start(s0);
  n.add_transition(s0, 0, s0);
  n.add_transition(s0, 1, s0);
  n.add_transition(s0, 0, s1);
  n.add_epsilon(s1, s2);
  n.add_transition(s2, 1, s2);
  auto d = determinize(n);
  CHECK(lang(d, 6) == lang(compile_pattern("any* a b*", kAb), 6));
}

TEST_CASE("property: Aho-Corasick agrees with the pattern compiler") {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    std::vector<Word> factors;
    std::string text = "~(any* (";
    std::size_t m = 1 + rng() % 4;
    for (std::size_t i = 0; i < m; ++i) {
      Word f(1 + rng() % 3);
      for (auto& l : f) l = static_cast<Letter>(rng() % 3);
      factors.push_back(f);
      text += (i ? " | " : "") + std::string("(") + kAbc.format(f) + ")";
    }
    text += ") any*)";
    auto a = forbidden_factor_dfa(kAbc.names(), factors);
    auto b = compile_pattern(text, kAbc);
    CHECK(equivalent(a, b));
  }
}

TEST_CASE("dfa text format round-trips") {
  auto d = compile_pattern("[a b]* | c+ b* a*", kAbc);
  auto back = read_dfa(write_dfa(d));
  CHECK(equivalent(d, back));
  auto partial = read_dfa("alphabet: a b\nstates: 2\nstart: 0\naccept: 1\ntrans: 0 a 1\n");
  CHECK(partial.num_states() == 3u);
  CHECK(lang(partial, 3) == std::set<Word>{{0}});
  CHECK_THROWS_AS(read_dfa("alphabet: a\nstates: 1\nstart: 4\n"), ParseError);
}

TEST_CASE("transducer operations match relation arithmetic") {
  auto t = parse_relation("(a:b | b:a)* eps:a", kAb);
  auto pairs = relation_pairs(t, 4, 5);
  for (const auto& [u, v] : pairs) {
    REQUIRE(v.size() == u.size() + 1);
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(v[i] == 1 - u[i]);
  }
  CHECK(pairs.size() == 31u);
  auto inv = relation_pairs(inverse(t), 5, 4);
  CHECK(inv.size() == pairs.size());
  for (const auto& [u, v] : pairs) CHECK(inv.count({v, u}) == 1u);

  auto tt = compose(t, t);
  for (const auto& [u, w] : relation_pairs(tt, 3, 5)) {
    bool via = false;
    for (const auto& v : t.outputs(u, 4)) via = via || t.accepts(v, w);
    CHECK(via);
  }
  CHECK(tt.accepts({0, 1}, {0, 1, 1, 0}));

  auto r = restrict(t, compile_pattern("a*", kAb), Dfa::universal(kAb.names()));
  CHECK(r.outputs({0, 0}, 5) == std::set<Word>{{1, 1, 0}});
  CHECK(r.outputs({1}, 5).empty());
  CHECK(equivalent(domain(t), Dfa::universal(kAb.names())));
  CHECK(equivalent(image(t, compile_pattern("a*", kAb)), compile_pattern("b* a", kAb)));
  auto rv = reverse(t);
  CHECK(rv.accepts({0, 1}, {0, 1, 0}));
  auto back = read_transducer(write_transducer(trim(t)));
  CHECK(relation_pairs(back, 4, 5) == pairs);
}

TEST_CASE("relation expression sets and identities") {
  auto t = parse_relation("id(a*) [a b]:c", kAbc);
  CHECK(t.outputs({0, 0, 1}, 4) == std::set<Word>{{0, 0, 2}});
  CHECK(t.outputs({0, 2}, 4).empty());
  CHECK_THROWS_AS(parse_relation("a:", kAbc), ParseError);
}

TEST_CASE("property: unpad inverts both paddings") {
  PairAlphabet pa(kAb.names(), kAb.names());
  CHECK(pa.size() == 8u);
  auto ws = words_up_to(2, 6);
  for (const auto& u : ws) {
    for (const auto& v : ws) {
      auto r = unpad_R(pa, delta_R(pa, u, v));
      auto l = unpad_L(pa, delta_L(pa, u, v));
      REQUIRE(r);
      REQUIRE(l);
      CHECK(*r == std::make_pair(u, v));
      CHECK(*l == std::make_pair(u, v));
      CHECK(delta_R(pa, u, v).size() == std::max(u.size(), v.size()));
    }
  }
  // $ followed by a letter on the same track is not a right padding
  Word bad{pa.encode(std::nullopt, 0), pa.encode(0, 0)};
  CHECK_FALSE(unpad_R(pa, bad));
}

TEST_CASE("bounded synchronization") {
  PairAlphabet pa(kAb.names(), kAb.names());
  auto t = parse_relation("(a:b | b:a)* eps:a", kAb);
  auto d = synchronize_bounded(t, 1);
  std::set<std::pair<Word, Word>> decoded;
  for (const auto& w : accepted_words(d, 6)) decoded.insert(*unpad_R(pa, w));
  CHECK(decoded == relation_pairs(t, 5, 6));
  auto dl = synchronize_bounded_left(t, 1);
  std::set<std::pair<Word, Word>> left;
  for (const auto& w : accepted_words(dl, 6)) left.insert(*unpad_L(pa, w));
  CHECK(left == decoded);

  auto far = parse_relation("eps:a eps:a", kAb);
  try {
    synchronize_bounded(far, 1);
    FAIL("expected LagViolation");
  } catch (const LagViolation& e) {
    CHECK(e.u().empty());
    CHECK(e.v() == Word{0, 0});
  }
  CHECK_NOTHROW(synchronize_bounded(far, 2));

  // unbounded length difference
  auto grow = parse_relation("(eps:a)*", kAb);
  CHECK_THROWS_AS(synchronize_bounded(grow, 3), LagViolation);

  // lag in the middle of a path that closes again
  auto shift = parse_relation("eps:a eps:a (b:b)* a:eps a:eps", kAb);
  auto ds = synchronize_bounded(shift, 0);
  std::set<std::pair<Word, Word>> got;
  for (const auto& w : accepted_words(ds, 6)) got.insert(*unpad_R(pa, w));
  CHECK(got == relation_pairs(shift, 6, 6));
}
