#include <algorithm>
#include <random>

#include "doctest.h"
#include "homog/core/presentation.hpp"
#include "homog/error.hpp"
#include "support.hpp"

using namespace homog;
using testing_support::load;

TEST_CASE("alphabet formats and parses words") {
  Alphabet abc({"a", "b", "c"});
  CHECK(abc.single_char());
  Word w = abc.parse_word("cbab");
  CHECK(w == Word{2, 1, 0, 1});
  CHECK(abc.format(w) == "cbab");
  CHECK(abc.parse_word("c b a b") == w);
  CHECK(abc.parse_word("eps").empty());
  CHECK(abc.parse_word("").empty());
  CHECK(abc.format({}) == "ε");
  CHECK_THROWS_AS(abc.parse_word("cbx"), Error);

  Alphabet multi({"a", "b1", "c2"});
  CHECK_FALSE(multi.single_char());
  CHECK(multi.format(multi.parse_word("c2 a b1")) == "c2 a b1");
  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
  CHECK_FALSE(is_valid_letter_name("eps"));
  CHECK_FALSE(is_valid_letter_name("a$"));
  CHECK(is_valid_letter_name("a'"));
}

TEST_CASE("word helpers") {
  CHECK(shortlex_less({1}, {0, 0}));
  CHECK(shortlex_less({0, 1}, {1, 0}));
  CHECK_FALSE(shortlex_less({0, 1}, {0, 1}));
  CHECK(splice({0, 1, 2}, 1, 1, {2, 2}) == Word{0, 2, 2, 2});
  CHECK(find_factor({0, 1, 0, 1}, {0, 1}, 1) == 2u);
  CHECK_FALSE(contains_factor({0, 0}, {1}));
  CHECK(power(2, 3) == Word{2, 2, 2});
  CHECK(words_up_to(2, 3).size() == 15u);
  auto ws = words_up_to(3, 4);
  CHECK(std::is_sorted(ws.begin(), ws.end(), shortlex_less));
  CHECK(words_up_to(std::vector<Letter>{2, 0}, 2).at(1) == Word{2});
  auto cv = content_vector({0, 2, 2}, 3);
  CHECK(cv.counts == std::vector<std::size_t>{1, 0, 2});
  CHECK(cv.length == 3u);
}

TEST_CASE("parse the nine-rule system") {
  auto p = load("eg31.pres");
  CHECK(p.alphabet.size() == 3u);
  CHECK(p.schemes.size() == 9u);
  CHECK(p.all_plain());
  auto rules = p.plain_rules();
  CHECK(p.alphabet.format(rules[0].first) == "cbab");
  CHECK(p.alphabet.format(rules[0].second) == "cbcb");
  auto c = classify(p);
  CHECK(c.homogeneous);
  CHECK_FALSE(c.multihomogeneous);
  CHECK(c.nary == 4u);
  CHECK(describe(c) == "homogeneous, 4-ary");
}

TEST_CASE("parse schemes with powers and word variables") {
  auto p = load("eg33s.pres");
  CHECK(p.schemes.size() == 9u);
  CHECK_FALSE(p.all_plain());
  const auto& s = p.schemes[5];
  CHECK(s.nat_vars == std::vector<std::string>{"k", "l"});
  auto c = classify(p);
  CHECK(c.homogeneous);
  CHECK_FALSE(c.nary.has_value());

  auto q = load("eg34bar.pres");
  const auto& w = q.schemes[2];
  REQUIRE(w.word_vars.size() == 1u);
  CHECK(w.word_vars[0].letters == std::vector<Letter>{0, 1});
  CHECK(classify(q).homogeneous);
}

TEST_CASE("serialize round-trips") {
  for (auto name : {"eg31.pres", "eg33s.pres", "eg34bar.pres", "eg47.pres"}) {
    auto p = load(name);
    CHECK(parse_presentation(serialize(p)) == p);
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto bad = [](const char* text) -> std::size_t {
    try {
      parse_presentation(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(bad("letters: a b\nrule: a -> \nrule: ab -> ba\n") == 0u);  // empty rhs is ε
  CHECK(bad("letters: a b\nrule: ab -> bx\n") == 2u);
  CHECK(bad("letters: a b\n\nrule: ab ba\n") == 3u);
  CHECK(bad("letters: a b\nscheme: a^k -> b  where j : nat\n") == 2u);
  CHECK(bad("letters: a b\nscheme: a -> b^k  where k : nat\n") == 2u);
  CHECK(bad("rule: ab -> ba\n") == 1u);
}

TEST_CASE("classification") {
  auto ba = parse_presentation("letters: a b\nrule: ab -> ba\n");
  auto c = classify(ba);
  CHECK(c == Classification{true, true, 2});
  auto nonh = parse_presentation("letters: a b\nrule: ab -> a\n");
  CHECK_FALSE(classify(nonh).homogeneous);
  auto mixed = parse_presentation("letters: a b\nrule: ab -> ba\nrule: aab -> bbb\n");
  auto m = classify(mixed);
  CHECK(m.homogeneous);
  CHECK_FALSE(m.multihomogeneous);
  CHECK_FALSE(m.nary.has_value());
  auto pw = parse_presentation("letters: a b\nscheme: a^k b -> b a^k  where k : nat\n");
  auto cp = classify(pw);
  CHECK(cp.multihomogeneous);
  CHECK_FALSE(cp.nary.has_value());
  auto uneven = parse_presentation("letters: a b\nscheme: a^k b -> b a^(k+1)  where k : nat\n");
  CHECK_FALSE(classify(uneven).homogeneous);
}

TEST_CASE("reversal presentation reverses every side") {
  auto p = load("eg31.pres");
  auto r = reverse_presentation(p);
  CHECK(reverse_presentation(r) == p);
  auto q = load("eg32.pres");
  CHECK(r.plain_rules() == q.plain_rules());
}

TEST_CASE("property: content vectors sum to length") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    Word w(rng() % 12);
    for (auto& l : w) l = static_cast<Letter>(rng() % 4);
    auto cv = content_vector(w, 4);
    std::size_t sum = 0;
    for (auto x : cv.counts) sum += x;
    CHECK(sum == w.size());
    CHECK(reversed(reversed(w)) == w);
  }
}
