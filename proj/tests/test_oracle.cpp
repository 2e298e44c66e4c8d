#include <map>
#include <set>

#include "doctest.h"
#include "homog/automata/pattern.hpp"
#include "homog/error.hpp"
#include "homog/oracle/oracle.hpp"
#include "support.hpp"

using namespace homog;
using testing_support::all_words;
using testing_support::load;
using testing_support::naive_class;

TEST_CASE("classes agree with a naive closure") {
  auto p = load("eg34.pres");
  Oracle oracle(p);
  auto pairs = p.plain_rules();
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& w : all_words(3, n)) {
      auto cls = oracle.class_of(w);
      auto naive = naive_class(pairs, w);
      CHECK(cls->members.size() == naive.size());
      CHECK(std::set<Word>(cls->members.begin(), cls->members.end()) == naive);
      CHECK(cls->representative() == *std::min_element(naive.begin(), naive.end(), shortlex_less));
    }
  }
}

TEST_CASE("growth series matches a naive count") {
  auto p = load("eg31.pres");
  Oracle oracle(p);
  auto g = oracle.growth_series(6);
  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<std::set<Word>> classes;
    for (const auto& w : all_words(3, n)) classes.insert(naive_class(p.plain_rules(), w));
    CHECK(g[n] == classes.size());
    CHECK(oracle.classes_of_length(n).size() == classes.size());
  }
  CHECK(Oracle(load("eg34.pres")).growth_series(2) == std::vector<std::size_t>{1, 3, 7});
}

TEST_CASE("property: two-sided search agrees with class membership") {
  auto p = load("eg34.pres");
  Oracle search(p);
  Oracle full(p);
  auto words = all_words(3, 4);
  for (std::size_t i = 0; i < words.size(); i += 3) {
    for (std::size_t j = 0; j < words.size(); j += 5) {
      CHECK(search.are_equal(words[i], words[j]) == full.class_of(words[i])->contains(words[j]));
    }
  }
  CHECK_FALSE(search.are_equal({0}, {0, 0}));
}

TEST_CASE("schemes are instantiated per length") {
  auto q = load("eg34bar.pres");
  Oracle bar(q);
  Oracle fin(load("eg34.pres"));
  for (std::size_t n = 0; n <= 6; ++n) CHECK(bar.growth_series(6)[n] == fin.growth_series(6)[n]);
  auto w = q.alphabet.parse_word("cabab");
  CHECK(bar.are_equal(w, q.alphabet.parse_word("cbbbb")));
}

TEST_CASE("oracle refuses non-homogeneous input and honours the cap") {
  CHECK_THROWS_AS(Oracle(parse_presentation("letters: a b\nrule: ab -> a\n")), Error);
  Oracle free2(load("free2.pres"));
  CHECK(free2.class_of({0, 1, 1})->size() == 1u);
  Oracle tiny(parse_presentation("letters: a b\nrule: ab -> ba\n"), 10);
  CHECK_THROWS_AS(tiny.class_of({0, 0, 0, 1, 1, 1}), LimitExceeded);
}

TEST_CASE("normal form verification flags bad languages") {
  auto p = load("eg34.pres");
  Oracle oracle(p);
  auto good = compile_pattern("[a b]* | c+ b* a*", p.alphabet);
  CHECK(verify_normal_forms(oracle, good, 6).ok());
  auto bad = compile_pattern("[a b]* | c+ [a b]*", p.alphabet);
  auto report = verify_normal_forms(oracle, bad, 4);
  REQUIRE_FALSE(report.ok());
  const auto& v = report.violations.front();
  CHECK(v.accepted != 1u);
  CHECK(format_violation(p.alphabet, v).rfind("length=", 0) == 0);
  auto missing = compile_pattern("[a b]*", p.alphabet);
  auto r2 = verify_normal_forms(oracle, missing, 1);
  REQUIRE(r2.violations.size() == 1u);
  CHECK(r2.violations[0].accepted == 0u);
  CHECK(p.alphabet.format(r2.violations[0].representative) == "c");
}
