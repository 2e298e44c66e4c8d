#include <random>

#include "doctest.h"
#include "homog/construct/construct.hpp"
#include "homog/error.hpp"
#include "homog/rewrite/critical.hpp"
#include "homog/rewrite/rules.hpp"
#include "support.hpp"

using namespace homog;
using testing_support::load;

namespace {

std::size_t count(const Word& w, Letter l) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), l)); }

}  // namespace

TEST_CASE("free product renames clashes") {
  auto p = load("eg31.pres");
  auto q = load("eg34.pres");
  auto fp = free_product(p, q);
  CHECK(fp.presentation.alphabet.names() == std::vector<std::string>{"a", "b", "c", "a'", "b'", "c'"});
  CHECK(fp.presentation.schemes.size() == 12u);
  CHECK(fp.renamed.size() == 3u);
  CHECK(fp.presentation == load("eg47.pres"));

  auto none = parse_presentation("letters:\n");
  auto same = free_product(p, none);
  CHECK(same.presentation == p);
  CHECK(same.renamed.empty());

  auto r = rename_letters(q, {{"c", "z"}});
  CHECK(r.alphabet.names() == std::vector<std::string>{"a", "b", "z"});
  CHECK(r.plain_rules() == q.plain_rules());
}

TEST_CASE("union of disjoint complete systems is complete") {
  auto fp = free_product(load("eg31.pres"), load("eg32.pres")).presentation;
  auto rules = rules_from_pairs(fp.plain_rules());
  auto report = check_local_confluence(rules);
  CHECK(report.locally_confluent());
  CHECK(report.pairs.size() == 8u);
}

TEST_CASE("n-ary extension of a commutation") {
  auto p = parse_presentation("letters: a b\nrule: ab -> ba\n");
  auto n3 = nary_extension(p, 3);
  std::set<std::pair<Word, Word>> got;
  for (const auto& r : n3.plain_rules()) got.insert(r);
  auto w = [&](const char* s) { return p.alphabet.parse_word(s); };
  CHECK(got == std::set<std::pair<Word, Word>>{
                   {w("aab"), w("aba")}, {w("bab"), w("bba")}, {w("aba"), w("baa")}, {w("abb"), w("bab")}});
  CHECK(classify(n3) == Classification{true, true, 3});
  CHECK_THROWS_AS(nary_extension(p, 1), Error);
  CHECK_THROWS_AS(nary_extension(load("eg34bar.pres"), 5), Error);
  auto e31 = load("eg31.pres");
  CHECK(nary_extension(e31, 4).plain_rules() == e31.plain_rules());
}

TEST_CASE("property: n-ary extension keeps homogeneity and the congruence") {
  for (auto name : {"eg31.pres", "eg34.pres", "eg33.pres"}) {
    auto p = load(name);
    Oracle op(p);
    auto ext = nary_extension(p, 4);
    auto cp = classify(p), ce = classify(ext);
    CHECK(ce.homogeneous);
    CHECK(ce.multihomogeneous == cp.multihomogeneous);
    CHECK(ce.nary == 4u);
    for (const auto& [l, r] : ext.plain_rules()) CHECK(op.are_equal(l, r));
  }
  auto p = load("eg34.pres");
  Oracle a(p), b(nary_extension(p, 3));
  CHECK(compare_congruences(a, b, 3, 6).empty());
  // below n the extension has no rules, so classes split
  CHECK_FALSE(compare_congruences(a, b, 2, 2).empty());
}

TEST_CASE("phi map") {
  auto phi = PhiMap::standard(3);
  auto xy = PhiMap::target_alphabet();
  CHECK(xy.format(phi.image(0)) == "xxyxyyy");
  CHECK(xy.format(phi.image(2)) == "xxyyyxy");
  CHECK(phi.is_code());
  CHECK(phi.apply({0, 1}).size() == 2u * 7u);
  CHECK_FALSE(PhiMap({{0, 1}, {0}, {1}}).is_code());
  CHECK_FALSE(PhiMap({{0, 1}, {0, 1}}).is_code());
  CHECK(PhiMap({{0}, {0, 1}}).is_code());
  CHECK_FALSE(PhiMap({{0}, {0, 1}, {1, 0}}).is_code());
}

TEST_CASE("property: phi images have fixed content") {
  std::mt19937 rng(5);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto phi = PhiMap::standard(n);
    for (int t = 0; t < 20; ++t) {
      Word u(rng() % 6);
      for (auto& l : u) l = static_cast<Letter>(rng() % n);
      auto img = phi.apply(u);
      CHECK(count(img, 0) == 3 * u.size());
      CHECK(count(img, 1) == (n + 1) * u.size());
    }
  }
}

TEST_CASE("phi presentation is multihomogeneous") {
  auto pp = phi_presentation(load("eg31.pres"));
  CHECK(pp.presentation.schemes.size() == 9u);
  CHECK(classify(pp.presentation).multihomogeneous);
  CHECK_THROWS_AS(phi_presentation(load("eg34bar.pres")), Error);
}

TEST_CASE("code decomposition examples") {
  auto phi = PhiMap::standard(3);
  auto xy = PhiMap::target_alphabet();
  Word a1 = phi.image(0);
  auto d = code_decompose(a1, phi);
  REQUIRE(d.blocks.size() == 1u);
  CHECK(d.blocks[0] == Word{0});
  CHECK(d.gaps == std::vector<Word>{{}, {}});

  auto e = code_decompose(concat({1}, a1, {0}), phi);
  REQUIRE(e.blocks.size() == 1u);
  CHECK(e.gaps == std::vector<Word>{{1}, {0}});

  auto f = code_decompose(xy.parse_word("xyx"), phi);
  CHECK(f.blocks.empty());
  CHECK(f.gaps == std::vector<Word>{xy.parse_word("xyx")});

  auto g = code_decompose(concat(phi.apply({2, 0}), xy.parse_word("yy"), phi.image(1)), phi);
  REQUIRE(g.blocks.size() == 2u);
  CHECK(g.blocks[0] == Word{2, 0});
  CHECK(g.blocks[1] == Word{1});
}

TEST_CASE("property: code decomposition recombines") {
  std::mt19937 rng(9);
  for (std::size_t n = 2; n <= 4; ++n) {
    auto phi = PhiMap::standard(n);
    for (int t = 0; t < 100; ++t) {
      Word w;
      std::size_t parts = rng() % 5;
      for (std::size_t i = 0; i < parts; ++i) {
        if (rng() % 2) {
          auto img = phi.image(static_cast<Letter>(rng() % n));
          w.insert(w.end(), img.begin(), img.end());
        } else {
          for (std::size_t j = rng() % 4; j > 0; --j) w.push_back(static_cast<Letter>(rng() % 2));
        }
      }
      auto d = code_decompose(w, phi);
      CHECK(d.recombine(phi) == w);
      CHECK(d.gaps.size() == d.blocks.size() + 1);
      for (const auto& b : d.blocks) CHECK_FALSE(b.empty());
    }
  }
}

TEST_CASE("embedding checks") {
  CHECK(verify_embedding(load("eg34.pres"), 3).ok());
  CHECK(verify_embedding(load("free2.pres"), 3).ok());
  auto broken = PhiMap({{0, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1}});
  auto r = verify_embedding(load("free2.pres"), broken, 2);
  CHECK_FALSE(r.ok());
}

TEST_CASE("combined presentation") {
  auto p = load("eg31.pres");
  auto c = combined_presentation(p, {"a", "b", "c"});
  CHECK(c.q_rules == 9u);
  CHECK(c.presentation.schemes.size() == 12u);
  CHECK(c.presentation.alphabet.names() == std::vector<std::string>{"x", "y", "a", "b", "c"});
  RuleSet e;
  for (std::size_t i = c.q_rules; i < c.presentation.schemes.size(); ++i) {
    e.push_back(rules_from_pairs({{c.presentation.schemes[i].plain_lhs(), c.presentation.schemes[i].plain_rhs()}})[0]);
  }
  CHECK(critical_pairs(e).empty());
  CHECK_THROWS_AS(combined_presentation(p, {"a", "z"}), Error);
  CHECK_THROWS_AS(combined_presentation(parse_presentation("letters: x a\n"), {"a"}), Error);
}

TEST_CASE("quasi-commutation on small words") {
  auto c = combined_presentation(load("eg34.pres"), {"a", "b", "c"});
  auto r = check_quasi_commutation(c, 8);
  CHECK(r.ok());
  CHECK(r.words_checked > 0u);
}

TEST_CASE("growth series arithmetic") {
  Series one_minus{1, -1};
  auto inv = series_inverse(one_minus, 5);
  CHECK(inv == Series{1, 1, 1, 1, 1, 1});
  Series mono(6, 1);
  CHECK(free_product_growth(mono, mono, 5) == Series{1, 2, 4, 8, 16, 32});
}

TEST_CASE("growth identity against the oracle") {
  auto p1 = load("eg31.pres");
  auto p2 = load("eg34.pres");
  auto g1 = Oracle(p1).growth_series(5);
  auto g2 = Oracle(p2).growth_series(5);
  Series s1(g1.begin(), g1.end()), s2(g2.begin(), g2.end());
  auto g = Oracle(free_product(p1, p2).presentation).growth_series(5);
  CHECK(free_product_growth(s1, s2, 5) == Series(g.begin(), g.end()));
}
