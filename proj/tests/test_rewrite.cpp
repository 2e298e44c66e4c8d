#include <random>

#include "doctest.h"
#include "homog/error.hpp"
#include "homog/oracle/oracle.hpp"
#include "homog/rewrite/completion.hpp"
#include "homog/rewrite/critical.hpp"
#include "homog/rewrite/order.hpp"
#include "homog/rewrite/reduce.hpp"
#include "homog/rewrite/rules.hpp"
#include "support.hpp"

using namespace homog;
using testing_support::load;

namespace {

// Overlaps counted straight from the definition: proper suffix of l1 equal to a
// proper prefix of l2, or l2 a factor of l1 (distinct positions/rules).
std::size_t brute_overlaps(const RuleSet& rules) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& l1 = rules[i].lhs;
      const Word& l2 = rules[j].lhs;
      for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
        if (std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(), l2.begin())) ++n;
      }
      if (i != j && l2.size() <= l1.size()) {
        for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
          if (l1 == l2 && i > j) continue;
          if (std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<std::ptrdiff_t>(p))) ++n;
        }
      }
    }
  }
  return n;
}

}  // namespace

TEST_CASE("leftmost rewriting of the nine-rule system") {
  auto p = load("eg31.pres");
  Rewriter rw(rules_from_pairs(p.plain_rules()), p.alphabet);
  auto w = p.alphabet.parse_word("cbcaaa");
  auto n = rw.normalize_traced(w, kDefaultFuel, true);
  CHECK(p.alphabet.format(n.word) == "cacacb");
  CHECK(n.steps == 3u);
  REQUIRE(n.trace.size() == 3u);
  CHECK(n.trace[0].position == 0u);
  CHECK(rw.format_step(w, n.trace[0]) == "cbcaaa -> cacbaa  (rule 3 at 0)");
  CHECK(p.alphabet.format(rw.normalize(p.alphabet.parse_word("cbcaab"))) == "cacbcb");
  CHECK(rw.is_irreducible(p.alphabet.parse_word("cacacb")));
}

TEST_CASE("leftmost redex wins, lowest rule index breaks ties") {
  RuleSet rules = rules_from_pairs({{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}, {{0, 1}, {0, 0}}});
  auto s = reduce_once(rules, {1, 0, 1});
  REQUIRE(s);
  CHECK(s->position == 0u);
  CHECK(s->rule == 0u);
  auto t = reduce_once(rules, {0, 1});
  REQUIRE(t);
  CHECK(t->rule == 1u);
}

TEST_CASE("non-termination is reported with a trace") {
  RuleSet loop = rules_from_pairs({{{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}});
  Rewriter rw(loop, Alphabet({"a", "b"}));
  try {
    rw.normalize({0, 1}, 50);
    FAIL("expected NonTermination");
  } catch (const NonTermination& e) {
    CHECK_FALSE(e.trace_tail().empty());
  }
}

TEST_CASE("scheme instantiation counts") {
  auto q = load("eg34bar.pres");
  // ac, bc plus c U ab for |U| <= bound - 3
  CHECK(instantiate_schemes(q, 3).size() == 3u);
  CHECK(instantiate_schemes(q, 6).size() == 2u + 1u + 2u + 4u + 8u);
  auto s = load("eg33s.pres");
  // 3 commutations, 2 * (k <= 3), 2 * (k + l <= 2), 2 plain
  CHECK(instantiate_schemes(s, 5).size() == 3u + 8u + 12u + 2u);
  auto r = instantiate_schemes(s, 5);
  for (const auto& inst : r) CHECK(inst.lhs.size() <= 5u);
  auto inst = instantiate(s.schemes[5], {{"k", 1}, {"l", 2}}, {});
  CHECK(s.alphabet.format(inst.first) == "c1 a b1 a a d2");
  CHECK(s.alphabet.format(inst.second) == "c2 a a a b1 d1");
}

TEST_CASE("term orders") {
  Alphabet abc({"a", "b", "c"});
  auto o = TermOrder::parse("shortlex:c<a<b", abc);
  CHECK(o.less(abc.parse_word("b"), abc.parse_word("cc")));
  CHECK(o.less(abc.parse_word("ca"), abc.parse_word("ac")));
  auto r = TermOrder::parse("rtl:c<a<b", abc);
  CHECK(r.less(abc.parse_word("ac"), abc.parse_word("ca")));
  auto g = TermOrder::parse("shortlex:b>a>c", abc);
  CHECK(g.rank(2) < g.rank(0));
  CHECK(g.rank(0) < g.rank(1));
  auto w = TermOrder::parse("wlex:a=2,b=1:a>b>c", abc);
  CHECK(w.less(abc.parse_word("bb"), abc.parse_word("aa")));
  CHECK(w.less(abc.parse_word("a"), abc.parse_word("bb")));
  CHECK(w.less(abc.parse_word("b"), abc.parse_word("a")));
  CHECK_THROWS(TermOrder::parse("foo:a<b", abc));
}

TEST_CASE("termination orders found for the catalogue") {
  auto p = load("eg31.pres");
  auto rules = rules_from_pairs(p.plain_rules());
  auto o = find_termination_order(rules, p.alphabet);
  REQUIRE(o);
  CHECK(check_termination(rules, *o));
  auto s = load("eg33s.pres");
  auto so = TermOrder::parse("rtl:b1<b2<b3<a<d1<d2<d3", s.alphabet);
  CHECK(check_termination(instantiate_schemes(s, 8), so));
  CHECK_FALSE(find_termination_order(rules_from_pairs({{{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}}), Alphabet({"a", "b"})));
}

TEST_CASE("critical pairs match a brute-force overlap count") {
  for (auto name : {"eg31.pres", "eg32.pres", "eg34.pres"}) {
    auto p = load(name);
    auto rules = rules_from_pairs(p.plain_rules());
    CHECK(critical_pairs(rules).size() == brute_overlaps(rules));
  }
  auto p = load("eg31.pres");
  auto report = check_local_confluence(rules_from_pairs(p.plain_rules()));
  CHECK(report.pairs.size() == 4u);
  CHECK(report.locally_confluent());
}

TEST_CASE("the finite three-rule system is not confluent") {
  auto p = load("eg34.pres");
  auto report = check_local_confluence(rules_from_pairs(p.plain_rules()));
  CHECK_FALSE(report.locally_confluent());
  REQUIRE(report.first_failure());
  CHECK(p.alphabet.format(report.first_failure()->pair.peak) == "acab");
}

TEST_CASE("completion leaves a complete system alone") {
  auto p = load("eg31.pres");
  auto rules = rules_from_pairs(p.plain_rules());
  auto res = complete(rules, *find_termination_order(rules, p.alphabet), 50);
  CHECK(res.status == CompletionStatus::Complete);
  CHECK(res.rules.size() == 9u);
}

TEST_CASE("completion adds one rule to a small system") {
  Alphabet ab({"a", "b"});
  Presentation p{ab, {}};
  p.add_rule(ab.parse_word("bab"), ab.parse_word("aba"));
  p.add_rule(ab.parse_word("bb"), ab.parse_word("aa"));
  auto rules = rules_from_pairs(p.plain_rules());
  auto order = TermOrder::parse("shortlex:a<b", ab);
  CHECK_FALSE(check_local_confluence(rules).locally_confluent());
  auto res = complete(rules, order, 50);
  REQUIRE(res.status == CompletionStatus::Complete);
  CHECK(res.rules.size() == 3u);
  CHECK(check_local_confluence(res.rules).locally_confluent());
  CHECK(check_termination(res.rules, order));
  Oracle oracle(p);
  for (const auto& r : res.rules) CHECK(oracle.are_equal(r.lhs, r.rhs));
  // normal forms are unique per class up to length 7
  Rewriter rw(res.rules);
  for (std::size_t n = 0; n <= 7; ++n) {
    for (const auto& cls : oracle.classes_of_length(n)) {
      Word nf = rw.normalize(cls->representative());
      for (const auto& m : cls->members) CHECK(rw.normalize(m) == nf);
    }
  }
}

TEST_CASE("completion of the finite three-rule system runs away") {
  auto p = load("eg34.pres");
  auto rules = rules_from_pairs(p.plain_rules());
  auto order = TermOrder::parse("shortlex:c<b<a", p.alphabet);
  auto res = complete(rules, order, 12);
  CHECK(res.status == CompletionStatus::MaxRulesExceeded);
  Oracle oracle(p);
  auto q = load("eg34bar.pres");
  Rewriter bar(instantiate_schemes(q, 12));
  for (std::size_t i = 0; i < res.rules.size(); ++i) {
    const auto& r = res.rules[i];
    CHECK(oracle.are_equal(r.lhs, r.rhs));
    CHECK(bar.normalize(r.lhs) == bar.normalize(r.rhs));
    if (i < 2) continue;
    // every other lhs has the shape c U a b with U over {a, b}
    auto text = p.alphabet.format(r.lhs);
    CHECK(text.front() == 'c');
    CHECK(text.substr(text.size() - 2) == "ab");
    CHECK(text.find('c', 1) == std::string::npos);
  }
}

TEST_CASE("unorientable equation") {
  Alphabet ab({"a", "b"});
  auto rules = rules_from_pairs({{ab.parse_word("ab"), ab.parse_word("ba")}, {ab.parse_word("aa"), ab.parse_word("bb")}});
  auto order = TermOrder::parse("shortlex:a<b", ab);
  auto res = complete(rules, order, 20);
  CHECK(res.status == CompletionStatus::Unorientable);
}

TEST_CASE("property: normal forms are irreducible and congruent") {
  auto p = load("eg31.pres");
  auto pairs = p.plain_rules();
  Rewriter rw(rules_from_pairs(pairs));
  std::mt19937 rng(11);
  for (int t = 0; t < 120; ++t) {
    Word w(1 + rng() % 7);
    for (auto& l : w) l = static_cast<Letter>(rng() % 3);
    Word n = rw.normalize(w);
    CHECK(rw.is_irreducible(n));
    CHECK(n.size() == w.size());
    CHECK(testing_support::naive_class(pairs, w).count(n) == 1u);
  }
}
