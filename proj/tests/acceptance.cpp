// Acceptance gate: one PASS/FAIL line per criterion, each under a fixed time
// limit. Values are recomputed here by a second route where one exists.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "homog/automata/dfa.hpp"
#include "homog/automata/pattern.hpp"
#include "homog/automata/relation_expr.hpp"
#include "homog/automata/sync.hpp"
#include "homog/autostruct/structure.hpp"
#include "homog/construct/construct.hpp"
#include "homog/derivation/derivation.hpp"
#include "homog/oracle/oracle.hpp"
#include "homog/rewrite/critical.hpp"
#include "homog/rewrite/order.hpp"
#include "homog/rewrite/reduce.hpp"
#include "homog/rewrite/rules.hpp"
#include "support.hpp"

using namespace homog;
using testing_support::data;
using testing_support::load;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail << what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << "exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && secs > limit) {
    out.ok = false;
    out.detail << "over time limit";
  }
  if (!out.ok) ++failures;
  std::printf("%s [%d] %s (%.2fs / %.0fs)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs, limit,
              out.detail.str().empty() ? "" : ": ", out.detail.str().c_str());
  std::fflush(stdout);
}

Word repeat(const Word& w, std::size_t n) {
  Word out;
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

// c+ b* a* or a word over {a, b}, checked letter by letter.
bool in_normal_form_language(const Word& w, Letter a, Letter b, Letter c) {
  std::size_t i = 0;
  while (i < w.size() && w[i] == c) ++i;
  if (i == 0) return std::none_of(w.begin(), w.end(), [&](Letter l) { return l == c; });
  while (i < w.size() && w[i] == b) ++i;
  while (i < w.size() && w[i] == a) ++i;
  return i == w.size();
}

}  // namespace

int main() {
  criterion(1, "nine-rule system: critical pairs joinable, two normal forms", 1, [](Outcome& o) {
    auto p = load("eg31.pres");
    auto rules = rules_from_pairs(p.plain_rules());
    auto report = check_local_confluence(rules);
    o.require(!report.pairs.empty() && report.locally_confluent(), "non-joinable critical pair");
    Rewriter rw(rules);
    auto nf = [&](const char* s) { return p.alphabet.format(rw.normalize(p.alphabet.parse_word(s))); };
    o.require(nf("cbcaaa") == "cacacb", "normalize(cbcaaa) = " + nf("cbcaaa"));
    o.require(nf("cbcaab") == "cacbcb", "normalize(cbcaab) = " + nf("cbcaab"));
  });

  criterion(2, "nine-rule system: normal form is the unique irreducible class member, length <= 8", 60,
            [](Outcome& o) {
              auto p = load("eg31.pres");
              Rewriter rw(rules_from_pairs(p.plain_rules()));
              Oracle oracle(p);
              std::size_t words = 0;
              for (std::size_t n = 0; n <= 8 && o.ok; ++n) {
                for (const auto& cls : oracle.classes_of_length(n)) {
                  std::vector<Word> irreducible;
                  for (const auto& m : cls->members)
                    if (rw.is_irreducible(m)) irreducible.push_back(m);
                  o.require(irreducible.size() == 1,
                            "class of " + p.alphabet.format(cls->representative()) + " has " +
                                std::to_string(irreducible.size()) + " irreducible words");
                  if (irreducible.size() != 1) break;
                  for (const auto& m : cls->members) {
                    ++words;
                    o.require(rw.normalize(m) == irreducible[0], "normalize(" + p.alphabet.format(m) + ")");
                  }
                }
              }
              o.require(words == (19683u - 1u) / 2u || !o.ok, "word count");
            });

  criterion(3, "three-rule monoid: one word of [a b]* | c+ b* a* per class, length <= 7", 60, [](Outcome& o) {
    auto p = load("eg34.pres");
    Oracle oracle(p);
    Letter a = p.alphabet.at("a"), b = p.alphabet.at("b"), c = p.alphabet.at("c");
    for (std::size_t n = 0; n <= 7; ++n) {
      // normal forms counted directly: 2^n words over {a, b}, n(n+1)/2 of shape c+ b* a*
      auto classes = oracle.classes_of_length(n);
      o.require(classes.size() == (std::size_t{1} << n) + n * (n + 1) / 2, "class count at length " + std::to_string(n));
      for (const auto& cls : classes) {
        auto hits = std::count_if(cls->members.begin(), cls->members.end(),
                                  [&](const Word& w) { return in_normal_form_language(w, a, b, c); });
        o.require(hits == 1, "class of " + p.alphabet.format(cls->representative()) + " meets the language " +
                                 std::to_string(hits) + " times");
      }
    }
    auto lang = compile_pattern("[a b]* | c+ b* a*", p.alphabet);
    o.require(verify_normal_forms(oracle, lang, 7).ok(), "compiled pattern disagrees");
  });

  criterion(4, "ten-letter scheme system: terminating, confluent at bound 8, irreducible language", 30,
            [](Outcome& o) {
              auto s = load("eg33s.pres");
              auto rules = instantiate_schemes(s, 8);
              auto order = TermOrder::parse("rtl:b1<b2<b3<a<d1<d2<d3", s.alphabet);
              o.require(check_termination(rules, order), "order does not orient every instance");
              auto report = check_local_confluence(rules, kDefaultFuel, 8);
              o.require(!report.pairs.empty() && report.locally_confluent(), "non-joinable critical pair");
              auto expected = compile_pattern(
                  "~(any* (b1 a | b2 a | b3 a | c2 a* b2 | c3 a* b3 | c1 a* b1 a* [d2 d3] | b2 d2 | b3 d3) any*)",
                  s.alphabet);
              o.require(equivalent(irreducible_language(s), expected), "irreducible language differs");
              // second route: every irreducible word up to length 5 is accepted, and vice versa
              Rewriter rw(instantiate_schemes(s, 5));
              for (const auto& w : words_up_to(s.alphabet.size(), 5)) {
                if (rw.is_irreducible(w) != expected.accepts(w)) {
                  o.require(false, "mismatch at " + s.alphabet.format(w));
                  break;
                }
              }
            });

  criterion(5, "multiplier suites validate to length 7 with lag 1", 300, [](Outcome& o) {
    auto s34 = load_suite(data("eg34.suite"));
    Oracle o34(load("eg34.pres"));
    auto r34 = validate_structure(o34, s34, 7, 1);
    o.require(r34.ok(), "two-sided suite: " +
                            (r34.ok() ? "" : format_counterexample(o34.alphabet(), r34.counterexamples.front())));
    o.require(r34.sync_automata == 16, "two-sided suite sync automata");
    auto s31 = load_suite(data("eg31.suite"));
    Oracle o31(load("eg31.pres"));
    auto r31 = validate_structure(o31, s31, 7, 1);
    o.require(r31.ok(), "right suite: " +
                            (r31.ok() ? "" : format_counterexample(o31.alphabet(), r31.counterexamples.front())));
  });

  criterion(6, "pumping witness n=8, k=2", 1, [](Outcome& o) {
    auto p = load("eg31.pres");
    Letter a = p.alphabet.at("a"), b = p.alphabet.at("b"), c = p.alphabet.at("c");
    Oracle oracle(p);
    Word base_l = concat({c}, power(a, 8), power(b, 9));
    Word base_r = concat({c}, power(b, 8), concat(power(a, 8), {b}));
    o.require(oracle.are_equal(base_l, base_r), "base pair not equal");
    Rewriter rw(rules_from_pairs(p.plain_rules()));
    Word pl = rw.normalize(concat({c}, power(a, 12), power(b, 9)));
    Word pr = rw.normalize(concat({c}, power(b, 12), concat(power(a, 8), {b})));
    o.require(pl == concat(repeat({c, a}, 6), repeat({c, b}, 5)), "normalize(c a^12 b^9) = " + p.alphabet.format(pl));
    o.require(pr == concat(repeat({c, a}, 4), repeat({c, b}, 7)),
              "normalize(c b^12 a^8 b) = " + p.alphabet.format(pr));
    o.require(pl != pr, "pumped normal forms coincide");
  });

  criterion(7, "padding round trips and bounded synchronization", 10, [](Outcome& o) {
    Alphabet ab({"a", "b"});
    PairAlphabet pa(ab.names(), ab.names());
    auto words = words_up_to(2, 6);
    for (const auto& u : words) {
      for (const auto& v : words) {
        auto r = unpad_R(pa, delta_R(pa, u, v));
        auto l = unpad_L(pa, delta_L(pa, u, v));
        if (!r || *r != std::make_pair(u, v) || !l || *l != std::make_pair(u, v)) {
          o.require(false, "round trip fails at " + ab.format(u) + ", " + ab.format(v));
          return;
        }
      }
    }
    for (const char* rel : {"(a:b | b:a)* eps:a", "id(any*) eps:b | (a:a)* b:eps", "(a:a | b:b)* (a:b b:a)*",
                            "eps:a (b:b)* a:eps | id(b*)"}) {
      auto t = parse_relation(rel, ab);
      auto sync = synchronize_bounded(t, 1);
      std::set<Word> expected;
      for (const auto& [u, v] : relation_pairs(t, 6, 6)) expected.insert(delta_R(pa, u, v));
      auto got = accepted_words(sync, 6);
      o.require(std::set<Word>(got.begin(), got.end()) == expected, std::string("sync differs for ") + rel);
    }
  });

  criterion(8, "circuit values: CT1 gives 0, CT3 gives u ab v - u bb v", 5, [](Outcome& o) {
    auto p = load("eg34.pres");
    CircuitBuilder cb(p);
    Letter a = cb.a(), b = cb.b();
    auto words = words_up_to(std::vector<Letter>{a, b}, 3);
    for (const auto& u : words) {
      for (Letter x : {a, b}) {
        auto t = cb.ct1(x, u);
        o.require(t.is_closed() && cb.phi_eval(t).is_zero(), "CT1 at " + p.alphabet.format(u));
      }
      for (const auto& v : words) {
        auto t = cb.ct3(u, v);
        FreeRingElement expected = FreeRingElement::word(concat(u, {a, b}, v)) -
                                   FreeRingElement::word(concat(u, {b, b}, v));
        o.require(t.is_closed() && cb.phi_eval(t) == expected,
                  "CT3 at " + p.alphabet.format(u) + ", " + p.alphabet.format(v));
      }
    }
  });

  criterion(9, "(ab - bb) a^(m+1) outside the bounded module, m = 1..4", 30, [](Outcome& o) {
    Letter a = 0, b = 1;
    for (std::size_t m = 1; m <= 4; ++m) {
      auto target = ab_minus_bb(a, b).multiplied({}, power(a, m + 1));
      auto r = module_membership(target, a, b, m, m + 3);
      o.require(!r.feasible, "feasible at m=" + std::to_string(m));
    }
  });

  criterion(10, "n-ary correspondence, embedding, E-rule overlaps", 120, [](Outcome& o) {
    auto comm = parse_presentation("letters: a b\nrule: ab -> ba\n");
    auto p31 = load("eg31.pres");
    for (auto [p, n] : {std::pair{comm, std::size_t{3}}, std::pair{p31, std::size_t{4}}}) {
      Oracle orig(p), ext(nary_extension(p, n));
      auto mism = compare_congruences(orig, ext, n, n + 3);
      o.require(mism.empty(), "congruences differ at " + (mism.empty() ? "" : p.alphabet.format(mism[0].word)));
    }
    auto emb = verify_embedding(load("eg34.pres"), 4);
    o.require(emb.ok(), emb.ok() ? "" : emb.violations.front());
    o.require(emb.classes_checked == 51, "embedding checked " + std::to_string(emb.classes_checked) + " classes");
    auto comb = combined_presentation(p31, p31.alphabet.names());
    RuleSet e;
    for (std::size_t i = comb.q_rules; i < comb.presentation.schemes.size(); ++i)
      e.push_back(rules_from_pairs({{comb.presentation.schemes[i].plain_lhs(), comb.presentation.schemes[i].plain_rhs()}})[0]);
    o.require(e.size() == 3, "E-rule count");
    o.require(critical_pairs(e).empty(), "E-rules overlap");
  });

  criterion(11, "free products: completeness, normal-form language, growth", 120, [](Outcome& o) {
    auto p1 = load("eg31.pres");
    auto p2 = load("eg34bar.pres");
    auto fp = free_product(p1, p2);
    auto rules = instantiate_schemes(fp.presentation, 8);
    auto order = find_termination_order(rules, fp.presentation.alphabet);
    o.require(order.has_value(), "no termination order for the union");
    auto conf = check_local_confluence(rules, kDefaultFuel, 8);
    o.require(conf.locally_confluent(), "union not locally confluent");

    auto q = load("eg34.pres");
    auto q_renamed = rename_letters(q, fp.renamed);
    auto l1 = irreducible_language(p1);
    auto l2 = compile_pattern("[a' b']* | c'+ b'* a'*", q_renamed.alphabet);
    Oracle o1(p1), o2(q_renamed);
    o.require(verify_normal_forms(o1, l1, 6).ok(), "first acceptor not unique");
    o.require(verify_normal_forms(o2, l2, 6).ok(), "second acceptor not unique");
    auto product = free_product(p1, q).presentation;
    Oracle op(product);
    auto lang = embed_symbols(freeproduct_language(l1, l2), product.alphabet.names());
    auto nf = verify_normal_forms(op, lang, 6);
    o.require(nf.ok(), nf.ok() ? "" : format_violation(product.alphabet, nf.violations.front()));

    auto g1 = o1.growth_series(5), g2 = o2.growth_series(5), g = op.growth_series(5);
    auto s = free_product_growth(Series(g1.begin(), g1.end()), Series(g2.begin(), g2.end()), 5);
    o.require(s == Series(g.begin(), g.end()), "growth identity fails");
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
