#include "homog/catalogue/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "homog/automata/pattern.hpp"
#include "homog/autostruct/structure.hpp"
#include "homog/autostruct/witness.hpp"
#include "homog/construct/construct.hpp"
#include "homog/derivation/derivation.hpp"
#include "homog/error.hpp"
#include "homog/oracle/oracle.hpp"
#include "homog/rewrite/critical.hpp"
#include "homog/rewrite/order.hpp"
#include "homog/rewrite/reduce.hpp"
#include "homog/rewrite/rules.hpp"

#ifndef HOMOG_DATA_DIR
#define HOMOG_DATA_DIR "data"
#endif

namespace homog {

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct CompletenessResult {
  bool terminating = false;
  std::string order;
  ConfluenceReport confluence;
  bool ok() const { return terminating && confluence.locally_confluent(); }
  std::string summary() const {
    std::string s = terminating ? "terminating (" + order + ")" : "no orienting order found";
    return s + ", " + std::to_string(confluence.joinable_count()) + "/" + std::to_string(confluence.pairs.size()) +
           " pairs joinable";
  }
};

CompletenessResult completeness(const Presentation& p, std::size_t bound, const std::string& order_spec = "") {
  CompletenessResult r;
  RuleSet rules = instantiate_schemes(p, bound);
  std::optional<TermOrder> order;
  if (order_spec.empty()) {
    order = find_termination_order(rules, p.alphabet);
  } else {
    order = TermOrder::parse(order_spec, p.alphabet);
  }
  r.terminating = order && check_termination(rules, *order);
  if (order) r.order = order->describe(p.alphabet);
  std::optional<std::size_t> max_peak;
  if (!p.all_plain()) max_peak = bound;
  r.confluence = check_local_confluence(rules, kDefaultFuel, max_peak);
  return r;
}

Outcome nf_unique(const Presentation& p, const Dfa& language, std::size_t maxlen) {
  Oracle oracle(p);
  auto report = verify_normal_forms(oracle, language, maxlen);
  std::string detail = std::to_string(report.classes_checked) + " classes to length " + std::to_string(maxlen);
  if (!report.ok()) detail += "; first violation " + format_violation(p.alphabet, report.violations.front());
  return {report.ok(), detail};
}

Outcome structure(const Oracle& oracle, const MultiplierSuite& suite, std::size_t maxlen) {
  auto report = validate_structure(oracle, suite, maxlen);
  std::string detail = std::to_string(report.pairs_verified) + " pairs, " + std::to_string(report.sync_automata) +
                       " synchronous automata, maxlen " + std::to_string(maxlen);
  if (!report.ok()) detail += "; " + format_counterexample(oracle.alphabet(), report.counterexamples.front());
  return {report.ok(), detail};
}

std::string format_series(const Series& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out;
}

}  // namespace

std::filesystem::path default_data_dir() { return HOMOG_DATA_DIR; }

std::string format_cell(const CatalogueCell& c) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2fs", c.seconds);
  std::string out = std::string(c.pass ? "PASS" : "FAIL") + "  " + c.row + "  " + c.cell + "  (" + secs + ")";
  if (!c.detail.empty()) out += "  " + c.detail;
  return out;
}

std::vector<CatalogueCell> reproduce_table(const CatalogueOptions& options,
                                           const std::function<void(const CatalogueCell&)>& progress) {
  const auto dir = options.data_dir.empty() ? default_data_dir() : options.data_dir;
  const std::size_t maxlen = options.maxlen;
  const std::size_t bound = options.bound;
  std::vector<CatalogueCell> cells;

  auto run = [&](const std::string& row, const std::string& cell, const std::function<Outcome()>& f) {
    CatalogueCell c{row, cell, false, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto o = f();
      c.pass = o.pass;
      c.detail = o.detail;
    } catch (const std::exception& e) {
      c.detail = std::string("error: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress) progress(c);
    cells.push_back(std::move(c));
  };
  auto load = [&](const char* name) { return load_presentation(dir / name); };

  // eg31: complete, automatic, not biautomatic.
  run("eg31", "complete", [&] {
    auto r = completeness(load("eg31.pres"), bound);
    return Outcome{r.ok(), r.summary()};
  });
  run("eg31", "normal forms unique", [&] {
    auto p = load("eg31.pres");
    return nf_unique(p, irreducible_language(p), maxlen);
  });
  run("eg31", "automatic: right multipliers certified", [&] {
    auto suite = load_suite(dir / "eg31.suite");
    return structure(Oracle(suite.presentation), suite, maxlen);
  });
  run("eg31", "not biautomatic: refutation witness verified", [&] {
    auto p = load("eg31.pres");
    Oracle oracle(p);
    auto w = pumping_witness(p, 8, 2, &oracle);
    const auto& a = p.alphabet;
    return Outcome{w.verified(), a.format(w.base_left) + " = " + a.format(w.base_right) + "; " +
                                     a.format(w.nf_pumped_left) + " vs " + a.format(w.nf_pumped_right)};
  });

  // eg32: reversal of eg31.
  run("eg32", "is the reversal of eg31", [&] {
    bool same = serialize(reverse_presentation(load("eg31.pres"))) == serialize(load("eg32.pres"));
    return Outcome{same, ""};
  });
  run("eg32", "complete", [&] {
    auto r = completeness(load("eg32.pres"), bound);
    return Outcome{r.ok(), r.summary()};
  });
  run("eg32", "normal forms unique", [&] {
    auto p = load("eg32.pres");
    return nf_unique(p, irreducible_language(p), maxlen);
  });

  // eg33: finite R, infinite complete S.
  const std::string s_order = "rtl:b1<b2<b3<a<d1<d2<d3";
  run("eg33", "S terminating and locally confluent to bound " + std::to_string(bound), [&] {
    auto r = completeness(load("eg33s.pres"), bound, s_order);
    return Outcome{r.ok(), r.summary()};
  });
  run("eg33", "S and R define the same congruence", [&] {
    auto r = load("eg33.pres");
    auto s = load("eg33s.pres");
    Oracle oracle(r);
    std::size_t checked = 0;
    for (const auto& rule : instantiate_schemes(s, bound)) {
      ++checked;
      if (!oracle.are_equal(rule.lhs, rule.rhs)) {
        return Outcome{false, "S rule not in the congruence: " + format_rule(s.alphabet, rule)};
      }
    }
    auto s_rules = instantiate_schemes(s, bound);
    for (const auto& [l, rr] : r.plain_rules()) {
      if (Rewriter(s_rules).normalize(l) != Rewriter(s_rules).normalize(rr)) {
        return Outcome{false, "R rule not joinable under S: " + r.alphabet.format(l)};
      }
    }
    return Outcome{true, std::to_string(checked) + " S instances, " + std::to_string(r.schemes.size()) + " R rules"};
  });
  run("eg33", "irreducible language equals the stated complement", [&] {
    auto s = load("eg33s.pres");
    Dfa expected = compile_pattern(
        "~(any* (b1 a | b2 a | b3 a | c2 a* b2 | c3 a* b3 | c1 a* b1 a* [d2 d3] | b2 d2 | b3 d3) any*)", s.alphabet);
    return Outcome{equivalent(irreducible_language(s), expected), ""};
  });
  run("eg33", "normal forms unique", [&] {
    auto s = load("eg33s.pres");
    return nf_unique(load("eg33.pres"), irreducible_language(s), std::min<std::size_t>(maxlen, 4));
  });

  // eg34: biautomatic, not FDT.
  run("eg34", "finite system is not confluent", [&] {
    auto report = check_local_confluence(instantiate_schemes(load("eg34.pres"), bound));
    auto fail = report.first_failure();
    auto p = load("eg34.pres");
    return Outcome{fail != nullptr, fail ? "peak " + p.alphabet.format(fail->pair.peak) : ""};
  });
  run("eg34", "infinite system complete to bound " + std::to_string(bound), [&] {
    auto r = completeness(load("eg34bar.pres"), bound, "shortlex:c<b<a");
    return Outcome{r.ok(), r.summary()};
  });
  run("eg34", "normal forms A* ∪ c+b*a*", [&] {
    auto p = load("eg34.pres");
    return nf_unique(p, compile_pattern("[a b]* | c+ b* a*", p.alphabet), maxlen);
  });
  run("eg34", "irreducible language equals A* ∪ c+b*a*", [&] {
    auto p = load("eg34bar.pres");
    return Outcome{equivalent(irreducible_language(p), compile_pattern("[a b]* | c+ b* a*", p.alphabet)), ""};
  });
  run("eg34", "biautomatic: both-side multipliers certified", [&] {
    auto suite = load_suite(dir / "eg34.suite");
    return structure(Oracle(load("eg34.pres")), suite, maxlen);
  });
  run("eg34", "circuit images: CT1 -> 0, CT3 -> u(ab-bb)v", [&] {
    CircuitBuilder cb(load("eg34.pres"));
    std::vector<Letter> ab{cb.a(), cb.b()};
    auto words = words_up_to(ab, 3);
    std::size_t checked = 0;
    for (Letter x : ab) {
      for (const auto& u : words) {
        ++checked;
        if (!cb.phi_eval(cb.ct1(x, u)).is_zero()) return Outcome{false, "CT1 nonzero"};
      }
    }
    auto core = ab_minus_bb(cb.a(), cb.b());
    for (const auto& u : words) {
      for (const auto& v : words) {
        ++checked;
        if (cb.phi_eval(cb.ct3(u, v)) != core.multiplied(u, v)) {
          return Outcome{false, "CT3 mismatch at u=" + cb.alphabet().format(u) + " v=" + cb.alphabet().format(v)};
        }
      }
    }
    return Outcome{true, std::to_string(checked) + " circuits"};
  });
  run("eg34", "(ab-bb)a^(m+1) outside the bounded family, m=1..4", [&] {
    auto p = load("eg34.pres");
    Letter a = p.alphabet.at("a"), b = p.alphabet.at("b");
    std::string detail;
    for (std::size_t m = 1; m <= 4; ++m) {
      auto target = ab_minus_bb(a, b).multiplied({}, power(a, m + 1));
      auto r = module_membership(target, a, b, m, m + 3);
      detail += (m > 1 ? ", " : "") + std::string("m=") + std::to_string(m) + " rank " + std::to_string(r.rank);
      if (r.feasible) return Outcome{false, "feasible at m=" + std::to_string(m)};
    }
    return Outcome{true, detail};
  });

  // Free products.
  struct Row {
    const char* name;
    const char* left;
    const char* right;
    const char* left_complete;
    const char* right_complete;
  };
  const Row rows[] = {{"eg45", "eg31.pres", "eg33.pres", "eg31.pres", "eg33s.pres"},
                      {"eg46", "eg32.pres", "eg33.pres", "eg32.pres", "eg33s.pres"},
                      {"eg47", "eg31.pres", "eg34.pres", "eg31.pres", "eg34bar.pres"},
                      {"eg48", "eg32.pres", "eg34.pres", "eg32.pres", "eg34bar.pres"}};
  for (const auto& row : rows) {
    run(row.name, "presentation is the free product", [&] {
      auto fp = free_product(load(row.left), load(row.right));
      bool same = serialize(fp.presentation) == serialize(load((std::string(row.name) + ".pres").c_str()));
      return Outcome{same, ""};
    });
    run(row.name, "union of complete systems is complete", [&] {
      auto p1 = load(row.left_complete);
      auto p2 = load(row.right_complete);
      bool rtl = std::string(row.right_complete) == "eg33s.pres";
      auto c1 = completeness(p1, bound);
      auto c2 = completeness(p2, bound, rtl ? s_order : "shortlex:c<b<a");
      auto fp = free_product(p1, p2).presentation;
      auto conf = check_local_confluence(instantiate_schemes(fp, bound), kDefaultFuel, bound);
      bool ok = c1.terminating && c2.terminating && conf.locally_confluent();
      return Outcome{ok, "factors terminating; " + std::to_string(conf.joinable_count()) + "/" +
                             std::to_string(conf.pairs.size()) + " pairs joinable"};
    });
    bool small = std::string(row.right) == "eg34.pres";
    std::size_t fp_len = std::min<std::size_t>(maxlen, small ? 5 : 3);
    run(row.name, "structure language unique to length " + std::to_string(fp_len), [&] {
      auto p1 = load(row.left_complete);
      auto fp = free_product(p1, load(row.right_complete));
      auto p2 = rename_letters(load(row.right_complete), fp.renamed);
      Dfa lang = freeproduct_language(irreducible_language(p1), irreducible_language(p2));
      return nf_unique(fp.presentation, lang, fp_len);
    });
    run(row.name, "growth identity to degree " + std::to_string(fp_len), [&] {
      auto p1 = load(row.left);
      auto p2 = load(row.right);
      auto to_series = [](const std::vector<std::size_t>& g) { return Series(g.begin(), g.end()); };
      auto g1 = to_series(Oracle(p1).growth_series(fp_len));
      auto g2 = to_series(Oracle(p2).growth_series(fp_len));
      auto g = to_series(Oracle(free_product(p1, p2).presentation).growth_series(fp_len));
      auto predicted = free_product_growth(g1, g2, fp_len);
      return Outcome{g == predicted, format_series(g)};
    });
  }
  return cells;
}

}  // namespace homog
