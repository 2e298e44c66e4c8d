#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "homog/automata/io.hpp"
#include "homog/automata/pattern.hpp"
#include "homog/automata/sync.hpp"
#include "homog/autostruct/structure.hpp"
#include "homog/autostruct/witness.hpp"
#include "homog/catalogue/reproduce.hpp"
#include "homog/construct/construct.hpp"
#include "homog/derivation/derivation.hpp"
#include "homog/error.hpp"
#include "homog/oracle/oracle.hpp"
#include "homog/rewrite/completion.hpp"
#include "homog/rewrite/critical.hpp"
#include "homog/rewrite/order.hpp"
#include "homog/rewrite/reduce.hpp"
#include "homog/rewrite/rules.hpp"

using namespace homog;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Config {
  std::size_t bound = 8;
  std::size_t maxlen = 7;
  std::size_t fuel = kDefaultFuel;
  std::size_t k = 1;
  std::string order;
  std::string out;
  std::string data;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw Error("cannot write " + cfg.out);
  f << text;
}

int run_check(const Config& cfg, const std::string& path) {
  auto p = load_presentation(path);
  auto rules = instantiate_schemes(p, cfg.bound);
  std::string line = describe(classify(p));
  if (rules.empty()) {
    std::cout << line << ", confluent vacuously\n";
    return kOk;
  }
  std::optional<TermOrder> order;
  if (!cfg.order.empty()) {
    order = TermOrder::parse(cfg.order, p.alphabet);
    if (!check_termination(rules, *order)) order.reset();
  } else {
    order = find_termination_order(rules, p.alphabet);
  }
  line += order ? ", terminating (" + order->describe(p.alphabet) + ")" : ", no orienting order found";
  std::optional<std::size_t> max_peak;
  if (!p.all_plain()) max_peak = cfg.bound;
  auto report = check_local_confluence(rules, cfg.fuel, max_peak);
  line += report.locally_confluent() ? ", locally confluent: " : ", not locally confluent: ";
  line += std::to_string(report.joinable_count()) + "/" + std::to_string(report.pairs.size()) + " pairs joinable";
  if (report.skipped) line += " (" + std::to_string(report.skipped) + " beyond bound skipped)";
  std::cout << line << "\n";
  if (auto f = report.first_failure()) {
    const auto& a = p.alphabet;
    std::cout << "non-joinable: " << a.format(f->pair.peak) << " -> " << a.format(f->left_normal) << " | "
              << a.format(f->right_normal) << "\n";
  }
  return order && report.locally_confluent() ? kOk : kFailed;
}

int run_normalize(const Config& cfg, const std::string& path, const std::string& text, bool trace) {
  auto p = load_presentation(path);
  Word w = p.alphabet.parse_word(text);
  Rewriter rw(instantiate_schemes(p, std::max(cfg.bound, w.size())), p.alphabet);
  auto n = rw.normalize_traced(w, cfg.fuel, trace);
  if (trace) {
    Word cur = w;
    for (const auto& s : n.trace) {
      std::cout << rw.format_step(cur, s) << "\n";
      cur = s.result;
    }
  }
  std::cout << p.alphabet.format(n.word) << "\nsteps: " << n.steps << "\n";
  return kOk;
}

int run_complete(const Config& cfg, const std::string& path, std::size_t max_rules) {
  auto p = load_presentation(path);
  if (cfg.order.empty()) throw ParseError("complete needs --order");
  auto order = TermOrder::parse(cfg.order, p.alphabet);
  auto r = complete(instantiate_schemes(p, cfg.bound), order, max_rules, cfg.fuel);
  Presentation out{p.alphabet, {}};
  for (const auto& rule : r.rules) out.add_rule(rule.lhs, rule.rhs);
  switch (r.status) {
    case CompletionStatus::Complete:
      std::cerr << "complete after " << r.rounds << " rounds, " << r.rules.size() << " rules\n";
      emit(cfg, serialize(out));
      return kOk;
    case CompletionStatus::MaxRulesExceeded:
      std::cerr << "stopped: more than " << max_rules << " rules after " << r.rounds << " rounds\n";
      emit(cfg, serialize(out));
      return kFailed;
    case CompletionStatus::Unorientable:
      std::cerr << "cannot orient " << p.alphabet.format(r.equation->first) << " = "
                << p.alphabet.format(r.equation->second) << "\n";
      return kFailed;
  }
  return kFailed;
}

int run_oracle(const std::string& path, const std::vector<std::string>& words) {
  Oracle oracle(load_presentation(path));
  const auto& a = oracle.alphabet();
  if (words.size() == 2) {
    bool eq = oracle.are_equal(a.parse_word(words[0]), a.parse_word(words[1]));
    std::cout << (eq ? "equal" : "not equal") << "\n";
    return kOk;
  }
  auto cls = oracle.class_of(a.parse_word(words.at(0)));
  std::cout << "class size " << cls->size() << ", representative " << a.format(cls->representative()) << "\n";
  for (const auto& m : cls->members) std::cout << a.format(m) << "\n";
  return kOk;
}

int run_growth(const Config& cfg, const std::string& path) {
  Oracle oracle(load_presentation(path));
  auto g = oracle.growth_series(cfg.maxlen);
  for (std::size_t i = 0; i < g.size(); ++i) std::cout << (i ? " " : "") << g[i];
  std::cout << "\n";
  return kOk;
}

int run_nf_verify(const Config& cfg, const std::string& path, const std::string& pattern, const std::string& dfa) {
  auto p = load_presentation(path);
  Dfa lang = !dfa.empty() ? read_dfa(read_text_file(dfa))
             : !pattern.empty() ? compile_pattern(pattern, p.alphabet)
                                : irreducible_language(p);
  auto report = verify_normal_forms(Oracle(p), lang, cfg.maxlen);
  for (const auto& v : report.violations) std::cout << format_violation(p.alphabet, v) << "\n";
  std::cout << (report.ok() ? "ok" : "violations") << ": " << report.classes_checked << " classes, "
            << report.violations.size() << " violations\n";
  return report.ok() ? kOk : kFailed;
}

int run_structure(const Config& cfg, const std::string& path, const std::string& oracle_path) {
  auto suite = load_suite(path);
  Oracle oracle(oracle_path.empty() ? suite.presentation : load_presentation(oracle_path));
  auto report = validate_structure(oracle, suite, cfg.maxlen, cfg.k);
  for (const auto& c : report.counterexamples) std::cout << format_counterexample(oracle.alphabet(), c) << "\n";
  std::cout << (report.ok() ? "certificate" : "counterexamples") << ": " << report.classes_checked
            << " classes, " << report.pairs_verified << " pairs, " << report.sync_automata
            << " synchronous automata, maxlen " << cfg.maxlen << "\n";
  return report.ok() ? kOk : kFailed;
}

Word parse_ab(const CircuitBuilder& cb, const std::string& text) { return cb.alphabet().parse_word(text); }

std::filesystem::path data_dir(const Config& cfg) {
  return cfg.data.empty() ? default_data_dir() : std::filesystem::path(cfg.data);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homogeneous monoid presentations: rewriting, oracles, automatic structures"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--bound", cfg.bound, "scheme instantiation bound")->capture_default_str();
  app.add_option("--maxlen", cfg.maxlen, "exhaustive check length")->capture_default_str();
  app.add_option("--fuel", cfg.fuel, "rewriting step limit")->capture_default_str();
  app.add_option("--order", cfg.order, "term order, e.g. shortlex:b>a>c or rtl:b1<b2<a");
  app.add_option("--out", cfg.out, "write output to this file");
  app.add_option("--data", cfg.data, "directory of bundled data files");

  std::string file, file2, word, pattern, dfa_file, oracle_file, letters;
  std::vector<std::string> words;
  bool trace = false, left = false;
  std::size_t max_rules = 200, n = 0;

  auto* check = app.add_subcommand("check", "classification, termination and critical pairs");
  check->add_option("file", file)->required();

  auto* normalize = app.add_subcommand("normalize", "normal form by leftmost rewriting");
  normalize->add_option("file", file)->required();
  normalize->add_option("word", word)->required();
  normalize->add_flag("--trace", trace, "print every step");

  auto* completion = app.add_subcommand("complete", "Knuth-Bendix completion");
  completion->add_option("file", file)->required();
  completion->add_option("--max-rules", max_rules)->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "congruence class of a word, or equality of two");
  oracle->add_option("file", file)->required();
  oracle->add_option("words", words)->required()->expected(1, 2);

  auto* growth = app.add_subcommand("growth", "number of classes per length");
  growth->add_option("file", file)->required();

  auto* nf = app.add_subcommand("nf-verify", "check a language picks one word per class");
  nf->add_option("file", file)->required();
  nf->add_option("--pattern", pattern, "regular pattern (default: irreducible words)");
  nf->add_option("--dfa", dfa_file, "automaton file");

  auto* automata = app.add_subcommand("automata", "automaton utilities");
  automata->require_subcommand(1);
  auto* irr = automata->add_subcommand("irreducible", "automaton of irreducible words");
  irr->add_option("file", file)->required();
  auto* pat = automata->add_subcommand("pattern", "compile a pattern over a presentation's letters");
  pat->add_option("file", file)->required();
  pat->add_option("pattern", pattern)->required();
  auto* sync = automata->add_subcommand("sync", "padded automaton of a transducer");
  sync->add_option("transducer", file)->required();
  sync->add_option("--k", cfg.k, "lag bound")->capture_default_str();
  sync->add_flag("--left", left, "pad on the left");
  auto* equiv = automata->add_subcommand("equiv", "language equivalence of two automata");
  equiv->add_option("a", file)->required();
  equiv->add_option("b", file2)->required();

  auto* structure = app.add_subcommand("structure", "validate a multiplier suite against the oracle");
  structure->add_option("suite", file)->required();
  structure->add_option("--k", cfg.k, "synchronization lag bound")->capture_default_str();
  structure->add_option("--oracle", oracle_file, "presentation for the oracle (default: the suite's)");

  auto* construct = app.add_subcommand("construct", "presentation constructions");
  construct->require_subcommand(1);
  auto* fp = construct->add_subcommand("free-product", "union of disjoint presentations");
  fp->add_option("a", file)->required();
  fp->add_option("b", file2)->required();
  auto* nary = construct->add_subcommand("nary", "n-ary extension");
  nary->add_option("file", file)->required();
  nary->add_option("--n", n)->required();
  auto* phi = construct->add_subcommand("phi", "image under the code embedding into {x, y}");
  phi->add_option("file", file)->required();
  auto* combined = construct->add_subcommand("combined", "Q plus the rules a_i φ -> a_i");
  combined->add_option("file", file)->required();
  combined->add_option("--letters", letters, "letters of A in order (default: all)");
  auto* embed = construct->add_subcommand("embed", "check the code embedding preserves and reflects equality");
  embed->add_option("file", file)->required();

  auto* derivation = app.add_subcommand("derivation", "paths and circuits for ac -> ca, bc -> cb, cab -> cbb");
  derivation->require_subcommand(1);
  derivation->add_option("--pres", file, "presentation (default: bundled eg34.pres)");
  auto* cu = derivation->add_subcommand("cu", "the path C_u");
  cu->add_option("u", word)->required();
  auto* ct = derivation->add_subcommand("ct", "circuit CT1 x u, CT2 u or CT3 u v, with its Φ image");
  ct->add_option("kind", pattern)->required()->check(CLI::IsMember({"CT1", "CT2", "CT3"}));
  ct->add_option("args", words)->expected(0, 2);
  auto* member = derivation->add_subcommand("membership", "(ab-bb)a^(m+1) against the family with |v| <= m");
  member->add_option("--m", n)->required();

  auto* table = app.add_subcommand("reproduce-table", "run every catalogue certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? kOk : kUsage;
  }

  try {
    if (*check) return run_check(cfg, file);
    if (*normalize) return run_normalize(cfg, file, word, trace);
    if (*completion) return run_complete(cfg, file, max_rules);
    if (*oracle) return run_oracle(file, words);
    if (*growth) return run_growth(cfg, file);
    if (*nf) return run_nf_verify(cfg, file, pattern, dfa_file);
    if (*automata) {
      if (*irr) {
        emit(cfg, write_dfa(irreducible_language(load_presentation(file))));
      } else if (*pat) {
        emit(cfg, write_dfa(compile_pattern(pattern, load_presentation(file).alphabet)));
      } else if (*sync) {
        auto t = read_transducer(read_text_file(file));
        try {
          emit(cfg, write_dfa(left ? synchronize_bounded_left(t, cfg.k) : synchronize_bounded(t, cfg.k)));
        } catch (const LagViolation& e) {
          Alphabet in(t.in_symbols()), out(t.out_symbols());
          std::cout << e.what() << ": (" << in.format(e.u()) << ", " << out.format(e.v()) << ")\n";
          return kFailed;
        }
      } else {
        bool same = equivalent(read_dfa(read_text_file(file)), read_dfa(read_text_file(file2)));
        std::cout << (same ? "equivalent" : "different") << "\n";
        return same ? kOk : kFailed;
      }
      return kOk;
    }
    if (*structure) return run_structure(cfg, file, oracle_file);
    if (*construct) {
      if (*fp) {
        auto r = free_product(load_presentation(file), load_presentation(file2));
        for (const auto& [from, to] : r.renamed) std::cerr << "renamed " << from << " -> " << to << "\n";
        emit(cfg, serialize(r.presentation));
      } else if (*nary) {
        emit(cfg, serialize(nary_extension(load_presentation(file), n)));
      } else if (*phi) {
        auto p = load_presentation(file);
        auto r = phi_presentation(p);
        for (Letter l = 0; l < p.alphabet.size(); ++l) {
          std::cerr << p.alphabet.name(l) << " -> " << r.presentation.alphabet.format(r.map.image(l)) << "\n";
        }
        emit(cfg, serialize(r.presentation));
      } else if (*combined) {
        auto p = load_presentation(file);
        std::vector<std::string> a;
        std::istringstream in(letters);
        for (std::string s; in >> s;) a.push_back(s);
        if (a.empty()) a = p.alphabet.names();
        emit(cfg, serialize(combined_presentation(p, a).presentation));
      } else {
        auto report = verify_embedding(load_presentation(file), cfg.maxlen);
        for (const auto& v : report.violations) std::cout << v << "\n";
        std::cout << (report.ok() ? "ok" : "violations") << ": " << report.classes_checked << " classes\n";
        return report.ok() ? kOk : kFailed;
      }
      return kOk;
    }
    if (*derivation) {
      CircuitBuilder cb(load_presentation(file.empty() ? data_dir(cfg) / "eg34.pres" : std::filesystem::path(file)));
      const auto& a = cb.alphabet();
      if (*member) {
        auto target = ab_minus_bb(cb.a(), cb.b()).multiplied({}, power(cb.a(), n + 1));
        auto r = module_membership(target, cb.a(), cb.b(), n, n + 3);
        std::cout << target.format(a) << ": " << (r.feasible ? "feasible" : "infeasible") << " (" << r.generators
                  << " generators, " << r.basis_words << " words, rank " << r.rank << ")\n";
        return kOk;
      }
      DerivationPath path;
      if (*cu) {
        path = cb.c_path(parse_ab(cb, word));
      } else {
        auto arg = [&](std::size_t i) { return i < words.size() ? parse_ab(cb, words[i]) : Word{}; };
        if (pattern == "CT1") {
          if (words.empty() || words[0].empty()) throw ParseError("CT1 needs a letter x");
          Word x = arg(0);
          if (x.size() != 1) throw ParseError("CT1 needs a single letter x");
          path = cb.ct1(x[0], arg(1));
        } else if (pattern == "CT2") {
          path = cb.ct2(arg(0));
        } else {
          path = cb.ct3(arg(0), arg(1));
        }
      }
      emit(cfg, format_path(a, path));
      std::cout << a.format(path.source()) << " => " << a.format(path.target()) << ", " << path.size() << " edges";
      std::string phi;
      try {
        phi = "Φ = " + cb.phi_eval(path).format(a);
      } catch (const Error&) {
        phi = "Φ undefined (two c's)";
      }
      std::cout << ", " << phi << "\n";
      return kOk;
    }
    if (*table) {
      CatalogueOptions opts{data_dir(cfg), cfg.maxlen, cfg.bound};
      bool all = true;
      reproduce_table(opts, [&](const CatalogueCell& c) {
        all = all && c.pass;
        std::cout << format_cell(c) << std::endl;
      });
      std::cout << (all ? "all certificates PASS" : "some certificates FAIL") << "\n";
      return all ? kOk : kFailed;
    }
  } catch (const NonTermination& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
