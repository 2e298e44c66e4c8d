#include <algorithm>
#include <set>

#include "homog/automata/sync.hpp"
#include "homog/autostruct/structure.hpp"
#include "homog/error.hpp"

namespace homog {

namespace {

using PairSet = std::set<std::pair<Word, Word>>;

Word multiply(const Word& u, Multiplier x, Side side) {
  if (!x) return u;
  Word out;
  out.reserve(u.size() + 1);
  if (side == Side::Left) out.push_back(*x);
  out.insert(out.end(), u.begin(), u.end());
  if (side == Side::Right) out.push_back(*x);
  return out;
}

// v in L with v = ux (or xu), for every u in L with |u| <= max_in.
PairSet true_pairs(const Oracle& oracle, const std::vector<Word>& inputs, const Dfa& language, Multiplier x,
                   Side side, std::size_t max_out) {
  PairSet out;
  for (const auto& u : inputs) {
    Word ux = multiply(u, x, side);
    if (ux.size() > max_out) continue;
    for (const auto& v : oracle.class_of(ux)->members) {
      if (language.accepts(v)) out.emplace(u, v);
    }
  }
  return out;
}

std::string side_name(Side s) { return s == Side::Right ? "right" : "left"; }

}  // namespace

std::vector<std::pair<Word, Word>> bounded_multiplier_table(const Oracle& oracle, const Dfa& language, Multiplier x,
                                                            std::size_t maxlen, Side side) {
  if (language.symbols() != oracle.alphabet().names()) throw Error("language alphabet differs from presentation");
  auto pairs = true_pairs(oracle, accepted_words(language, maxlen), language, x, side, maxlen);
  return {pairs.begin(), pairs.end()};
}

StructureReport validate_structure(const Oracle& oracle, const MultiplierSuite& suite, std::size_t maxlen,
                                   std::size_t k, std::size_t max_counterexamples) {
  const auto& alphabet = oracle.alphabet();
  const Dfa& lang = suite.acceptor;
  if (lang.symbols() != alphabet.names()) throw Error("acceptor alphabet differs from presentation");
  StructureReport report;
  auto full = [&] { return report.counterexamples.size() >= max_counterexamples; };
  auto add = [&](Counterexample c) {
    if (!full()) report.counterexamples.push_back(std::move(c));
  };

  // (a) coverage
  for (std::size_t n = 0; n <= maxlen && !full(); ++n) {
    for (const auto& cls : oracle.classes_of_length(n)) {
      ++report.classes_checked;
      bool met = std::any_of(cls->members.begin(), cls->members.end(), [&](const Word& w) { return lang.accepts(w); });
      if (!met) add({"coverage", Side::Right, std::nullopt, cls->representative(), {}, true, false, ""});
    }
  }

  auto inputs = accepted_words(lang, maxlen);
  PairAlphabet pa(alphabet.names(), alphabet.names());
  std::vector<std::pair<Side, const std::map<Multiplier, Transducer>*>> sides{{Side::Right, &suite.right}};
  if (suite.both_sides) sides.emplace_back(Side::Left, &suite.left);

  for (const auto& [side, table] : sides) {
    for (const auto& [x, t] : *table) {
      if (full()) return report;
      Transducer restricted = restrict(t, lang, lang);

      // (b) exact agreement with the monoid
      PairSet expected = true_pairs(oracle, inputs, lang, x, side, maxlen + 1);
      PairSet got;
      for (const auto& u : inputs) {
        for (auto& v : restricted.outputs(u, maxlen + 1)) got.emplace(u, std::move(v));
      }
      bool agree = true;
      for (const auto& p : got) {
        if (!expected.count(p)) {
          agree = false;
          add({"multiplier", side, x, p.first, p.second, false, true, ""});
        }
      }
      for (const auto& p : expected) {
        if (!got.count(p)) {
          agree = false;
          add({"multiplier", side, x, p.first, p.second, true, false, ""});
        }
      }
      if (agree) report.pairs_verified += expected.size();

      // (c) synchronous automata
      std::vector<bool> paddings{true};
      if (suite.both_sides) paddings.push_back(false);
      for (bool right_pad : paddings) {
        Dfa sync;
        try {
          sync = right_pad ? synchronize_bounded(restricted, k) : synchronize_bounded_left(restricted, k);
        } catch (const LagViolation& e) {
          add({"sync", side, x, e.u(), e.v(), false, true, e.what()});
          continue;
        }
        ++report.sync_automata;
        PairSet decoded;
        for (const auto& s : accepted_words(sync, maxlen + 1)) {
          auto p = right_pad ? unpad_R(pa, s) : unpad_L(pa, s);
          if (!p) {
            add({"sync", side, x, {}, {}, false, true, "accepted string is not a padding"});
            continue;
          }
          if (p->first.size() <= maxlen) decoded.insert(std::move(*p));
        }
        std::string pad = right_pad ? "δ_R" : "δ_L";
        for (const auto& p : decoded) {
          if (!expected.count(p)) add({"sync", side, x, p.first, p.second, false, true, pad});
        }
        for (const auto& p : expected) {
          if (!decoded.count(p)) add({"sync", side, x, p.first, p.second, true, false, pad});
        }
      }
    }
  }
  return report;
}

std::string format_counterexample(const Alphabet& alphabet, const Counterexample& c) {
  if (c.check == "coverage") {
    return "[coverage] class-rep=" + alphabet.format(c.u) + " has no member in the acceptor";
  }
  std::string head = "[" + c.check + "] " + side_name(c.side) + " " + (c.letter ? alphabet.name(*c.letter) : "eps");
  std::string out = head + ": u=" + alphabet.format(c.u) + " v=" + alphabet.format(c.v) +
                    " expected=" + (c.expected ? "yes" : "no") + " got=" + (c.got ? "yes" : "no");
  if (!c.note.empty()) out += " (" + c.note + ")";
  return out;
}

Dfa freeproduct_language(const Dfa& l1, const Dfa& l2) {
  std::vector<std::string> symbols = l1.symbols();
  for (const auto& s : l2.symbols()) {
    if (std::find(symbols.begin(), symbols.end(), s) != symbols.end()) {
      throw Error("free product factors share the symbol '" + s + "'");
    }
    symbols.push_back(s);
  }
  Dfa a = embed_symbols(l1, symbols);
  Dfa b = embed_symbols(l2, symbols);
  Dfa eps = word_dfa(symbols, {});
  Dfa a1 = difference(a, eps);
  Dfa b1 = difference(b, eps);
  return minimize(concatenate(a, concatenate(star(concatenate(b1, a1)), b)));
}

}  // namespace homog
