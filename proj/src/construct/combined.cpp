#include <deque>
#include <unordered_set>

#include "homog/construct/construct.hpp"
#include "homog/error.hpp"
#include "homog/rewrite/rules.hpp"

namespace homog {

CombinedPresentation combined_presentation(const Presentation& q, const std::vector<std::string>& a_letters) {
  Presentation xy;
  xy.alphabet = PhiMap::target_alphabet();
  auto fp = free_product(xy, q);
  if (!fp.renamed.empty()) throw Error("B must not use the letter names x or y");
  CombinedPresentation out{std::move(fp.presentation), q.schemes.size(), PhiMap::standard(a_letters.size())};
  for (std::size_t i = 0; i < a_letters.size(); ++i) {
    auto b = q.alphabet.find(a_letters[i]);
    if (!b) throw Error("letter '" + a_letters[i] + "' of A is not in B");
    out.presentation.add_rule(out.map.image(static_cast<Letter>(i)), Word{static_cast<Letter>(*b + 2)});
  }
  return out;
}

namespace {

std::vector<Word> successors(const RuleSet& rules, const Word& w) {
  std::vector<Word> out;
  for (const auto& r : rules) {
    if (r.lhs.empty() || r.lhs.size() > w.size()) continue;
    for (std::size_t pos = 0; pos + r.lhs.size() <= w.size(); ++pos) {
      if (occurs_at(w, pos, r.lhs)) out.push_back(splice(w, pos, r.lhs.size(), r.rhs));
    }
  }
  return out;
}

bool reaches(const RuleSet& rules, const Word& from, const Word& to) {
  std::unordered_set<Word, WordHash> seen{from};
  std::deque<Word> queue{from};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    if (w == to) return true;
    for (auto& s : successors(rules, w)) {
      if (s.size() < to.size()) continue;  // no rule lengthens a word
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
  }
  return false;
}

}  // namespace

QuasiCommutationReport check_quasi_commutation(const CombinedPresentation& c, std::size_t maxlen) {
  Presentation qp{c.presentation.alphabet, {c.presentation.schemes.begin(), c.presentation.schemes.begin() + c.q_rules}};
  Presentation ep{c.presentation.alphabet, {c.presentation.schemes.begin() + c.q_rules, c.presentation.schemes.end()}};
  RuleSet q = instantiate_schemes(qp, maxlen);
  RuleSet e = instantiate_schemes(ep, maxlen);
  RuleSet all = q;
  all.insert(all.end(), e.begin(), e.end());
  QuasiCommutationReport report;
  for (std::size_t len = 0; len <= maxlen; ++len) {
    for_each_word(c.presentation.alphabet.size(), len, [&](const Word& w) {
      ++report.words_checked;
      auto qs = successors(q, w);
      if (qs.empty()) return;
      std::vector<Word> es;
      bool failed = false;
      for (const auto& w1 : qs) {
        for (const auto& w2 : successors(e, w1)) {
          ++report.peaks_checked;
          if (es.empty()) es = successors(e, w);
          bool ok = false;
          for (const auto& bar : es) {
            if (reaches(all, bar, w2)) {
              ok = true;
              break;
            }
          }
          if (!ok) failed = true;
        }
      }
      if (failed) report.failures.push_back(w);
    });
  }
  return report;
}

}  // namespace homog
