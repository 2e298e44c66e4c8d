#include "homog/rewrite/critical.hpp"

#include <algorithm>

namespace homog {

std::vector<CriticalPair> critical_pairs(const RuleSet& rules) {
  std::vector<CriticalPair> out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& l1 = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& l2 = rules[j].lhs;
      // Containment: l2 occurs inside l1.
      if (l2.size() <= l1.size() && !(i == j)) {
        bool same = l1 == l2;
        if (!(same && j < i)) {
          for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
            if (!occurs_at(l1, p, l2)) continue;
            CriticalPair cp;
            cp.peak = l1;
            cp.left = rules[i].rhs;
            cp.right = splice(l1, p, l2.size(), rules[j].rhs);
            cp.kind = OverlapKind::Containment;
            cp.outer = i;
            cp.inner = j;
            cp.inner_pos = p;
            out.push_back(std::move(cp));
          }
        }
      }
      // Proper suffix-prefix overlap: l1 = x y, l2 = y z, y non-empty.
      std::size_t max_k = std::min(l1.size(), l2.size()) - 1;
      for (std::size_t k = 1; k <= max_k; ++k) {
        if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(), l2.begin())) continue;
        std::size_t p = l1.size() - k;
        CriticalPair cp;
        cp.peak = concat(l1, Word(l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end()));
        cp.left = splice(cp.peak, 0, l1.size(), rules[i].rhs);
        cp.right = splice(cp.peak, p, l2.size(), rules[j].rhs);
        cp.kind = OverlapKind::SuffixPrefix;
        cp.outer = i;
        cp.inner = j;
        cp.inner_pos = p;
        out.push_back(std::move(cp));
      }
    }
  }
  return out;
}

std::size_t ConfluenceReport::joinable_count() const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [](const PairResolution& r) { return r.joinable; }));
}

const PairResolution* ConfluenceReport::first_failure() const {
  for (const auto& r : pairs) {
    if (!r.joinable) return &r;
  }
  return nullptr;
}

ConfluenceReport check_local_confluence(const RuleSet& rules, std::size_t fuel,
                                        std::optional<std::size_t> max_peak) {
  Rewriter rw(rules);
  ConfluenceReport report;
  for (auto& cp : critical_pairs(rules)) {
    if (max_peak && cp.peak.size() > *max_peak) {
      ++report.skipped;
      continue;
    }
    PairResolution r;
    r.left_normal = rw.normalize(cp.left, fuel);
    r.right_normal = rw.normalize(cp.right, fuel);
    r.joinable = r.left_normal == r.right_normal;
    r.pair = std::move(cp);
    report.pairs.push_back(std::move(r));
  }
  return report;
}

}  // namespace homog
