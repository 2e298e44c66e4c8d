#include "homog/rewrite/completion.hpp"

#include <set>

#include "homog/rewrite/critical.hpp"

namespace homog {

namespace {

// Removes rules whose lhs has another rule's lhs as a factor. For identical lhs
// the earlier rule survives.
RuleSet interreduce(const RuleSet& rules) {
  RuleSet out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < rules.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = rules[i].lhs;
      const auto& lj = rules[j].lhs;
      if (li == lj) {
        redundant = j < i;
      } else {
        redundant = contains_factor(li, lj);
      }
    }
    if (!redundant) out.push_back(rules[i]);
  }
  return out;
}

}  // namespace

CompletionResult complete(const RuleSet& rules, const TermOrder& order, std::size_t max_rules,
                          std::size_t fuel) {
  CompletionResult result;
  for (const auto& r : rules) {
    if (!order.greater(r.lhs, r.rhs)) {
      result.status = CompletionStatus::Unorientable;
      result.equation = {r.lhs, r.rhs};
      result.rules = rules;
      return result;
    }
  }
  RuleSet current = rules;
  while (true) {
    ++result.rounds;
    bool added = false;
    for (const auto& cp : critical_pairs(current)) {
      Rewriter rw(current);
      Word l = rw.normalize(cp.left, fuel);
      Word r = rw.normalize(cp.right, fuel);
      if (l == r) continue;
      RuleInstance rule;
      if (order.greater(l, r)) {
        rule.lhs = std::move(l);
        rule.rhs = std::move(r);
      } else if (order.greater(r, l)) {
        rule.lhs = std::move(r);
        rule.rhs = std::move(l);
      } else {
        result.status = CompletionStatus::Unorientable;
        result.equation = {l, r};
        result.rules = current;
        return result;
      }
      rule.scheme = current.size();
      current.push_back(std::move(rule));
      added = true;
      if (current.size() > max_rules) {
        result.status = CompletionStatus::MaxRulesExceeded;
        result.rules = std::move(current);
        return result;
      }
    }
    current = interreduce(current);
    if (!added) break;
  }
  result.status = CompletionStatus::Complete;
  result.rules = std::move(current);
  return result;
}

}  // namespace homog
