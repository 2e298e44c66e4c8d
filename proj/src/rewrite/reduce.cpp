#include "homog/rewrite/reduce.hpp"

#include <deque>

#include "homog/error.hpp"

namespace homog {

namespace {
constexpr std::size_t kTraceTail = 20;
}

Rewriter::Rewriter(RuleSet rules, std::optional<Alphabet> alphabet)
    : rules_(std::move(rules)), alphabet_(std::move(alphabet)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].lhs.empty()) throw Error("rule with empty left-hand side");
    index_.add(rules_[i].lhs, static_cast<std::uint32_t>(i));
  }
}

std::optional<Step> Rewriter::reduce_once(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    std::optional<std::size_t> best;
    index_.for_each_at(w, pos, [&](std::uint32_t id, std::size_t) {
      if (!best || id < *best) best = id;
    });
    if (best) {
      const auto& r = rules_[*best];
      return Step{splice(w, pos, r.lhs.size(), r.rhs), pos, *best};
    }
  }
  return std::nullopt;
}

std::string Rewriter::format_step(const Word& before, const Step& step) const {
  auto fmt = [&](const Word& w) {
    if (alphabet_) return alphabet_->format(w);
    std::string s;
    for (Letter l : w) s += (s.empty() ? "" : " ") + std::to_string(l);
    return s.empty() ? std::string("ε") : s;
  };
  return fmt(before) + " -> " + fmt(step.result) + "  (rule " + std::to_string(step.rule + 1) + " at " +
         std::to_string(step.position) + ")";
}

Normalization Rewriter::normalize_traced(const Word& w, std::size_t fuel, bool keep_trace) const {
  Normalization out;
  out.word = w;
  std::deque<std::pair<Word, Step>> tail;
  while (auto step = reduce_once(out.word)) {
    if (out.steps == fuel) {
      std::vector<std::string> lines;
      for (const auto& [before, s] : tail) lines.push_back(format_step(before, s));
      throw NonTermination("no normal form within " + std::to_string(fuel) + " steps", std::move(lines));
    }
    tail.emplace_back(out.word, *step);
    if (tail.size() > kTraceTail) tail.pop_front();
    ++out.steps;
    out.word = step->result;
    if (keep_trace) out.trace.push_back(std::move(*step));
  }
  return out;
}

Word Rewriter::normalize(const Word& w, std::size_t fuel) const {
  return normalize_traced(w, fuel, false).word;
}

std::optional<Step> reduce_once(const RuleSet& rules, const Word& w) {
  return Rewriter(rules).reduce_once(w);
}

Word normalize(const RuleSet& rules, const Word& w, std::size_t fuel) {
  return Rewriter(rules).normalize(w, fuel);
}

}  // namespace homog
