#include "homog/oracle/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "homog/error.hpp"

namespace homog {

bool CongruenceClass::contains(const Word& w) const {
  return std::binary_search(members.begin(), members.end(), w, shortlex_less);
}

Oracle::Oracle(Presentation p, std::size_t word_cap) : p_(std::move(p)), word_cap_(word_cap) {
  if (!classify(p_).homogeneous) throw Error("presentation is not homogeneous; congruence classes may be infinite");
}

const Oracle::LengthRules& Oracle::rules_for(std::size_t n) const {
  auto it = rules_.find(n);
  if (it != rules_.end()) return *it->second;
  auto lr = std::make_unique<LengthRules>();
  for (const auto& r : instantiate_schemes(p_, n)) {
    if (r.lhs == r.rhs) continue;
    lr->moves.emplace_back(r.lhs, r.rhs);
    lr->moves.emplace_back(r.rhs, r.lhs);
  }
  for (std::size_t i = 0; i < lr->moves.size(); ++i) {
    if (!lr->moves[i].first.empty()) lr->index.add(lr->moves[i].first, static_cast<std::uint32_t>(i));
  }
  return *rules_.emplace(n, std::move(lr)).first->second;
}

ClassPtr Oracle::class_of(const Word& w) const {
  std::lock_guard lock(mutex_);
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  for (Letter l : w) {
    if (l >= p_.alphabet.size()) throw Error("letter outside alphabet");
  }
  const auto& lr = rules_for(w.size());
  std::unordered_set<Word, WordHash> seen{w};
  std::vector<Word> frontier{w};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& x : frontier) {
      for (std::size_t pos = 0; pos < x.size(); ++pos) {
        lr.index.for_each_at(x, pos, [&](std::uint32_t id, std::size_t len) {
          Word y = splice(x, pos, len, lr.moves[id].second);
          if (seen.insert(y).second) {
            if (seen.size() > word_cap_) throw LimitExceeded("congruence class exceeds word cap");
            next.push_back(std::move(y));
          }
        });
      }
    }
    frontier = std::move(next);
  }
  auto cls = std::make_shared<CongruenceClass>();
  cls->members.assign(seen.begin(), seen.end());
  std::sort(cls->members.begin(), cls->members.end(), shortlex_less);
  ClassPtr shared = cls;
  for (const auto& m : shared->members) cache_.emplace(m, shared);
  return shared;
}

bool Oracle::are_equal(const Word& u, const Word& v) const {
  if (u.size() != v.size()) return false;
  if (u == v) return true;
  {
    std::lock_guard lock(mutex_);
    for (const Word* w : {&u, &v}) {
      if (auto it = cache_.find(*w); it != cache_.end()) return it->second->contains(w == &u ? v : u);
    }
  }
  // Grow a ball around each word, always expanding the smaller frontier, until
  // they touch or one side runs out (then that side is the whole class).
  const auto& lr = [&]() -> const LengthRules& {
    std::lock_guard lock(mutex_);
    return rules_for(u.size());
  }();
  struct Side {
    std::unordered_set<Word, WordHash> seen;
    std::vector<Word> frontier;
  };
  Side a{{u}, {u}}, b{{v}, {v}};
  while (true) {
    Side& grow = a.frontier.size() <= b.frontier.size() ? a : b;
    const Side& other = &grow == &a ? b : a;
    if (grow.frontier.empty()) return false;
    std::vector<Word> next;
    for (const auto& x : grow.frontier) {
      bool met = false;
      for (std::size_t pos = 0; pos < x.size() && !met; ++pos) {
        lr.index.for_each_at(x, pos, [&](std::uint32_t id, std::size_t len) {
          if (met) return;
          Word y = splice(x, pos, len, lr.moves[id].second);
          if (other.seen.count(y)) {
            met = true;
          } else if (grow.seen.insert(y).second) {
            if (a.seen.size() + b.seen.size() > word_cap_) throw LimitExceeded("equality search exceeds word cap");
            next.push_back(std::move(y));
          }
        });
      }
      if (met) return true;
    }
    grow.frontier = std::move(next);
  }
}

std::vector<ClassPtr> Oracle::classes_of_length(std::size_t n) const {
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(p_.alphabet.size());
  if (total > static_cast<double>(word_cap_)) {
    throw LimitExceeded("length " + std::to_string(n) + " slice exceeds word cap");
  }
  std::vector<ClassPtr> out;
  std::unordered_set<const CongruenceClass*> seen;
  for_each_word(p_.alphabet.size(), n, [&](const Word& w) {
    auto c = class_of(w);
    if (seen.insert(c.get()).second) out.push_back(std::move(c));
  });
  return out;
}

std::vector<std::size_t> Oracle::growth_series(std::size_t maxlen) const {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= maxlen; ++n) out.push_back(classes_of_length(n).size());
  return out;
}

NormalFormReport verify_normal_forms(const Oracle& oracle, const Dfa& language, std::size_t maxlen) {
  if (language.symbols() != oracle.alphabet().names()) throw Error("language alphabet differs from presentation");
  NormalFormReport report;
  for (std::size_t n = 0; n <= maxlen; ++n) {
    for (const auto& cls : oracle.classes_of_length(n)) {
      ++report.classes_checked;
      std::size_t accepted = static_cast<std::size_t>(
          std::count_if(cls->members.begin(), cls->members.end(), [&](const Word& w) { return language.accepts(w); }));
      if (accepted != 1) report.violations.push_back({n, cls->representative(), accepted});
    }
  }
  return report;
}

std::string format_violation(const Alphabet& alphabet, const NormalFormViolation& v) {
  return "length=" + std::to_string(v.length) + " class-rep=" + alphabet.format(v.representative) +
         " accepted=" + std::to_string(v.accepted);
}

}  // namespace homog
