#include "homog/rewrite/rules.hpp"

#include <functional>
#include <set>

#include "homog/error.hpp"

namespace homog {

RuleSet rules_from_pairs(const std::vector<std::pair<Word, Word>>& pairs) {
  RuleSet out;
  out.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    RuleInstance r;
    r.lhs = pairs[i].first;
    r.rhs = pairs[i].second;
    r.scheme = i;
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

Word expand(const std::vector<Atom>& side,
            const std::vector<std::pair<std::string, std::size_t>>& nat,
            const std::vector<std::pair<std::string, Word>>& words) {
  auto nat_value = [&](const std::string& name) -> std::size_t {
    for (const auto& [n, v] : nat) {
      if (n == name) return v;
    }
    throw Error("unbound variable '" + name + "'");
  };
  Word out;
  for (const auto& atom : side) {
    if (auto* la = std::get_if<LetterAtom>(&atom)) {
      out.push_back(la->letter);
    } else if (auto* pa = std::get_if<PowerAtom>(&atom)) {
      std::size_t e = pa->exponent.constant;
      for (const auto& v : pa->exponent.vars) e += nat_value(v);
      out.insert(out.end(), e, pa->letter);
    } else {
      const auto& name = std::get<WordVarAtom>(atom).name;
      bool found = false;
      for (const auto& [n, w] : words) {
        if (n == name) {
          out.insert(out.end(), w.begin(), w.end());
          found = true;
          break;
        }
      }
      if (!found) throw Error("unbound variable '" + name + "'");
    }
  }
  return out;
}

}  // namespace

std::pair<Word, Word> instantiate(const RuleScheme& scheme,
                                  const std::vector<std::pair<std::string, std::size_t>>& nat,
                                  const std::vector<std::pair<std::string, Word>>& words) {
  return {expand(scheme.lhs, nat, words), expand(scheme.rhs, nat, words)};
}

RuleSet instantiate_schemes(const Presentation& p, std::size_t bound) {
  RuleSet out;
  std::set<std::pair<Word, Word>> seen;
  for (std::size_t si = 0; si < p.schemes.size(); ++si) {
    const auto& s = p.schemes[si];
    // lhs length = fixed + sum(coef[v] * k_v) + sum |U|.
    std::size_t fixed = 0;
    std::vector<std::size_t> coef(s.nat_vars.size(), 0);
    for (const auto& atom : s.lhs) {
      if (std::holds_alternative<LetterAtom>(atom)) {
        ++fixed;
      } else if (auto* pa = std::get_if<PowerAtom>(&atom)) {
        fixed += pa->exponent.constant;
        for (const auto& v : pa->exponent.vars) {
          for (std::size_t i = 0; i < s.nat_vars.size(); ++i) {
            if (s.nat_vars[i] == v) ++coef[i];
          }
        }
      }
    }
    if (fixed > bound) continue;

    std::vector<std::pair<std::string, std::size_t>> nat;
    std::vector<std::pair<std::string, Word>> words;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t used) {
      if (idx < s.nat_vars.size()) {
        for (std::size_t k = 0;; ++k) {
          std::size_t add = coef[idx] * k;
          if (used + add > bound) break;
          nat.emplace_back(s.nat_vars[idx], k);
          rec(idx + 1, used + add);
          nat.pop_back();
          if (coef[idx] == 0) break;  // unused in lhs; validate() forbids this
        }
        return;
      }
      std::size_t widx = idx - s.nat_vars.size();
      if (widx < s.word_vars.size()) {
        const auto& var = s.word_vars[widx];
        for (auto& w : words_up_to(var.letters, bound - used)) {
          std::size_t len = w.size();
          words.emplace_back(var.name, std::move(w));
          rec(idx + 1, used + len);
          words.pop_back();
        }
        return;
      }
      auto [lhs, rhs] = instantiate(s, nat, words);
      if (lhs.empty() || !seen.insert({lhs, rhs}).second) return;
      RuleInstance r;
      r.lhs = std::move(lhs);
      r.rhs = std::move(rhs);
      r.scheme = si;
      r.nat_bindings = nat;
      r.word_bindings = words;
      out.push_back(std::move(r));
    };
    rec(0, fixed);
  }
  return out;
}

std::string format_rule(const Alphabet& alphabet, const RuleInstance& rule) {
  std::string out = alphabet.format(rule.lhs) + " -> " + alphabet.format(rule.rhs);
  if (rule.nat_bindings.empty() && rule.word_bindings.empty()) return out;
  out += "  [scheme " + std::to_string(rule.scheme + 1);
  for (const auto& [n, v] : rule.nat_bindings) out += ", " + n + "=" + std::to_string(v);
  for (const auto& [n, w] : rule.word_bindings) out += ", " + n + "=" + alphabet.format(w);
  return out + "]";
}

}  // namespace homog
