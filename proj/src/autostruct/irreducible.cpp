#include <set>

#include "homog/automata/aho_corasick.hpp"
#include "homog/automata/pattern.hpp"
#include "homog/autostruct/structure.hpp"
#include "homog/error.hpp"

namespace homog {

Dfa irreducible_language(const Presentation& p) {
  std::vector<PatternPtr> lhs_patterns;
  for (const auto& s : p.schemes) {
    std::set<std::string> used;
    std::vector<PatternPtr> parts;
    for (const auto& atom : s.lhs) {
      if (auto* la = std::get_if<LetterAtom>(&atom)) {
        parts.push_back(pat::letter(la->letter));
      } else if (auto* pa = std::get_if<PowerAtom>(&atom)) {
        for (const auto& v : pa->exponent.vars) {
          if (!used.insert(v).second) throw Error("exponent variable '" + v + "' repeats in a lhs; language not regular");
        }
        parts.push_back(pat::word(power(pa->letter, pa->exponent.constant)));
        if (!pa->exponent.vars.empty()) parts.push_back(pat::star(pat::letter(pa->letter)));
      } else {
        const auto& name = std::get<WordVarAtom>(atom).name;
        parts.push_back(pat::star(pat::any_of(s.find_word_var(name)->letters)));
      }
    }
    lhs_patterns.push_back(pat::concat(std::move(parts)));
  }
  std::vector<Letter> all;
  for (Letter l = 0; l < p.alphabet.size(); ++l) all.push_back(l);
  auto anything = pat::star(pat::any_of(all));
  auto reducible = pat::concat({anything, pat::alt(std::move(lhs_patterns)), anything});
  return compile(*pat::complement(reducible), p.alphabet.names());
}

Dfa irreducible_language_aho_corasick(const Presentation& p) {
  std::vector<Word> factors;
  for (const auto& s : p.schemes) factors.push_back(s.plain_lhs());
  return forbidden_factor_dfa(p.alphabet.names(), factors);
}

}  // namespace homog
